#pragma once

// Desk-scale stand-ins for the two watermark channels: a synthetic token
// sampler whose per-bit marginals come from a Beta distribution (the
// entropy knob is the concentration), and a sign-embedded Gaussian latent
// with additive inversion noise and erf soft recovery.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "prc/gf2.hpp"
#include "prc/rng.hpp"

namespace prc {

namespace detail {

// Marsaglia-Tsang for shape >= 1, boosted for shape < 1.
inline double gamma_sample(double shape, Rng& rng) {
    if (shape < 1.0) {
        double u = rng.uniform01();
        while (u <= 0.0) u = rng.uniform01();
        return gamma_sample(shape + 1.0, rng) * std::pow(u, 1.0 / shape);
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x = rng.normal();
        double v = 1.0 + c * x;
        if (v <= 0.0) continue;
        v = v * v * v;
        double u = rng.uniform01();
        if (u < 1.0 - 0.0331 * x * x * x * x) return d * v;
        if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return d * v;
    }
}

inline double beta_sample(double a, double b, Rng& rng) {
    double x = gamma_sample(a, rng);
    double y = gamma_sample(b, rng);
    return x / (x + y);
}

}  // namespace detail

struct SyntheticTokenModel {
    uint32_t vocab_bits = 1;
    double entropy_knob = 1e9;  // Beta concentration; larger = marginals closer to 1/2

    // One marginal p' per upcoming bit.
    std::vector<double> marginals(size_t count, Rng& rng) const {
        std::vector<double> ps(count);
        for (auto& p : ps) {
            if (entropy_knob >= 1e8)
                p = 0.5;
            else
                p = detail::beta_sample(entropy_knob, entropy_knob, rng);
        }
        return ps;
    }
};

// Two-branch biased sampler: the emitted bit follows the model marginal p'
// while carrying the codeword bit whenever the marginal leaves room.
inline BitVector sample_token_bits(const std::vector<double>& p_prime,
                                   const BitVector& codeword_chunk, uint64_t seed) {
    if (p_prime.size() != codeword_chunk.size())
        throw std::invalid_argument("sample_token_bits: stream length mismatch");
    Rng rng(seed);
    BitVector out(codeword_chunk.size());
    for (size_t i = 0; i < p_prime.size(); ++i) {
        double p = p_prime[i];
        if (p < 0.0 || p > 1.0) throw std::invalid_argument("sample_token_bits: p' outside [0,1]");
        double x = codeword_chunk.get(i) ? 1.0 : 0.0;
        double prob = p <= 0.5 ? 2.0 * p * x : 1.0 - 2.0 * (1.0 - p) * (1.0 - x);
        if (rng.bernoulli(prob)) out.set(i, true);
    }
    return out;
}

// The extractor is the bit stream itself; only the token framing is checked.
inline BitVector extract_bits(const BitVector& token_bits, uint32_t vocab_bits) {
    if (vocab_bits == 0 || token_bits.size() % vocab_bits != 0)
        throw std::invalid_argument("extract_bits: length not divisible by vocab bits");
    return token_bits;
}

struct GimChannelParams {
    double sigma = 1.0;              // error calibration factor
    double inversion_noise_std = 0;  // additive Gaussian on the latent
};

// Latent y_i = (1 - 2 x_i) |N(0,1)|: sign carries the bit, magnitude
// half-normal, marginal standard normal for balanced x.
inline std::vector<double> embed_gim_latent(const BitVector& codeword, uint64_t seed) {
    Rng rng(seed);
    std::vector<double> y(codeword.size());
    for (size_t i = 0; i < y.size(); ++i) {
        double mag = std::fabs(rng.normal());
        y[i] = codeword.get(i) ? -mag : mag;
    }
    return y;
}

inline std::vector<double> add_inversion_noise(const std::vector<double>& latent, double std_dev,
                                               uint64_t seed) {
    Rng rng(seed);
    std::vector<double> out(latent.size());
    for (size_t i = 0; i < latent.size(); ++i) out[i] = latent[i] + std_dev * rng.normal();
    return out;
}

struct GimRecovery {
    std::vector<double> soft;  // in [-1, 1]; positive means bit 0
    BitVector hard;
};

inline GimRecovery recover_gim_codeword(const std::vector<double>& latent,
                                        const GimChannelParams& params) {
    if (!(params.sigma > 0.0)) throw std::invalid_argument("recover_gim_codeword: sigma <= 0");
    GimRecovery rec;
    rec.soft.resize(latent.size());
    rec.hard = BitVector(latent.size());
    double denom = std::sqrt(2.0 * params.sigma * params.sigma * (1.0 + params.sigma * params.sigma));
    for (size_t i = 0; i < latent.size(); ++i) {
        rec.soft[i] = std::erf(latent[i] / denom);
        if (rec.soft[i] < 0.0) rec.hard.set(i, true);
    }
    return rec;
}

// Flip probability of the sign under additive N(0, s^2) noise on a
// sign-embedded half-normal magnitude is arctan(s)/pi, so the noise level
// hitting a target flip rate q is s = tan(pi q).
inline double calibrate_inversion_noise(double target_flip_rate) {
    if (!(target_flip_rate > 0.0 && target_flip_rate < 0.5))
        throw std::invalid_argument("calibrate_inversion_noise: rate must be in (0, 1/2)");
    return std::tan(M_PI * target_flip_rate);
}

// One-sample Kolmogorov-Smirnov statistic against the standard normal CDF.
inline double ks_statistic_vs_normal(std::vector<double> samples) {
    std::sort(samples.begin(), samples.end());
    const double n = static_cast<double>(samples.size());
    double d = 0.0;
    for (size_t i = 0; i < samples.size(); ++i) {
        double cdf = 0.5 * std::erfc(-samples[i] / std::sqrt(2.0));
        double lo = static_cast<double>(i) / n;
        double hi = static_cast<double>(i + 1) / n;
        d = std::max(d, std::max(std::fabs(cdf - lo), std::fabs(hi - cdf)));
    }
    return d;
}

// Audit record of one simulated token-channel position.
struct ChannelTranscriptEntry {
    double p_prime = 0.0;
    bool embedded = false;
    bool sampled = false;
};

}  // namespace prc

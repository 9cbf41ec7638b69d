#pragma once

// Public-key-free distinguishers: pair up codewords so the one-time pad
// cancels, then probe the differences with low-weight parity vectors. The
// weight-t variant targets the sparse dual rows directly; the weight-2
// variant exploits (unknown) duplicated G rows.

#include <cmath>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <vector>

#include "prc/gf2.hpp"
#include "prc/ldpc.hpp"
#include "prc/mathutil.hpp"
#include "prc/rng.hpp"

namespace prc {

struct PkFreeConfig {
    uint32_t weight = 3;     // parity vector weight (t, or 2 for the weak-key variant)
    uint64_t n_times = 0;    // parity vectors to try; 0 = 3 C(n,weight)/r heuristic
    double tau1 = 0.0;       // per-vector zero-count threshold; 0 = derive from omega
    uint64_t tau2 = 0;       // counter threshold on triggered vectors
    double omega = 0.0;      // channel rate used to derive tau1 when tau1 = 0
};

inline uint32_t default_pair_count(uint32_t n) {
    double lg = std::ceil(std::log2(static_cast<double>(n)));
    return static_cast<uint32_t>(2.0 * lg * lg);
}

// Effective noise rate of a codeword difference: each bit differs when
// exactly one of the two errors hit it.
inline double pair_noise_rate(double omega) { return 2.0 * omega * (1.0 - omega); }

// Midpoint between the unbiased rate 1/2 and the biased zero-rate
// (1 + (1-2w')^t)/2 seen by a true weight-t parity of the dual.
inline double pkfree_tau1(double omega, uint32_t weight) {
    double wp = pair_noise_rate(omega);
    return 0.5 * (1.0 + 0.5 * std::pow(1.0 - 2.0 * wp, static_cast<double>(weight)));
}

// Heuristic rate estimate from the mean difference weight, inverting
// w' = 2w(1-w).
inline double estimate_omega_from_pairs(const std::vector<BitVector>& ys) {
    if (ys.empty()) throw std::invalid_argument("estimate_omega_from_pairs: empty");
    double mean = 0.0;
    for (const BitVector& y : ys) mean += static_cast<double>(y.weight()) / y.size();
    mean /= ys.size();
    double inner = 1.0 - 2.0 * mean;
    if (inner < 0.0) inner = 0.0;
    return 0.5 * (1.0 - std::sqrt(inner));
}

inline std::vector<BitVector> pairwise_differences(const std::vector<Codeword>& targets) {
    if (targets.size() % 2 != 0)
        throw std::invalid_argument("pairwise_differences: need an even target count");
    const size_t m = targets.size() / 2;
    std::vector<BitVector> ys;
    ys.reserve(m);
    for (size_t i = 0; i < m; ++i) ys.push_back(targets[i].x ^ targets[i + m].x);
    return ys;
}

struct PkFreeVerdict {
    uint64_t s_counter = 0;  // parity vectors whose zero count cleared tau1 m
    uint64_t n_times = 0;
    double tau1 = 0.0;
    uint64_t tau2 = 0;
    bool verdict = false;
    std::vector<std::vector<uint32_t>> triggered;  // supports of triggering vectors
};

inline PkFreeVerdict pkfree_distinguish(const std::vector<Codeword>& targets,
                                        const PkFreeConfig& cfg, uint64_t seed) {
    std::vector<BitVector> ys = pairwise_differences(targets);
    const size_t m = ys.size();
    const uint32_t n = static_cast<uint32_t>(targets.front().x.size());
    const uint32_t w = cfg.weight;
    double log2_space = log2_binom(n, w);
    double space = std::exp2(log2_space);
    uint64_t n_times = cfg.n_times;
    if (n_times == 0)
        n_times = static_cast<uint64_t>(std::ceil(3.0 * space / (0.99 * n)));
    if (log2_space < 60 && static_cast<double>(n_times) > space)
        throw std::invalid_argument("pkfree_distinguish: n_times exceeds the weight slice");
    double tau1 = cfg.tau1 > 0.0 ? cfg.tau1 : pkfree_tau1(cfg.omega, w);

    PkFreeVerdict out;
    out.n_times = n_times;
    out.tau1 = tau1;
    out.tau2 = cfg.tau2;
    const double bar = tau1 * static_cast<double>(m);

    auto probe = [&](const std::vector<uint32_t>& sup) {
        uint64_t n_zero = 0;
        for (const BitVector& y : ys) {
            unsigned parity = 0;
            for (uint32_t j : sup) parity ^= y.get(j) ? 1u : 0u;
            if (!parity) ++n_zero;
        }
        if (static_cast<double>(n_zero) > bar) {
            ++out.s_counter;
            if (out.triggered.size() < 64) out.triggered.push_back(sup);
        }
    };

    bool exhaustive = log2_space < 40 && static_cast<double>(n_times) >= 0.5 * space;
    if (exhaustive) {
        // enumerate the whole slice (or a prefix of it when n_times < space)
        std::vector<uint32_t> sup(w);
        for (uint32_t i = 0; i < w; ++i) sup[i] = i;
        uint64_t done = 0;
        while (done < n_times) {
            probe(sup);
            ++done;
            int pos = static_cast<int>(w) - 1;
            while (pos >= 0 && sup[pos] == n - (w - pos)) --pos;
            if (pos < 0) break;
            ++sup[pos];
            for (uint32_t q = pos + 1; q < w; ++q) sup[q] = sup[q - 1] + 1;
        }
    } else {
        Rng rng(seed);
        std::set<std::vector<uint32_t>> seen;
        while (seen.size() < n_times) {
            std::vector<uint32_t> sup = rng.distinct(n, w);
            if (seen.insert(sup).second) probe(sup);
        }
    }
    out.verdict = out.s_counter > out.tau2;
    return out;
}

}  // namespace prc

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "prc/mathutil.hpp"

namespace prc {

enum class Scheme { LLM, GIM, REVISED };

inline std::string scheme_name(Scheme s) {
    switch (s) {
        case Scheme::LLM: return "llm";
        case Scheme::GIM: return "gim";
        case Scheme::REVISED: return "revised";
    }
    throw std::logic_error("bad scheme");
}

inline Scheme scheme_from_name(const std::string& s) {
    if (s == "llm") return Scheme::LLM;
    if (s == "gim") return Scheme::GIM;
    if (s == "revised") return Scheme::REVISED;
    throw std::invalid_argument("unknown scheme: " + s);
}

// GIM payload accounting: message bits plus parity bits sized for a 1e-5
// false-positive budget.
constexpr uint32_t GIM_MESSAGE_BITS = 512;
constexpr uint32_t GIM_PARITY_BITS = 17;  // ceil(|log2(1e-5)|)

struct PrcParams {
    uint32_t n = 0;       // code length
    uint32_t r = 0;       // secret parity rows
    uint32_t g = 0;       // public generator columns
    uint32_t t = 0;       // secret row weight
    uint32_t lambda = 0;  // claimed security bits
    double omega = 0.0;   // encode-time noise rate
    Scheme scheme = Scheme::LLM;

    void validate() const {
        if (!(r > 0 && r < n)) throw std::invalid_argument("params: need 0 < r < n");
        if (!(g > 0 && g < n)) throw std::invalid_argument("params: need 0 < g < n");
        if (!(t >= 3 && t <= n)) throw std::invalid_argument("params: need 3 <= t <= n");
        if (!(omega >= 0.0 && omega < 0.5)) throw std::invalid_argument("params: need 0 <= omega < 1/2");
        if (scheme == Scheme::LLM) {
            uint32_t lam = static_cast<uint32_t>(std::floor(log2_binom(n, t)));
            if (r != static_cast<uint32_t>(std::floor(0.99 * n)))
                throw std::invalid_argument("params(llm): r must be floor(0.99 n)");
            if (g != lam || lambda != lam)
                throw std::invalid_argument("params(llm): g and lambda must be floor(log2 C(n,t))");
        } else if (scheme == Scheme::GIM) {
            uint32_t lam = static_cast<uint32_t>(std::floor(log2_binom(n, t)));
            uint32_t k = lam + GIM_MESSAGE_BITS + GIM_PARITY_BITS;
            if (g != lam || lambda != lam)
                throw std::invalid_argument("params(gim): g and lambda must be floor(log2 C(n,t))");
            if (static_cast<uint64_t>(k) + lam >= n || r != n - k - lam)
                throw std::invalid_argument("params(gim): r must be n - k - lambda");
        }
    }

    // Scheme defaults. For REVISED, g defaults to floor(log2 C(n,t)) and
    // r to min(n - g, floor(0.9 n)); iid sparse rows stop being full rank
    // w.h.p. once r/n crosses ~0.9179 at t = 3, so the default stays under
    // that. Both may be overridden before validate().
    static PrcParams configured(Scheme scheme, uint32_t n, uint32_t t, double omega = 0.0) {
        PrcParams p;
        p.scheme = scheme;
        p.n = n;
        p.t = t;
        p.omega = omega;
        uint32_t lam = static_cast<uint32_t>(std::floor(log2_binom(n, t)));
        p.lambda = lam;
        p.g = lam;
        switch (scheme) {
            case Scheme::LLM:
                p.r = static_cast<uint32_t>(std::floor(0.99 * n));
                break;
            case Scheme::GIM: {
                uint32_t k = lam + GIM_MESSAGE_BITS + GIM_PARITY_BITS;
                if (static_cast<uint64_t>(k) + lam >= n)
                    throw std::invalid_argument("params(gim): n too small for payload accounting");
                p.r = n - k - lam;
                break;
            }
            case Scheme::REVISED:
                p.r = std::min(n - p.g, static_cast<uint32_t>(std::floor(0.9 * n)));
                break;
        }
        p.validate();
        return p;
    }

    // Decode acceptance bound: floor((1/2 - r^{-1/4}) * r).
    uint64_t decode_threshold() const {
        long double rr = static_cast<long double>(r);
        long double th = (0.5L - std::pow(rr, -0.25L)) * rr;
        if (th < 0) return 0;
        return static_cast<uint64_t>(std::floor(th));
    }
};

}  // namespace prc

#pragma once

// Seedable deterministic generator used everywhere in the library.
// xoshiro256** seeded through splitmix64; fixed so that two runs (or two
// implementations) given the same seed produce identical bit streams.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <vector>

namespace prc {

inline uint64_t splitmix64(uint64_t& state) {
    uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class Rng {
  public:
    explicit Rng(uint64_t seed) : seed_(seed) {
        uint64_t sm = seed;
        for (auto& w : s_) w = splitmix64(sm);
    }

    uint64_t seed() const { return seed_; }

    uint64_t u64() {
        const uint64_t result = rotl(s_[1] * 5, 7) * 9;
        const uint64_t t = s_[1] << 17;
        s_[2] ^= s_[0];
        s_[3] ^= s_[1];
        s_[1] ^= s_[2];
        s_[0] ^= s_[3];
        s_[2] ^= t;
        s_[3] = rotl(s_[3], 45);
        return result;
    }

    // Unbiased integer in [0, bound) via rejection.
    uint64_t below(uint64_t bound) {
        const uint64_t threshold = -bound % bound;
        for (;;) {
            uint64_t r = u64();
            if (r >= threshold) return r % bound;
        }
    }

    double uniform01() { return (u64() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform01() < p; }

    bool bit() { return (u64() >> 63) != 0; }

    // Polar Box-Muller, one spare cached.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform01() - 1.0;
            v = 2.0 * uniform01() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

    // Independent child stream; deterministic in (parent seed, tag).
    Rng split(uint64_t tag) const {
        uint64_t sm = seed_ ^ (0x6a09e667f3bcc909ULL + tag * 0x9e3779b97f4a7c15ULL);
        uint64_t child = splitmix64(sm);
        return Rng(child ^ splitmix64(sm));
    }

    // k distinct values from [0, n), returned sorted.
    std::vector<uint32_t> distinct(uint32_t n, uint32_t k) {
        std::vector<uint32_t> out;
        out.reserve(k);
        while (out.size() < k) {
            uint32_t c = static_cast<uint32_t>(below(n));
            bool dup = false;
            for (uint32_t v : out)
                if (v == c) { dup = true; break; }
            if (!dup) out.push_back(c);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

  private:
    static uint64_t rotl(uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    uint64_t seed_;
    std::array<uint64_t, 4> s_{};
    double spare_ = 0.0;
    bool has_spare_ = false;
};

}  // namespace prc

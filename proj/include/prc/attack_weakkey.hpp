#pragma once

// Weak-key attack: detect duplicated rows of G across a batch of public
// keys, then distinguish codewords through position-equality statistics on
// the duplicated coordinates. Includes the closed-form weak-key
// probabilities for both key generators.

#include <cmath>
#include <cstdint>
#include <cstring>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "prc/attack_mitm.hpp"  // DistinguisherVerdict
#include "prc/gf2.hpp"
#include "prc/ldpc.hpp"
#include "prc/mathutil.hpp"

namespace prc {

struct DuplicatePairs {
    // 0-based row index pairs (a, b) with a < b and G_a = G_b; each duplicate
    // class of size c contributes c-1 pairs against its first member.
    std::vector<std::pair<uint32_t, uint32_t>> pairs;

    bool weak() const { return !pairs.empty(); }
};

inline DuplicatePairs find_duplicate_rows(const BitMatrix& G) {
    std::unordered_map<uint64_t, std::vector<uint32_t>> buckets;
    buckets.reserve(G.rows() * 2);
    const size_t wpr = G.words_per_row();
    DuplicatePairs out;
    for (uint32_t i = 0; i < G.rows(); ++i) {
        const uint64_t* rw = G.row_words(i);
        uint64_t h = 0xcbf29ce484222325ULL;
        for (size_t w = 0; w < wpr; ++w) {
            h ^= rw[w];
            h *= 0x100000001b3ULL;
        }
        auto& bucket = buckets[h];
        for (uint32_t j : bucket) {
            if (std::memcmp(G.row_words(j), rw, wpr * 8) == 0) {
                out.pairs.emplace_back(j, i);
                break;
            }
        }
        bucket.push_back(i);
    }
    return out;
}

// Probability that r draws from the C(n-r, t-1) sparse-combination space
// collide: 1 - N(N-1)...(N-r+1)/N^r, in log space.
inline double weak_key_prob_llm(uint32_t n, uint32_t r, uint32_t t) {
    if (t < 2 || t - 1 > n - r) throw std::invalid_argument("weak_key_prob_llm: t-1 > n-r");
    long double log2n_combos = log2_binom(n - r, t - 1);
    if (log2n_combos < 64) {
        long double N = std::exp2(log2n_combos);
        if (static_cast<long double>(r) - 1.0L >= N) return 1.0;  // pigeonhole
        long double acc = 0.0L;  // sum of log1p(-i/N)
        for (uint32_t i = 1; i < r; ++i) acc += std::log1p(-static_cast<long double>(i) / N);
        return static_cast<double>(-std::expm1(acc));
    }
    // huge space: use sum_i log1p(-i 2^-log2N) ~ -(r(r-1)/2) / N
    long double acc = 0.0L;
    long double inv = std::exp2(-log2n_combos);
    for (uint32_t i = 1; i < r; ++i) acc += std::log1p(-static_cast<long double>(i) * inv);
    return static_cast<double>(-std::expm1(acc));
}

inline double log2_weak_key_prob_llm(uint32_t n, uint32_t r, uint32_t t) {
    double p = weak_key_prob_llm(n, r, t);
    return std::log2(p);
}

// Growing-prefix variant: row i can duplicate any of the i-1 earlier rows,
// each coinciding with probability 1/C(n-r+i-1, t-1).
inline double weak_key_prob_gim(uint32_t n, uint32_t r, uint32_t t) {
    if (t < 2 || t - 1 > n - r) throw std::invalid_argument("weak_key_prob_gim: t-1 > n-r");
    long double acc = 0.0L;
    for (uint32_t i = 1; i <= r; ++i) {
        long double log2c = log2_binom(static_cast<double>(n - r + i - 1), t - 1);
        long double frac = static_cast<long double>(i - 1) * std::exp2(-log2c);
        if (frac >= 1.0L) return 1.0;
        acc += std::log1p(-frac);
    }
    return static_cast<double>(-std::expm1(acc));
}

inline double log2_weak_key_prob_gim(uint32_t n, uint32_t r, uint32_t t) {
    return std::log2(weak_key_prob_gim(n, r, t));
}

struct WeakKeyScan {
    std::optional<size_t> index;  // first weak key in scan order
    DuplicatePairs pairs;
};

inline WeakKeyScan multi_target_scan(const std::vector<PublicKey>& keys) {
    if (keys.empty()) throw std::invalid_argument("multi_target_scan: empty batch");
    WeakKeyScan scan;
    for (size_t i = 0; i < keys.size(); ++i) {
        DuplicatePairs dp = find_duplicate_rows(keys[i].G);
        if (dp.weak()) {
            scan.index = i;
            scan.pairs = std::move(dp);
            return scan;
        }
    }
    return scan;
}

// Position-equality statistic on x + z (z is public): for each duplicate pair
// (a, b) and target, count (x+z)_a == (x+z)_b events.
inline DistinguisherVerdict distinguish_by_pairs(const DuplicatePairs& pairs, const BitVector& z,
                                                 const std::vector<Codeword>& targets, double tau) {
    if (pairs.pairs.empty()) throw std::invalid_argument("distinguish_by_pairs: no pairs");
    DistinguisherVerdict v;
    v.threshold = tau;
    for (const Codeword& cw : targets) {
        for (auto [a, b] : pairs.pairs) {
            ++v.n_tot;
            bool ba = cw.x.get(a) ^ z.get(a);
            bool bb = cw.x.get(b) ^ z.get(b);
            if (ba == bb) ++v.n_zero;
        }
    }
    v.ratio = static_cast<double>(v.n_zero) / static_cast<double>(v.n_tot);
    v.verdict = v.ratio >= tau;
    return v;
}

// Equality probability for a duplicated coordinate pair under noise rate w:
// both flipped or neither flipped.
inline double pair_equality_mean(double omega) {
    return omega * omega + (1.0 - omega) * (1.0 - omega);
}

}  // namespace prc

#pragma once

// The target scheme: sparse-parity key generation (three variants), encoding
// with Bernoulli noise behind a one-time pad, and threshold decoding.

#include <stdexcept>
#include <vector>

#include "prc/gf2.hpp"
#include "prc/params.hpp"
#include "prc/rng.hpp"

namespace prc {

struct PublicKey {
    BitMatrix G;  // n x g
    BitVector z;  // length n
};

struct SecretKey {
    SparseRowMatrix P;  // r x n, row weight t
    BitVector z;
};

struct KeyPair {
    PublicKey pk;
    SecretKey sk;
};

enum class Provenance { Fresh, ChannelNoised, Attacked };

struct Codeword {
    BitVector x;
    Provenance provenance = Provenance::Fresh;
};

struct EncodeTrace {
    BitVector s;  // message randomness, length g
    BitVector e;  // noise, length n
};

namespace detail {

// Shared tail of key generation: permute rows of the pre-permutation G and
// columns of P with one uniform permutation, draw z.
inline KeyPair finalize_keys(const PrcParams& p, const BitMatrix& g_pre,
                             const std::vector<std::vector<uint32_t>>& p_supports_pre, Rng& rng) {
    Permutation pi = Permutation::random(p.n, rng);
    KeyPair kp;
    kp.pk.G = pi.apply_rows(g_pre);
    kp.sk.P.rows = p.r;
    kp.sk.P.cols = p.n;
    kp.sk.P.row_supports.resize(p.r);
    for (uint32_t i = 0; i < p.r; ++i) {
        std::vector<uint32_t> sup;
        sup.reserve(p.t);
        for (uint32_t j : p_supports_pre[i]) sup.push_back(pi.map[j]);
        std::sort(sup.begin(), sup.end());
        kp.sk.P.row_supports[i] = std::move(sup);
    }
    kp.pk.z = BitVector::random(p.n, rng);
    kp.sk.z = kp.pk.z;
    return kp;
}

}  // namespace detail

// Uniform base block of n-r rows; each of the r parity rows is a sparse
// (t-1)-combination of the base rows, so the matching P row has weight t.
inline KeyPair keygen_llm(const PrcParams& p, uint64_t seed) {
    p.validate();
    const uint32_t d = p.n - p.r;
    if (p.t - 1 > d) throw std::invalid_argument("keygen_llm: t-1 > n-r");
    Rng rng(seed);
    BitMatrix g_pre(p.n, p.g);
    for (uint32_t i = 0; i < d; ++i) {
        for (uint32_t j = 0; j < p.g; ++j)
            if (rng.bit()) g_pre.set(i, j, true);
    }
    std::vector<std::vector<uint32_t>> supports(p.r);
    for (uint32_t i = 0; i < p.r; ++i) {
        std::vector<uint32_t> comb = rng.distinct(d, p.t - 1);
        uint64_t* dst = g_pre.row_words(d + i);
        for (uint32_t c : comb) {
            const uint64_t* src = g_pre.row_words(c);
            for (size_t w = 0; w < g_pre.words_per_row(); ++w) dst[w] ^= src[w];
        }
        comb.push_back(d + i);
        supports[i] = std::move(comb);
    }
    return detail::finalize_keys(p, g_pre, supports, rng);
}

// Variant where parity row i combines rows from the full prefix of already
// fixed rows (base block plus earlier parity rows), not just the base block.
inline KeyPair keygen_gim(const PrcParams& p, uint64_t seed) {
    p.validate();
    const uint32_t d = p.n - p.r;
    if (p.t - 1 > d) throw std::invalid_argument("keygen_gim: t-1 > n-r");
    Rng rng(seed);
    BitMatrix g_pre(p.n, p.g);
    for (uint32_t i = 0; i < d; ++i) {
        for (uint32_t j = 0; j < p.g; ++j)
            if (rng.bit()) g_pre.set(i, j, true);
    }
    std::vector<std::vector<uint32_t>> supports(p.r);
    for (uint32_t i = 0; i < p.r; ++i) {
        std::vector<uint32_t> comb = rng.distinct(d + i, p.t - 1);
        uint64_t* dst = g_pre.row_words(d + i);
        for (uint32_t c : comb) {
            const uint64_t* src = g_pre.row_words(c);
            for (size_t w = 0; w < g_pre.words_per_row(); ++w) dst[w] ^= src[w];
        }
        comb.push_back(d + i);
        supports[i] = std::move(comb);
    }
    return detail::finalize_keys(p, g_pre, supports, rng);
}

// Hardened variant: P rows are i.i.d. uniform weight-t vectors; G is built
// from the systematic form of P, so duplicate G rows become exponentially
// unlikely. Bounded resampling on rank-deficient P; no silent repair.
inline KeyPair keygen_revised(const PrcParams& p, uint64_t seed, int max_resamples = 16) {
    p.validate();
    if (p.g > p.n - p.r) throw std::invalid_argument("keygen_revised: g > n-r");
    Rng rng(seed);
    for (int attempt = 0; attempt <= max_resamples; ++attempt) {
        std::vector<std::vector<uint32_t>> supports(p.r);
        BitMatrix pm(p.r, p.n);
        for (uint32_t i = 0; i < p.r; ++i) {
            supports[i] = rng.distinct(p.n, p.t);
            for (uint32_t j : supports[i]) pm.set(i, j, true);
        }
        SystematicForm sf = systematic_form(pm);
        if (sf.rank < p.r) continue;
        // Generator of the dual in the permuted coordinates: [P1 ; I_{n-r}],
        // mapped back through the recorded column permutation.
        const uint32_t d = p.n - p.r;
        BitMatrix g_full(p.n, d);
        for (uint32_t i = 0; i < p.r; ++i)
            for (uint32_t j = 0; j < d; ++j)
                if (sf.mat.get(i, p.r + j)) g_full.set(sf.col_perm[i], j, true);
        for (uint32_t j = 0; j < d; ++j) g_full.set(sf.col_perm[p.r + j], j, true);
        // keep g uniformly chosen columns
        std::vector<uint32_t> keep = rng.distinct(d, p.g);
        BitMatrix g_sel(p.n, p.g);
        for (uint32_t i = 0; i < p.n; ++i)
            for (uint32_t j = 0; j < p.g; ++j)
                if (g_full.get(i, keep[j])) g_sel.set(i, j, true);
        return detail::finalize_keys(p, g_sel, supports, rng);
    }
    throw std::runtime_error("keygen_revised: P rank-deficient after bounded resampling");
}

inline KeyPair keygen(const PrcParams& p, uint64_t seed) {
    switch (p.scheme) {
        case Scheme::LLM: return keygen_llm(p, seed);
        case Scheme::GIM: return keygen_gim(p, seed);
        case Scheme::REVISED: return keygen_revised(p, seed);
    }
    throw std::logic_error("bad scheme");
}

inline std::pair<Codeword, EncodeTrace> encode(const PublicKey& pk, const PrcParams& p,
                                               uint64_t seed) {
    Rng rng(seed);
    EncodeTrace tr;
    tr.s = BitVector::random(p.g, rng);
    tr.e = BitVector::bernoulli(p.n, p.omega, rng);
    Codeword cw;
    cw.x = mat_vec_mul(pk.G, tr.s);
    cw.x ^= tr.e;
    cw.x ^= pk.z;
    return {std::move(cw), std::move(tr)};
}

enum class DecodeResult { ACCEPT, REJECT };

inline DecodeResult decode(const SecretKey& sk, const PrcParams& p, const Codeword& cw) {
    if (cw.x.size() != p.n) throw std::invalid_argument("decode: length mismatch");
    BitVector syndrome = sparse_mat_vec_mul(sk.P, cw.x ^ sk.z);
    return syndrome.weight() <= p.decode_threshold() ? DecodeResult::ACCEPT : DecodeResult::REJECT;
}

inline Codeword bernoulli_channel(const Codeword& cw, double rate, uint64_t seed) {
    Rng rng(seed);
    Codeword out;
    out.x = cw.x ^ BitVector::bernoulli(cw.x.size(), rate, rng);
    out.provenance = Provenance::ChannelNoised;
    return out;
}

}  // namespace prc

#pragma once

// Noise-overlay attack: recover the encode noise e by Prange information-set
// decoding on the dual code, then add a disjoint-support overlay e' sized so
// the true total weight crosses the decode threshold while the same weight
// of independent random noise (which partially cancels e) does not.

#include <atomic>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "prc/gf2.hpp"
#include "prc/ldpc.hpp"
#include "prc/params.hpp"
#include "prc/rng.hpp"

namespace prc {

struct OverlayConfig {
    double mu = 0.0;           // overlay noise rate; 0 = choose from params
    uint64_t max_iters = 100000;
    uint64_t weight_min = 0;   // accepted w_H(e) window
    uint64_t weight_max = 0;   // 0 = default from omega
    uint32_t threads = 1;
};

inline uint64_t default_weight_window_max(uint32_t n, double omega) {
    double nn = static_cast<double>(n);
    return static_cast<uint64_t>(
        std::floor(omega * nn + 4.0 * std::sqrt(nn * omega * (1.0 - omega))));
}

struct SyndromeInstance {
    BitMatrix H;  // (n - rank G) x n, rows span the dual of G
    BitVector v;  // syndrome, length = H.rows()
    // Optional shortcuts the adversary holds anyway: the received word
    // (a particular solution of He = v) and a basis of ker(H) = col(G).
    // Without them, prange_isd derives both from H with one elimination.
    std::optional<BitVector> received;
    std::optional<BitMatrix> kernel;  // n x dim, independent columns
};

// Rows of the result span {h : hG = 0}; row count = n - rank(G).
inline BitMatrix dual_matrix(const BitMatrix& G) {
    return nullspace_basis(G.transposed()).transposed();
}

struct IsdResult {
    std::optional<BitVector> e;
    uint64_t iterations = 0;  // 1-based index of the successful trial, or the budget
};

namespace detail {

struct IsdSetup {
    BitVector e0;    // particular solution, He0 = v
    BitMatrix kt;    // dim x n: rows are a kernel basis of H
    size_t dim = 0;
};

inline IsdSetup isd_setup(const SyndromeInstance& inst) {
    IsdSetup s;
    if (inst.received && inst.kernel) {
        s.e0 = *inst.received;
        s.kt = inst.kernel->transposed();
        s.dim = s.kt.rows();
    } else {
        // One elimination of [H | v] for a particular solution, one for the kernel.
        const size_t rows = inst.H.rows(), n = inst.H.cols();
        BitMatrix m(rows, n + 1);
        for (size_t i = 0; i < rows; ++i) {
            std::memcpy(m.row_words(i), inst.H.row_words(i), inst.H.words_per_row() * 8);
            m.trim_row(i);
            if (inst.v.get(i)) m.set(i, n, true);
        }
        std::vector<size_t> pivot_col;
        size_t k = 0;
        for (size_t j = 0; j < n && k < rows; ++j) {
            size_t pi = rows;
            for (size_t i = k; i < rows; ++i)
                if (m.get(i, j)) {
                    pi = i;
                    break;
                }
            if (pi == rows) continue;
            m.swap_rows(k, pi);
            for (size_t i = 0; i < rows; ++i)
                if (i != k && m.get(i, j)) m.xor_row_into(k, i);
            pivot_col.push_back(j);
            ++k;
        }
        for (size_t i = k; i < rows; ++i)
            if (m.get(i, n)) throw std::invalid_argument("prange_isd: inconsistent syndrome");
        s.e0 = BitVector(n);
        for (size_t kk = 0; kk < pivot_col.size(); ++kk)
            if (m.get(kk, n)) s.e0.set(pivot_col[kk], true);
        std::vector<bool> is_pivot(n, false);
        for (size_t pc : pivot_col) is_pivot[pc] = true;
        s.dim = n - pivot_col.size();
        s.kt = BitMatrix(s.dim, n);
        size_t bi = 0;
        for (size_t f = 0; f < n; ++f) {
            if (is_pivot[f]) continue;
            s.kt.set(bi, f, true);
            for (size_t kk = 0; kk < pivot_col.size(); ++kk)
                if (m.get(kk, f)) s.kt.set(bi, pivot_col[kk], true);
            ++bi;
        }
    }
    if (mat_vec_mul(inst.H, s.e0) != inst.v)
        throw std::invalid_argument("prange_isd: received word does not match syndrome");
    return s;
}

// One Prange trial: random coordinate order, greedily take the first `dim`
// coordinates whose kernel-coordinate rows are independent (the information
// set), solve for the unique solution vanishing there, test the weight window.
inline std::optional<BitVector> isd_trial(const IsdSetup& s, uint64_t weight_min,
                                          uint64_t weight_max, Rng rng) {
    const size_t n = s.kt.cols();
    const size_t dim = s.dim;
    if (dim == 0) {
        uint64_t w = s.e0.weight();
        if (w >= weight_min && w <= weight_max) return s.e0;
        return std::nullopt;
    }
    const size_t words = (dim + 63) / 64;
    // Gaussian elimination over rows [coord-row of kt | e0 bit], built greedily.
    std::vector<std::vector<uint64_t>> rows;     // reduced rows, one per accepted pivot
    std::vector<int> pivot_of;                   // bit position of each row's pivot
    std::vector<uint8_t> rhs;
    rows.reserve(dim);
    pivot_of.reserve(dim);
    std::vector<uint32_t> order(n);
    for (size_t i = 0; i < n; ++i) order[i] = static_cast<uint32_t>(i);
    for (size_t i = n; i > 1; --i) std::swap(order[i - 1], order[rng.below(i)]);
    std::vector<uint64_t> cur(words);
    for (size_t oi = 0; oi < n && rows.size() < dim; ++oi) {
        uint32_t coord = order[oi];
        std::fill(cur.begin(), cur.end(), 0);
        for (size_t b = 0; b < dim; ++b)
            if (s.kt.get(b, coord)) cur[b >> 6] ^= 1ULL << (b & 63);
        uint8_t cr = s.e0.get(coord) ? 1 : 0;
        // reduce against accepted rows
        for (size_t q = 0; q < rows.size(); ++q) {
            int pb = pivot_of[q];
            if ((cur[pb >> 6] >> (pb & 63)) & 1ULL) {
                for (size_t w = 0; w < words; ++w) cur[w] ^= rows[q][w];
                cr ^= rhs[q];
            }
        }
        int pb = -1;
        for (size_t w = 0; w < words && pb < 0; ++w)
            if (cur[w]) pb = static_cast<int>(w * 64 + std::countr_zero(cur[w]));
        if (pb < 0) continue;  // dependent coordinate, skip
        // back-substitute into earlier rows to keep them reduced
        for (size_t q = 0; q < rows.size(); ++q) {
            if ((rows[q][pb >> 6] >> (pb & 63)) & 1ULL) {
                for (size_t w = 0; w < words; ++w) rows[q][w] ^= cur[w];
                rhs[q] ^= cr;
            }
        }
        rows.push_back(cur);
        pivot_of.push_back(pb);
        rhs.push_back(cr);
    }
    if (rows.size() < dim) return std::nullopt;  // kernel basis not full rank (degenerate)
    // w has bit pivot_of[q] = rhs[q]; candidate e = e0 + kernel . w
    BitVector e = s.e0;
    for (size_t q = 0; q < dim; ++q) {
        if (!rhs[q]) continue;
        size_t b = static_cast<size_t>(pivot_of[q]);
        const uint64_t* src = s.kt.row_words(b);
        uint64_t* dst = e.words().data();
        for (size_t w = 0; w < s.kt.words_per_row(); ++w) dst[w] ^= src[w];
    }
    uint64_t w = e.weight();
    if (w >= weight_min && w <= weight_max) return e;
    return std::nullopt;
}

}  // namespace detail

// Prange information-set decoding. Trials are indexed and seeded
// independently; with several workers the lowest successful trial index
// wins, so the result is deterministic for a fixed seed regardless of the
// worker count.
inline IsdResult prange_isd(const SyndromeInstance& inst, const OverlayConfig& cfg, double omega,
                            uint64_t seed) {
    detail::IsdSetup setup = detail::isd_setup(inst);
    uint64_t wmax = cfg.weight_max ? cfg.weight_max
                                   : default_weight_window_max(static_cast<uint32_t>(inst.H.cols()), omega);
    Rng base(seed);
    IsdResult res;
    res.iterations = cfg.max_iters;
    const uint32_t workers = std::max<uint32_t>(1, cfg.threads);
    std::atomic<uint64_t> best{cfg.max_iters + 1};
    std::mutex mtx;
    std::optional<BitVector> best_e;
    auto work = [&](uint32_t wid) {
        for (uint64_t trial = wid; trial < cfg.max_iters; trial += workers) {
            if (trial >= best.load(std::memory_order_relaxed)) return;
            auto cand = detail::isd_trial(setup, cfg.weight_min, wmax, base.split(trial));
            if (cand) {
                std::lock_guard<std::mutex> lk(mtx);
                if (trial + 1 < best.load()) {
                    best.store(trial + 1);
                    best_e = std::move(cand);
                }
            }
        }
    };
    if (workers == 1) {
        work(0);
    } else {
        std::vector<std::thread> ths;
        for (uint32_t wdx = 0; wdx < workers; ++wdx) ths.emplace_back(work, wdx);
        for (auto& th : ths) th.join();
    }
    if (best_e) {
        if (mat_vec_mul(inst.H, *best_e) != inst.v)
            throw std::logic_error("prange_isd: candidate fails syndrome check");
        res.e = std::move(best_e);
        res.iterations = best.load();
    }
    return res;
}

// Uniform weight-ceil(mu n) vector with support disjoint from e.
inline BitVector build_overlay(const BitVector& e, double mu, uint64_t seed) {
    const size_t n = e.size();
    const uint64_t k = static_cast<uint64_t>(std::ceil(mu * static_cast<double>(n)));
    std::vector<uint32_t> comp;
    comp.reserve(n - e.weight());
    for (size_t i = 0; i < n; ++i)
        if (!e.get(i)) comp.push_back(static_cast<uint32_t>(i));
    if (k > comp.size()) throw std::invalid_argument("build_overlay: mu n exceeds complement size");
    Rng rng(seed);
    // partial Fisher-Yates over the complement
    for (uint64_t i = 0; i < k; ++i) {
        uint64_t j = i + rng.below(comp.size() - i);
        std::swap(comp[i], comp[j]);
    }
    BitVector out(n);
    for (uint64_t i = 0; i < k; ++i) out.set(comp[i], true);
    return out;
}

// Per-bit noise rate at which the expected syndrome weight sits exactly on
// the decode bound: solving (1 - (1-2v)^t)/2 = 1/2 - r^{-1/4}.
inline double decode_noise_rate_bound(uint32_t r, uint32_t t) {
    double x = 2.0 * std::pow(static_cast<double>(r), -0.25);
    return 0.5 * (1.0 - std::pow(x, 1.0 / static_cast<double>(t)));
}

// Overlay rate with (omega + mu) above the decode noise-rate bound while the
// partially-cancelling mix omega + mu - 2 omega mu stays below it. The
// feasible set is an open interval; the midpoint maximizes both margins.
inline double choose_overlay_rate(const PrcParams& p) {
    double nu = decode_noise_rate_bound(p.r, p.t);
    double lo = nu - p.omega;
    double hi = (nu - p.omega) / (1.0 - 2.0 * p.omega);
    if (lo <= 0.0 || hi <= lo)
        throw std::invalid_argument("choose_overlay_rate: no exploitable gap at this omega");
    double mu = 0.5 * (lo + hi);
    if (mu > 0.5) throw std::invalid_argument("choose_overlay_rate: required mu exceeds 1/2");
    return mu;
}

struct OverlayOutcome {
    Codeword attacked;
    BitVector recovered_e;
    BitVector overlay;
    uint64_t isd_iterations = 0;
    double mu = 0.0;
};

inline OverlayOutcome overlay_attack(const PublicKey& pk, const PrcParams& p, const Codeword& x,
                                     OverlayConfig cfg, uint64_t seed) {
    if (cfg.mu == 0.0) cfg.mu = choose_overlay_rate(p);
    SyndromeInstance inst;
    inst.H = dual_matrix(pk.G);
    BitVector xprime = x.x ^ pk.z;
    inst.v = mat_vec_mul(inst.H, xprime);
    inst.received = xprime;
    // ker(H) = column space of G; pass a column basis
    if (rank_of(pk.G) == pk.G.cols()) {
        inst.kernel = pk.G;
    }
    Rng rng(seed);
    IsdResult isd = prange_isd(inst, cfg, p.omega, rng.split(1).seed());
    if (!isd.e) throw std::runtime_error("overlay_attack: ISD budget exhausted");
    OverlayOutcome out;
    out.recovered_e = *isd.e;
    out.isd_iterations = isd.iterations;
    out.mu = cfg.mu;
    out.overlay = build_overlay(out.recovered_e, cfg.mu, rng.split(2).seed());
    out.attacked.x = x.x ^ out.overlay;
    out.attacked.provenance = Provenance::Attacked;
    return out;
}

}  // namespace prc

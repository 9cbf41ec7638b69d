#pragma once

// Collision search for weight-t dual vectors of G: partial sums of row
// subsets from each half of the row index range, sorted and merge-joined on
// the g-bit sum, followed by a zero-ratio threshold distinguisher.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "prc/gf2.hpp"
#include "prc/ldpc.hpp"
#include "prc/mathutil.hpp"
#include "prc/params.hpp"
#include "prc/rng.hpp"

namespace prc {

struct MitmConfig {
    double l = 1.0;           // target expected recovered rows
    uint64_t list_cap_1 = 0;  // 0 = full enumeration
    uint64_t list_cap_2 = 0;
    double tau = 0.60;        // zero-ratio decision threshold
    double alpha = 1.0;       // sampled fraction of list 1 (odd t)
    double beta = 1.0;        // sampled fraction of list 2 (odd t)
};

// Half-list of (index tuple, g-bit partial sum) entries, stored flat.
struct SumList {
    uint32_t tuple_size = 0;
    size_t sum_words = 0;
    std::vector<uint32_t> indices;  // tuple_size per entry, ascending in-tuple
    std::vector<uint64_t> sums;     // sum_words per entry

    size_t size() const { return tuple_size ? indices.size() / tuple_size : 0; }
    const uint32_t* tuple(size_t e) const { return indices.data() + e * tuple_size; }
    const uint64_t* sum(size_t e) const { return sums.data() + e * sum_words; }
};

struct RecoveredDual {
    std::vector<BitVector> vectors;  // each weight t, vG = 0
};

struct DistinguisherVerdict {
    uint64_t n_zero = 0;
    uint64_t n_tot = 0;
    double ratio = 0.0;
    double threshold = 0.0;
    bool verdict = false;
};

namespace detail {

inline void append_sum_entry(SumList& list, const BitMatrix& G, const std::vector<uint32_t>& tup) {
    for (uint32_t i : tup) list.indices.push_back(i);
    size_t base = list.sums.size();
    list.sums.resize(base + list.sum_words, 0);
    for (uint32_t i : tup) {
        const uint64_t* rw = G.row_words(i);
        for (size_t w = 0; w < list.sum_words; ++w) list.sums[base + w] ^= rw[w];
    }
}

// All k-subsets of [lo, hi) when cap covers the full count, otherwise cap
// distinct subsets uniformly without replacement.
inline SumList build_list(const BitMatrix& G, uint32_t lo, uint32_t hi, uint32_t k, uint64_t cap,
                          Rng& rng) {
    SumList list;
    list.tuple_size = k;
    list.sum_words = G.words_per_row();
    const uint32_t span = hi - lo;
    if (k > span) throw std::invalid_argument("build_list: subset size exceeds half size");
    double total = std::exp2(log2_binom(span, k));
    if (cap != 0 && static_cast<double>(cap) > total + 0.5)
        throw std::invalid_argument("build_list: cap exceeds combination count");
    bool full = cap == 0 || (total <= 1e15 && cap == static_cast<uint64_t>(total + 0.5));
    if (full) {
        std::vector<uint32_t> tup(k);
        for (uint32_t i = 0; i < k; ++i) tup[i] = lo + i;
        for (;;) {
            append_sum_entry(list, G, tup);
            int pos = static_cast<int>(k) - 1;
            while (pos >= 0 && tup[pos] == hi - (k - pos)) --pos;
            if (pos < 0) break;
            ++tup[pos];
            for (uint32_t q = pos + 1; q < k; ++q) tup[q] = tup[q - 1] + 1;
        }
    } else {
        std::set<std::vector<uint32_t>> seen;
        while (seen.size() < cap) {
            std::vector<uint32_t> tup = rng.distinct(span, k);
            for (auto& v : tup) v += lo;
            if (seen.insert(tup).second) append_sum_entry(list, G, tup);
        }
    }
    return list;
}

inline int compare_sums(const uint64_t* a, const uint64_t* b, size_t words) {
    for (size_t w = 0; w < words; ++w) {
        if (a[w] != b[w]) return a[w] < b[w] ? -1 : 1;
    }
    return 0;
}

}  // namespace detail

// List 1 covers rows [0, ceil(n/2)) with t1 = ceil(t/2) picks; list 2 covers
// the rest with t2 = t - t1 picks. Caps of 0 mean full enumeration.
inline std::pair<SumList, SumList> build_half_lists(const BitMatrix& G, uint32_t t,
                                                    const MitmConfig& cfg, uint64_t seed) {
    const uint32_t n = static_cast<uint32_t>(G.rows());
    const uint32_t n1 = (n + 1) / 2;
    const uint32_t t1 = (t + 1) / 2;
    const uint32_t t2 = t - t1;
    Rng rng(seed);
    Rng r1 = rng.split(1), r2 = rng.split(2);
    SumList l1 = detail::build_list(G, 0, n1, t1, cfg.list_cap_1, r1);
    SumList l2 = detail::build_list(G, n1, n, t2, cfg.list_cap_2, r2);
    return {std::move(l1), std::move(l2)};
}

// Sort both lists by sum and sweep matching runs; every emitted vector is a
// weight-t dual vector of G (asserted, not sampled).
inline RecoveredDual merge_join(const SumList& l1, const SumList& l2, const BitMatrix& G) {
    auto order_of = [](const SumList& l) {
        std::vector<uint32_t> ord(l.size());
        std::iota(ord.begin(), ord.end(), 0);
        std::sort(ord.begin(), ord.end(), [&](uint32_t a, uint32_t b) {
            return detail::compare_sums(l.sum(a), l.sum(b), l.sum_words) < 0;
        });
        return ord;
    };
    std::vector<uint32_t> o1 = order_of(l1), o2 = order_of(l2);
    const BitMatrix gt = G.transposed();
    RecoveredDual out;
    size_t i = 0, j = 0;
    while (i < o1.size() && j < o2.size()) {
        int c = detail::compare_sums(l1.sum(o1[i]), l2.sum(o2[j]), l1.sum_words);
        if (c < 0) {
            ++i;
        } else if (c > 0) {
            ++j;
        } else {
            size_t i_end = i, j_end = j;
            while (i_end < o1.size() &&
                   detail::compare_sums(l1.sum(o1[i]), l1.sum(o1[i_end]), l1.sum_words) == 0)
                ++i_end;
            while (j_end < o2.size() &&
                   detail::compare_sums(l2.sum(o2[j]), l2.sum(o2[j_end]), l2.sum_words) == 0)
                ++j_end;
            for (size_t a = i; a < i_end; ++a) {
                for (size_t b = j; b < j_end; ++b) {
                    BitVector v(G.rows());
                    for (uint32_t q = 0; q < l1.tuple_size; ++q) v.set(l1.tuple(o1[a])[q], true);
                    for (uint32_t q = 0; q < l2.tuple_size; ++q) v.set(l2.tuple(o2[b])[q], true);
                    // halves are disjoint, so weight t is structural
                    if (v.weight() != l1.tuple_size + l2.tuple_size)
                        throw std::logic_error("merge_join: overlapping tuple indices");
                    if (!mat_vec_mul(gt, v).is_zero())
                        throw std::logic_error("merge_join: emitted vector not in dual");
                    out.vectors.push_back(std::move(v));
                }
            }
            i = i_end;
            j = j_end;
        }
    }
    std::sort(out.vectors.begin(), out.vectors.end());
    return out;
}

// Expected number of P rows surviving the half-split and list subsampling:
// alpha * beta * q * r with q = C(n1,t1) C(n2,t2) / C(n,t).
inline double expected_recovered_rows(uint32_t n, uint32_t r, uint32_t t, double alpha,
                                      double beta) {
    const uint32_t n1 = (n + 1) / 2;
    const uint32_t n2 = n - n1;
    const uint32_t t1 = (t + 1) / 2;
    const uint32_t t2 = t - t1;
    double log2q = log2_binom(n1, t1) + log2_binom(n2, t2) - log2_binom(n, t);
    return alpha * beta * std::exp2(log2q) * r;
}

// Cap selection for a target expected yield l. Even t balances the caps with
// a common 1/sqrt(r'/l) fraction; odd t balances list sizes with
// alpha*beta = l/r', clamping beta at full enumeration for small instances.
inline MitmConfig mitm_config_for_target(uint32_t n, uint32_t r, uint32_t t, double l, double tau) {
    const uint32_t n1 = (n + 1) / 2;
    const uint32_t n2 = n - n1;
    const uint32_t t1 = (t + 1) / 2;
    const uint32_t t2 = t - t1;
    MitmConfig cfg;
    cfg.l = l;
    cfg.tau = tau;
    double c1 = std::exp2(log2_binom(n1, t1));
    double c2 = std::exp2(log2_binom(n2, t2));
    double rp = expected_recovered_rows(n, r, t, 1.0, 1.0);  // r' = q r
    if (rp <= 0) throw std::invalid_argument("mitm config: no expected dual rows");
    double frac = l / rp;
    if (frac >= 1.0) {
        cfg.alpha = cfg.beta = 1.0;
        cfg.list_cap_1 = cfg.list_cap_2 = 0;
        return cfg;
    }
    if (t % 2 == 0) {
        cfg.alpha = cfg.beta = std::sqrt(frac);
        cfg.list_cap_1 = static_cast<uint64_t>(std::ceil(c1 / std::sqrt(rp / l)));
        cfg.list_cap_2 = static_cast<uint64_t>(std::ceil(c2 / std::sqrt(rp / l)));
    } else {
        // balanced alpha c1 = beta c2 subject to alpha beta = frac
        double beta = std::sqrt(frac * c1 / c2);
        double alpha = frac / std::min(beta, 1.0);
        if (beta > 1.0) beta = 1.0;
        cfg.alpha = alpha;
        cfg.beta = beta;
        cfg.list_cap_1 = static_cast<uint64_t>(std::ceil(alpha * c1));
        cfg.list_cap_2 = beta >= 1.0 ? 0 : static_cast<uint64_t>(std::ceil(beta * c2));
    }
    return cfg;
}

// Zero-ratio of <v, x+z> over all (recovered vector, target) pairs.
inline DistinguisherVerdict distinguish(const RecoveredDual& rec, const BitVector& z,
                                        const std::vector<Codeword>& targets, double tau) {
    if (rec.vectors.empty())
        throw std::invalid_argument("distinguish: empty recovered set (re-run with larger caps)");
    DistinguisherVerdict v;
    v.threshold = tau;
    for (const Codeword& cw : targets) {
        BitVector u = cw.x ^ z;
        for (const BitVector& vec : rec.vectors) {
            ++v.n_tot;
            if (!vec.dot(u)) ++v.n_zero;
        }
    }
    v.ratio = static_cast<double>(v.n_zero) / static_cast<double>(v.n_tot);
    v.verdict = v.ratio >= tau;
    return v;
}

// Zero-bias of <v, Gs+e> for a weight-t dual row v: p = (1 + (1-2w)^t) / 2.
inline double zero_ratio_mean(double omega, uint32_t t) {
    return 0.5 * (1.0 + std::pow(1.0 - 2.0 * omega, static_cast<double>(t)));
}

// Exact binomial tails in log space: TPR = P[Bin(ml, p) >= ceil(tau ml)],
// FPR likewise at p = 1/2.
inline std::pair<double, double> tpr_fpr(double p, uint64_t ml, double tau) {
    if (ml < 1) throw std::invalid_argument("tpr_fpr: ml >= 1 required");
    auto tail = [&](double pp) {
        if (pp <= 0.0) return 0.0;
        if (pp >= 1.0) return tau <= 1.0 ? 1.0 : 0.0;
        uint64_t j0 = static_cast<uint64_t>(std::ceil(tau * static_cast<double>(ml) - 1e-12));
        if (j0 > ml) return 0.0;
        double lp = std::log2(pp), lq = std::log2(1.0 - pp);
        double mx = -std::numeric_limits<double>::infinity();
        std::vector<double> terms;
        terms.reserve(ml - j0 + 1);
        for (uint64_t j = j0; j <= ml; ++j) {
            double lt = log2_binom(static_cast<double>(ml), static_cast<double>(j)) +
                        static_cast<double>(j) * lp + static_cast<double>(ml - j) * lq;
            terms.push_back(lt);
            mx = std::max(mx, lt);
        }
        if (!std::isfinite(mx)) return 0.0;
        double acc = 0.0;
        for (double lt : terms) acc += std::exp2(lt - mx);
        double res = std::exp2(mx) * acc;
        return std::min(res, 1.0);
    };
    return {tail(p), tail(0.5)};
}

}  // namespace prc

#pragma once

// Bit-packed linear algebra over GF(2). Row-major, LSB-first within a 64-bit
// word; bits past `length` in the last word are kept zero so equality and
// weight work on raw words.

#include <bit>
#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

#include "prc/rng.hpp"

namespace prc {

class BitVector {
  public:
    BitVector() = default;
    explicit BitVector(size_t length) : len_(length), w_((length + 63) / 64, 0) {}

    static BitVector random(size_t length, Rng& rng) {
        BitVector v(length);
        for (auto& w : v.w_) w = rng.u64();
        v.trim();
        return v;
    }

    static BitVector bernoulli(size_t length, double rate, Rng& rng) {
        BitVector v(length);
        if (rate <= 0.0) return v;
        if (rate >= 1.0) {
            for (auto& w : v.w_) w = ~0ULL;
            v.trim();
            return v;
        }
        for (size_t i = 0; i < length; ++i)
            if (rng.bernoulli(rate)) v.set(i, true);
        return v;
    }

    static BitVector from_support(size_t length, const std::vector<uint32_t>& support) {
        BitVector v(length);
        for (uint32_t i : support) v.set(i, true);
        return v;
    }

    size_t size() const { return len_; }

    bool get(size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1ULL; }

    void set(size_t i, bool b) {
        if (b)
            w_[i >> 6] |= 1ULL << (i & 63);
        else
            w_[i >> 6] &= ~(1ULL << (i & 63));
    }

    void flip(size_t i) { w_[i >> 6] ^= 1ULL << (i & 63); }

    size_t weight() const {
        size_t c = 0;
        for (uint64_t w : w_) c += std::popcount(w);
        return c;
    }

    BitVector& operator^=(const BitVector& o) {
        if (o.len_ != len_) throw std::invalid_argument("BitVector xor: length mismatch");
        for (size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
        return *this;
    }

    friend BitVector operator^(BitVector a, const BitVector& b) { return a ^= b; }

    bool operator==(const BitVector& o) const { return len_ == o.len_ && w_ == o.w_; }
    bool operator!=(const BitVector& o) const { return !(*this == o); }
    bool operator<(const BitVector& o) const { return w_ < o.w_; }

    // Inner product over GF(2).
    bool dot(const BitVector& o) const {
        if (o.len_ != len_) throw std::invalid_argument("BitVector dot: length mismatch");
        uint64_t acc = 0;
        for (size_t i = 0; i < w_.size(); ++i) acc ^= w_[i] & o.w_[i];
        return std::popcount(acc) & 1;
    }

    bool is_zero() const {
        for (uint64_t w : w_)
            if (w) return false;
        return true;
    }

    std::vector<uint32_t> support() const {
        std::vector<uint32_t> s;
        for (size_t i = 0; i < len_; ++i)
            if (get(i)) s.push_back(static_cast<uint32_t>(i));
        return s;
    }

    BitVector complement() const {
        BitVector v(len_);
        for (size_t i = 0; i < w_.size(); ++i) v.w_[i] = ~w_[i];
        v.trim();
        return v;
    }

    const std::vector<uint64_t>& words() const { return w_; }
    std::vector<uint64_t>& words() { return w_; }

    void trim() {
        if (len_ & 63) w_.back() &= (~0ULL) >> (64 - (len_ & 63));
    }

  private:
    size_t len_ = 0;
    std::vector<uint64_t> w_;
};

class BitMatrix {
  public:
    BitMatrix() = default;
    BitMatrix(size_t rows, size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), w_(rows * wpr_, 0) {}

    static BitMatrix random(size_t rows, size_t cols, Rng& rng) {
        BitMatrix m(rows, cols);
        for (auto& w : m.w_) w = rng.u64();
        for (size_t i = 0; i < rows; ++i) m.trim_row(i);
        return m;
    }

    static BitMatrix identity(size_t nn) {
        BitMatrix m(nn, nn);
        for (size_t i = 0; i < nn; ++i) m.set(i, i, true);
        return m;
    }

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }
    size_t words_per_row() const { return wpr_; }

    bool get(size_t i, size_t j) const { return (w_[i * wpr_ + (j >> 6)] >> (j & 63)) & 1ULL; }

    void set(size_t i, size_t j, bool b) {
        if (b)
            w_[i * wpr_ + (j >> 6)] |= 1ULL << (j & 63);
        else
            w_[i * wpr_ + (j >> 6)] &= ~(1ULL << (j & 63));
    }

    const uint64_t* row_words(size_t i) const { return w_.data() + i * wpr_; }
    uint64_t* row_words(size_t i) { return w_.data() + i * wpr_; }

    BitVector row(size_t i) const {
        BitVector v(cols_);
        std::memcpy(v.words().data(), row_words(i), wpr_ * 8);
        return v;
    }

    void set_row(size_t i, const BitVector& v) {
        if (v.size() != cols_) throw std::invalid_argument("set_row: length mismatch");
        std::memcpy(row_words(i), v.words().data(), wpr_ * 8);
    }

    void xor_row_into(size_t src, size_t dst) {
        uint64_t* d = row_words(dst);
        const uint64_t* s = row_words(src);
        for (size_t k = 0; k < wpr_; ++k) d[k] ^= s[k];
    }

    void swap_rows(size_t a, size_t b) {
        if (a == b) return;
        uint64_t* pa = row_words(a);
        uint64_t* pb = row_words(b);
        for (size_t k = 0; k < wpr_; ++k) std::swap(pa[k], pb[k]);
    }

    void swap_cols(size_t a, size_t b) {
        if (a == b) return;
        for (size_t i = 0; i < rows_; ++i) {
            bool va = get(i, a), vb = get(i, b);
            set(i, a, vb);
            set(i, b, va);
        }
    }

    BitMatrix transposed() const {
        BitMatrix m(cols_, rows_);
        for (size_t i = 0; i < rows_; ++i) {
            const uint64_t* rw = row_words(i);
            for (size_t wi = 0; wi < wpr_; ++wi) {
                uint64_t w = rw[wi];
                while (w) {
                    int b = std::countr_zero(w);
                    w &= w - 1;
                    m.set(wi * 64 + b, i, true);
                }
            }
        }
        return m;
    }

    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && w_ == o.w_;
    }

    void trim_row(size_t i) {
        if (cols_ & 63) w_[i * wpr_ + wpr_ - 1] &= (~0ULL) >> (64 - (cols_ & 63));
    }

  private:
    size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<uint64_t> w_;
};

struct SparseRowMatrix {
    size_t rows = 0;
    size_t cols = 0;
    std::vector<std::vector<uint32_t>> row_supports;  // sorted, strictly increasing

    BitMatrix densify() const {
        BitMatrix m(rows, cols);
        for (size_t i = 0; i < rows; ++i)
            for (uint32_t j : row_supports[i]) m.set(i, j, true);
        return m;
    }
};

// map[i] = destination index of element i.
struct Permutation {
    std::vector<uint32_t> map;

    static Permutation identity(size_t nn) {
        Permutation p;
        p.map.resize(nn);
        for (size_t i = 0; i < nn; ++i) p.map[i] = static_cast<uint32_t>(i);
        return p;
    }

    static Permutation random(size_t nn, Rng& rng) {
        Permutation p = identity(nn);
        for (size_t i = nn; i > 1; --i)
            std::swap(p.map[i - 1], p.map[rng.below(i)]);
        return p;
    }

    size_t size() const { return map.size(); }

    Permutation inverse() const {
        Permutation p;
        p.map.resize(map.size());
        for (size_t i = 0; i < map.size(); ++i) p.map[map[i]] = static_cast<uint32_t>(i);
        return p;
    }

    BitVector apply(const BitVector& v) const {
        BitVector out(v.size());
        for (size_t i = 0; i < v.size(); ++i)
            if (v.get(i)) out.set(map[i], true);
        return out;
    }

    // Permutes rows: row i of input becomes row map[i] of output.
    BitMatrix apply_rows(const BitMatrix& m) const {
        BitMatrix out(m.rows(), m.cols());
        for (size_t i = 0; i < m.rows(); ++i)
            std::memcpy(out.row_words(map[i]), m.row_words(i), m.words_per_row() * 8);
        return out;
    }
};

inline BitVector mat_vec_mul(const BitMatrix& m, const BitVector& v) {
    if (v.size() != m.cols()) throw std::invalid_argument("mat_vec_mul: dimension mismatch");
    BitVector out(m.rows());
    const size_t wpr = m.words_per_row();
    const uint64_t* vw = v.words().data();
    for (size_t i = 0; i < m.rows(); ++i) {
        const uint64_t* rw = m.row_words(i);
        uint64_t acc = 0;
        for (size_t k = 0; k < wpr; ++k) acc ^= rw[k] & vw[k];
        if (std::popcount(acc) & 1) out.set(i, true);
    }
    return out;
}

inline BitVector sparse_mat_vec_mul(const SparseRowMatrix& p, const BitVector& v) {
    if (v.size() != p.cols) throw std::invalid_argument("sparse_mat_vec_mul: dimension mismatch");
    BitVector out(p.rows);
    for (size_t i = 0; i < p.rows; ++i) {
        unsigned parity = 0;
        for (uint32_t j : p.row_supports[i]) parity ^= v.get(j) ? 1u : 0u;
        if (parity) out.set(i, true);
    }
    return out;
}

struct SystematicForm {
    BitMatrix mat;                   // [I_rank | R] in the permuted column order
    std::vector<uint32_t> col_perm;  // col_perm[j] = original column now at position j
    size_t rank = 0;
};

// Row reduction with recorded column swaps; produces [I_rank | R] in the top-left.
// Rank-deficient input is allowed; rank is reported, nothing is repaired.
inline SystematicForm systematic_form(const BitMatrix& m_in) {
    SystematicForm sf;
    sf.mat = m_in;
    sf.col_perm.resize(m_in.cols());
    for (size_t j = 0; j < m_in.cols(); ++j) sf.col_perm[j] = static_cast<uint32_t>(j);
    BitMatrix& m = sf.mat;
    const size_t rows = m.rows(), cols = m.cols();
    size_t k = 0;
    for (size_t jc = 0; jc < cols && k < rows; ++jc) {
        // find any pivot in the remaining block
        size_t pi = rows, pj = cols;
        for (size_t j = k; j < cols && pi == rows; ++j)
            for (size_t i = k; i < rows; ++i)
                if (m.get(i, j)) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == rows) break;
        m.swap_rows(k, pi);
        if (pj != k) {
            m.swap_cols(k, pj);
            std::swap(sf.col_perm[k], sf.col_perm[pj]);
        }
        for (size_t i = 0; i < rows; ++i)
            if (i != k && m.get(i, k)) m.xor_row_into(k, i);
        ++k;
    }
    sf.rank = k;
    return sf;
}

inline size_t rank_of(const BitMatrix& m) { return systematic_form(m).rank; }

// Columns of the result span the kernel {v : Mv = 0}.
inline BitMatrix nullspace_basis(const BitMatrix& m_in) {
    BitMatrix m = m_in;
    const size_t rows = m.rows(), cols = m.cols();
    std::vector<size_t> pivot_col;  // pivot_col[k] = column of k-th pivot row
    size_t k = 0;
    for (size_t j = 0; j < cols && k < rows; ++j) {
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
    std::vector<bool> is_pivot(cols, false);
    for (size_t pc : pivot_col) is_pivot[pc] = true;
    const size_t dim = cols - pivot_col.size();
    BitMatrix basis(cols, dim);
    size_t bi = 0;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        basis.set(f, bi, true);
        for (size_t kk = 0; kk < pivot_col.size(); ++kk)
            if (m.get(kk, f)) basis.set(pivot_col[kk], bi, true);
        ++bi;
    }
    return basis;
}

}  // namespace prc

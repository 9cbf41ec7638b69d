#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "prc/gf2.hpp"

using namespace prc;

namespace {

// schoolbook double loop over explicit bits
BitVector naive_mat_vec(const BitMatrix& m, const BitVector& v) {
    BitVector out(m.rows());
    for (size_t i = 0; i < m.rows(); ++i) {
        unsigned acc = 0;
        for (size_t j = 0; j < m.cols(); ++j)
            acc ^= (m.get(i, j) && v.get(j)) ? 1u : 0u;
        if (acc) out.set(i, true);
    }
    return out;
}

// all vectors in the row space of m (only for tiny row counts)
std::set<std::vector<bool>> span_of(const BitMatrix& m) {
    std::set<std::vector<bool>> span;
    const size_t rows = m.rows();
    REQUIRE(rows <= 16);
    for (uint64_t mask = 0; mask < (1ULL << rows); ++mask) {
        BitVector acc(m.cols());
        for (size_t i = 0; i < rows; ++i)
            if ((mask >> i) & 1) acc ^= m.row(i);
        std::vector<bool> key(m.cols());
        for (size_t j = 0; j < m.cols(); ++j) key[j] = acc.get(j);
        span.insert(key);
    }
    return span;
}

}  // namespace

TEST_CASE("mat_vec_mul identity and zero") {
    BitMatrix id = BitMatrix::identity(3);
    BitVector v(3);
    v.set(0, true);
    v.set(2, true);
    CHECK(mat_vec_mul(id, v) == v);

    BitMatrix zero(4, 3);
    CHECK(mat_vec_mul(zero, v).is_zero());

    BitVector wrong(4);
    CHECK_THROWS_AS(mat_vec_mul(id, wrong), std::invalid_argument);
}

TEST_CASE("mat_vec_mul agrees with schoolbook product") {
    Rng rng(11);
    for (int it = 0; it < 50; ++it) {
        size_t rows = 1 + rng.below(120), cols = 1 + rng.below(200);
        BitMatrix m = BitMatrix::random(rows, cols, rng);
        BitVector v = BitVector::random(cols, rng);
        CHECK(mat_vec_mul(m, v) == naive_mat_vec(m, v));
    }
}

TEST_CASE("sparse multiplication agrees after densification") {
    SUBCASE("tiny parity cases") {
        SparseRowMatrix p;
        p.rows = 2;
        p.cols = 4;
        p.row_supports = {{0, 2}, {1}};
        BitVector v(4);
        v.set(0, true);
        v.set(2, true);
        BitVector res = sparse_mat_vec_mul(p, v);
        CHECK_FALSE(res.get(0));  // even parity on {0,2}
        CHECK_FALSE(res.get(1));
    }
    Rng rng(12);
    for (int it = 0; it < 50; ++it) {
        SparseRowMatrix p;
        p.rows = 1 + rng.below(40);
        p.cols = 8 + rng.below(120);
        p.row_supports.resize(p.rows);
        for (auto& sup : p.row_supports)
            sup = rng.distinct(static_cast<uint32_t>(p.cols), 1 + rng.below(5));
        BitVector v = BitVector::random(p.cols, rng);
        CHECK(sparse_mat_vec_mul(p, v) == mat_vec_mul(p.densify(), v));
    }
}

TEST_CASE("systematic_form basics") {
    SUBCASE("already systematic stays put") {
        BitMatrix m(2, 4);
        m.set(0, 0, true);
        m.set(1, 1, true);
        m.set(0, 3, true);
        SystematicForm sf = systematic_form(m);
        CHECK(sf.rank == 2);
        CHECK(sf.mat == m);
        for (size_t j = 0; j < 4; ++j) CHECK(sf.col_perm[j] == j);
    }
    SUBCASE("all-zero has rank 0") {
        BitMatrix m(2, 4);
        CHECK(systematic_form(m).rank == 0);
    }
    SUBCASE("identity block appears") {
        Rng rng(5);
        BitMatrix m = BitMatrix::random(6, 10, rng);
        SystematicForm sf = systematic_form(m);
        for (size_t i = 0; i < sf.rank; ++i)
            for (size_t j = 0; j < sf.rank; ++j)
                CHECK(sf.mat.get(i, j) == (i == j));
        for (size_t i = sf.rank; i < 6; ++i)
            CHECK(sf.mat.row(i).is_zero());
    }
}

TEST_CASE("systematic_form preserves row space (exhaustive, <=16 cols)") {
    Rng rng(21);
    for (int it = 0; it < 20; ++it) {
        size_t rows = 1 + rng.below(8), cols = 2 + rng.below(11);
        BitMatrix m = BitMatrix::random(rows, cols, rng);
        SystematicForm sf = systematic_form(m);
        // undo the column permutation on the reduced matrix
        BitMatrix back(rows, cols);
        for (size_t i = 0; i < rows; ++i)
            for (size_t j = 0; j < cols; ++j)
                if (sf.mat.get(i, j)) back.set(i, sf.col_perm[j], true);
        CHECK(span_of(m) == span_of(back));
    }
}

TEST_CASE("nullspace basics") {
    SUBCASE("[1 1] kernel is (1,1)") {
        BitMatrix m(1, 2);
        m.set(0, 0, true);
        m.set(0, 1, true);
        BitMatrix b = nullspace_basis(m);
        REQUIRE(b.cols() == 1);
        CHECK(b.get(0, 0));
        CHECK(b.get(1, 0));
    }
    SUBCASE("full column rank means empty basis") {
        BitMatrix m = BitMatrix::identity(5);
        CHECK(nullspace_basis(m).cols() == 0);
    }
}

TEST_CASE("nullspace dimension + rank = columns, products vanish (200 seeds)") {
    for (uint64_t seed = 0; seed < 200; ++seed) {
        Rng rng(seed);
        size_t rows = 1 + rng.below(30), cols = 1 + rng.below(30);
        BitMatrix m = BitMatrix::random(rows, cols, rng);
        size_t rank = rank_of(m);
        BitMatrix b = nullspace_basis(m);
        CHECK(b.cols() == cols - rank);
        for (size_t j = 0; j < b.cols(); ++j) {
            BitVector col(cols);
            for (size_t i = 0; i < cols; ++i)
                if (b.get(i, j)) col.set(i, true);
            CHECK(mat_vec_mul(m, col).is_zero());
        }
        // columns independent: rank of basis equals its column count
        CHECK(rank_of(b) == b.cols());
    }
}

TEST_CASE("permutation round-trip is the identity") {
    Rng rng(33);
    for (int it = 0; it < 30; ++it) {
        size_t n = 1 + rng.below(64);
        Permutation pi = Permutation::random(n, rng);
        Permutation inv = pi.inverse();
        BitVector v = BitVector::random(n, rng);
        CHECK(inv.apply(pi.apply(v)) == v);
        BitMatrix m = BitMatrix::random(n, 1 + rng.below(20), rng);
        CHECK(inv.apply_rows(pi.apply_rows(m)) == m);
    }
}

TEST_CASE("bit vector canonical form and weight") {
    Rng rng(44);
    BitVector v = BitVector::random(67, rng);
    size_t w = 0;
    for (size_t i = 0; i < 67; ++i) w += v.get(i);
    CHECK(v.weight() == w);
    CHECK((v.words().back() >> 3) == 0);  // bits past length are clear
    BitVector c = v.complement();
    CHECK(c.weight() == 67 - w);
}

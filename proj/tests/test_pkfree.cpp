#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "prc/attack_pkfree.hpp"
#include "prc/attack_weakkey.hpp"
#include "prc/ldpc.hpp"

using namespace prc;

TEST_CASE("pairwise differences cancel the pad") {
    SUBCASE("identical pair is zero") {
        Codeword a, b;
        Rng rng(1);
        a.x = BitVector::random(64, rng);
        b.x = a.x;
        auto ys = pairwise_differences({a, b});
        REQUIRE(ys.size() == 1);
        CHECK(ys[0].is_zero());
    }
    SUBCASE("(z, z+e) yields e") {
        Rng rng(2);
        BitVector z = BitVector::random(64, rng);
        BitVector e = BitVector::bernoulli(64, 0.1, rng);
        Codeword a, b;
        a.x = z;
        b.x = z ^ e;
        auto ys = pairwise_differences({a, b});
        CHECK(ys[0] == e);
    }
    SUBCASE("odd count is an error") {
        Codeword a;
        a.x = BitVector(8);
        CHECK_THROWS_AS(pairwise_differences({a}), std::invalid_argument);
    }
    SUBCASE("difference noise rate is 2w(1-w)") {
        PrcParams p = PrcParams::configured(Scheme::LLM, 2048, 3, 0.1);
        KeyPair kp = keygen_llm(p, 3);
        // force s = 0 on both sides so the difference is e1 + e2 exactly
        double rate = 0.0;
        const int pairs = 60;
        Rng rng(9);
        for (int i = 0; i < pairs; ++i) {
            BitVector e1 = BitVector::bernoulli(p.n, p.omega, rng);
            BitVector e2 = BitVector::bernoulli(p.n, p.omega, rng);
            rate += static_cast<double>((e1 ^ e2).weight()) / p.n;
        }
        rate /= pairs;
        double wp = pair_noise_rate(0.1);
        CHECK(wp == doctest::Approx(0.18));
        double sigma = std::sqrt(wp * (1 - wp) / (static_cast<double>(p.n) * pairs));
        CHECK(std::fabs(rate - wp) < 3 * sigma);
    }
}

TEST_CASE("per-vector threshold") {
    CHECK(pkfree_tau1(0.0, 3) == doctest::Approx(0.75));
    CHECK(pkfree_tau1(0.1, 3) == doctest::Approx(0.5 + 0.262144 / 4).epsilon(1e-9));
    for (double w : {0.01, 0.05, 0.1, 0.2}) {
        double wp = pair_noise_rate(w);
        double biased = 0.5 * (1.0 + std::pow(1 - 2 * wp, 3));
        double t1 = pkfree_tau1(w, 3);
        CHECK(t1 > 0.5);
        CHECK(t1 < biased);
    }
}

TEST_CASE("omega estimator inverts the pair rate") {
    Rng rng(4);
    std::vector<BitVector> ys;
    double w = 0.07, wp = pair_noise_rate(w);
    for (int i = 0; i < 50; ++i) ys.push_back(BitVector::bernoulli(4096, wp, rng));
    double est = estimate_omega_from_pairs(ys);
    CHECK(std::fabs(est - w) < 0.01);
}

TEST_CASE("true dual row bias matches the closed form") {
    PrcParams p = PrcParams::configured(Scheme::LLM, 1024, 3, 0.05);
    KeyPair kp = keygen_llm(p, 11);
    const auto& h = kp.sk.P.row_supports[0];
    double wp = pair_noise_rate(p.omega);
    double pz = 0.5 * (1.0 + std::pow(1 - 2 * wp, 3));
    int zeros = 0;
    const int m = 2000;
    for (uint64_t s = 0; s < m; ++s) {
        auto c1 = encode(kp.pk, p, 2 * s).first;
        auto c2 = encode(kp.pk, p, 2 * s + 1).first;
        BitVector y = c1.x ^ c2.x;
        unsigned parity = 0;
        for (uint32_t j : h) parity ^= y.get(j);
        if (!parity) ++zeros;
    }
    double obs = static_cast<double>(zeros) / m;
    double sigma = std::sqrt(pz * (1 - pz) / m);
    CHECK(std::fabs(obs - pz) < 3.5 * sigma);
}

TEST_CASE("uniform targets stay silent at scale") {
    Rng rng(21);
    const uint32_t n = 1024;
    const uint32_t m = default_pair_count(n);
    CHECK(default_pair_count(4096) == 288);
    PkFreeConfig cfg;
    cfg.weight = 3;
    cfg.omega = 0.02;
    cfg.n_times = 400;
    int false_verdicts = 0;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<Codeword> targets(2 * m);
        for (auto& cw : targets) cw.x = BitVector::random(n, rng);
        PkFreeVerdict v = pkfree_distinguish(targets, cfg, trial);
        if (v.verdict) ++false_verdicts;
    }
    CHECK(false_verdicts == 0);
}

TEST_CASE("watermarked toy instances trigger at a healthy rate") {
    PrcParams p = PrcParams::configured(Scheme::REVISED, 64, 3, 0.05);
    p.g = 12;
    p.r = 52;
    PkFreeConfig cfg;
    cfg.weight = 3;
    cfg.omega = p.omega;
    cfg.n_times = static_cast<uint64_t>(std::ceil(3.0 * binom(64, 3) / p.r));
    const uint32_t m = default_pair_count(64);
    int hits = 0;
    const int trials = 60;
    for (int trial = 0; trial < trials; ++trial) {
        KeyPair kp = keygen_revised(p, 500 + trial);
        std::vector<Codeword> targets;
        for (uint32_t s = 0; s < 2 * m; ++s)
            targets.push_back(encode(kp.pk, p, trial * 10000 + s).first);
        if (pkfree_distinguish(targets, cfg, trial).verdict) ++hits;
    }
    CHECK(static_cast<double>(hits) / trials >= 0.3);
}

TEST_CASE("weight-2 variant fires on planted duplicate rows") {
    PrcParams p = PrcParams::configured(Scheme::LLM, 512, 3, 0.02);
    KeyPair kp = keygen_llm(p, 7);
    DuplicatePairs dp = find_duplicate_rows(kp.pk.G);
    REQUIRE(dp.weak());
    const uint32_t m = default_pair_count(p.n);
    std::vector<Codeword> targets;
    for (uint32_t s = 0; s < 2 * m; ++s) targets.push_back(encode(kp.pk, p, s).first);
    PkFreeConfig cfg;
    cfg.weight = 2;
    cfg.omega = p.omega;
    cfg.n_times = static_cast<uint64_t>(binom(512, 2));  // exhaustive
    PkFreeVerdict v = pkfree_distinguish(targets, cfg, 3);
    CHECK(v.verdict);
    CHECK(v.s_counter >= 1);
    // the triggering parities are actual duplicated coordinate pairs
    REQUIRE(!v.triggered.empty());
    size_t genuine = 0;
    for (const auto& sup : v.triggered) {
        REQUIRE(sup.size() == 2);
        if (kp.pk.G.row(sup[0]) == kp.pk.G.row(sup[1])) ++genuine;
    }
    CHECK(genuine == v.triggered.size());
}

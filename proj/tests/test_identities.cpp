#include <catch2/catch_amalgamated.hpp>

#include "twothree/identities.hpp"

#include "twothree/search.hpp"

using namespace twothree;

TEST_CASE("binomial sums lemma") {
    const SumsLemmaReport report = verify_sums_lemma(201);
    CHECK(report.ok);
    CHECK(report.rows.size() == 101);

    auto row = [&](unsigned t) -> const SumsLemmaRow& { return report.rows[(t - 1) / 2]; };
    CHECK(row(1).plain_sum == 1);
    CHECK(row(1).alternating_sum == 1);
    CHECK(row(1).sign == 1);
    CHECK(row(5).plain_sum == 16);
    CHECK(row(5).alternating_sum == -4);
    CHECK(row(5).sign == -1);
    CHECK(row(7).plain_sum == 64);
    CHECK(row(7).alternating_sum == -8);
    CHECK(row(3).sign == 1);
    CHECK(row(9).sign == 1);    // sign pattern has period 8 in t
    CHECK(row(11).sign == 1);   // 11 = 3 (mod 8)
    CHECK(row(13).sign == -1);  // 13 = 5 (mod 8)

    CHECK_THROWS_AS(verify_sums_lemma(10), std::invalid_argument);
}

TEST_CASE("expansion spot checks") {
    // (1 + sqrt(-1))^3 has real part -2 = 1 - 3
    const ExpansionCheck quad = check_surd_power(1, 1, 1, 3);
    CHECK(quad.ok);
    CHECK(quad.lhs_re == -2);
    CHECK(quad.lhs_im == 2);

    // degree 1: both sides are X1 (or A) identically
    CHECK(check_surd_power(9, 4, 5, 1).ok);
    const ExpansionCheck deg1 = check_doubled_surd_power(14, 6, 3, 5, 1);
    CHECK(deg1.ok);
    CHECK(deg1.lhs_re == 14);

    // gamma^2 = alpha with (A1, B1, w, n) = (1, 1, 3, 5): A = -2, B = 2
    const ExpansionCheck sq = check_gamma_square(1, 1, 3, 5);
    CHECK(sq.ok);
    CHECK(sq.lhs_re == -2);
    CHECK(sq.lhs_im == 2);

    // half-integer case: gamma = (sqrt(3)+sqrt(-5))/2 gives alpha = (-1+sqrt(-15))/2
    const ExpansionCheck half = check_gamma_square(Rat(1, 2), Rat(1, 2), 3, 5);
    CHECK(half.ok);
    CHECK(half.lhs_re == Rat(-1, 2));
    CHECK(half.lhs_im == Rat(1, 2));

    const ExpansionCheck fifth = check_gamma_fifth_power(1, 1, 3, 5);
    CHECK(fifth.ok);
    // gamma^5 coefficients: A1(w^2 - 10wn + 5n^2) = 9 - 150 + 125 = -16
    CHECK(fifth.lhs_re == -16);
    CHECK(fifth.lhs_im == Rat(5 * 9 - 150 + 25));

    CHECK(check_alpha_power(Rat(1, 2), Rat(1, 2), 3, 5, 3).ok);
    CHECK(check_alpha_power(Rat(-7), Rat(4), 2, 5, 5).ok);
}

TEST_CASE("seeded expansion batches are exact and reproducible") {
    const auto batches = run_all_expansion_samples(200, kDefaultSampleSeed);
    REQUIRE(batches.size() == 5);
    for (const ExpansionBatchReport& batch : batches) {
        CHECK(batch.samples == 200);
        CHECK(batch.failures == 0);
        CHECK(batch.ok);
    }
    // bit-identical reproduction with the same seed
    const auto again = run_expansion_samples(ExpansionKind::AlphaPower, 50, 12345);
    const auto again2 = run_expansion_samples(ExpansionKind::AlphaPower, 50, 12345);
    CHECK(again.failures == again2.failures);
    CHECK(again.ok == again2.ok);
}

TEST_CASE("residue suites cover their full grids") {
    const auto suites = residue_checks();
    REQUIRE(suites.size() == 3);
    CHECK(suites[0].grid_size == 144);   // odd n, odd Y1, l, m in {1,2,3}
    CHECK(suites[1].grid_size == 1024);  // n = 1 (mod 8) residues, odd 2A1, 2B1 mod 32
    CHECK(suites[2].grid_size == 320);   // both unit-obstruction sub-grids
    for (const ResidueSuiteReport& suite : suites) {
        CHECK(suite.grid_size > 0);
        CHECK(suite.violations == 0);
        CHECK(suite.ok);
    }
}

TEST_CASE("mod-32 grid is empty off the admissible residue class") {
    CHECK(mod32_grid(1).size() == 1024);
    CHECK(mod32_grid(5).empty());
    CHECK(mod32_grid(3).empty());
}

TEST_CASE("square-free reduction") {
    const CandidateTuple c{175, 2, 3, 4, 7};
    const CandidateTuple reduced = squarefree_reduce(c);
    CHECK(reduced.n == 7);
    CHECK(reduced.x == 10);
    CHECK(reduced.y == pow_ui(3, 25));
    CHECK(reduced.l == 4);
    CHECK(reduced.m == 7);
    CHECK(is_squarefree(reduced.n));
    CHECK(gcd(reduced.n * reduced.x, reduced.y) == 1);

    // already square-free: unchanged
    const CandidateTuple flat{7, 2, 3, 1, 1};
    CHECK(squarefree_reduce(flat) == flat);

    // a pure square exponent is rejected with the catalog explanation
    CHECK_THROWS_AS(squarefree_reduce({4, 3, 5, 1, 1}), std::domain_error);
    CHECK_THROWS_MATCHES(squarefree_reduce({9, 2, 5, 1, 1}), std::domain_error,
                         Catch::Matchers::MessageMatches(
                             Catch::Matchers::ContainsSubstring("catalog")));

    CHECK_THROWS_AS(squarefree_reduce({6, 2, 3, 1, 1}), std::invalid_argument);  // gcd(NX, Y)
}

TEST_CASE("substitution identity behind the reduction") {
    SampleRng rng(0x5eed);
    for (int i = 0; i < 100; ++i) {
        const unsigned long u = static_cast<unsigned long>(rng.uniform(1, 10));
        const unsigned long v = static_cast<unsigned long>(rng.uniform(1, 4));
        const Int x = rng.uniform(1, 50);
        const Int y = rng.uniform(1, 20);
        const Int c = pow_ui(y, u * v * v) - Int(u) * v * v * x * x;
        CHECK(Int(u) * (v * x) * (v * x) + c == pow_ui(pow_ui(y, v * v), u));
    }
}

TEST_CASE("mod-6 filter") {
    CHECK(mod6_filter({7, 5, 13, 1, 1}));       // (1, 5, 1) residues
    CHECK(!mod6_filter({9, 5, 13, 1, 1}));      // N = 3 (mod 6)
    CHECK(!mod6_filter({7, 5, 8, 1, 1}));       // Y even
    CHECK(!mod6_filter({7, 3, 13, 1, 1}));      // X = 3 (mod 6)

    // the filter never rejects a variant-equation solution's X, Y residues
    SearchConfig cfg;
    cfg.n_max = 4;
    cfg.y_max = 12;
    cfg.l_max = 5;
    cfg.m_max = 5;
    const SearchReport rep = search_variant(cfg);
    REQUIRE(!rep.solutions.empty());
    for (const CandidateTuple& sol : rep.solutions) {
        const unsigned long rx = mod_ui(sol.x, 6), ry = mod_ui(sol.y, 6);
        CHECK((rx == 1 || rx == 5));
        CHECK((ry == 1 || ry == 5));
    }
}

TEST_CASE("candidate validation") {
    CHECK_THROWS_AS(CandidateTuple({1, 1, 1, 1, 1}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(CandidateTuple({7, 0, 1, 1, 1}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(CandidateTuple({7, 2, 14, 1, 1}).validate(), std::invalid_argument);
    CHECK_NOTHROW(CandidateTuple({7, 2, 3, 1, 1}).validate());
}

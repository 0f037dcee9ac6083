#include "doctest.h"
#include "test_helpers.hpp"

using namespace submodkit;

TEST_CASE("code sets canonicalize and validate") {
    const CodeSet A(3, {5, 1, 5, 3});
    CHECK(A.size() == 3);
    CHECK(A.words() == std::vector<std::uint32_t>{1, 3, 5});
    CHECK(A.contains(3));
    CHECK_FALSE(A.contains(2));
    CHECK_THROWS_AS(CodeSet(2, {4}), DomainError);
    CHECK_THROWS_AS(CodeSet(2, {}), DomainError);
}

TEST_CASE("edge counts: full square and the three-word set") {
    const GraphStats full2 = edge_counts(testgen::full_cube(2), 2);
    CHECK(full2.edge_counts[0] == 4);
    CHECK(full2.edge_counts[1] == 2);
    CHECK(full2.boundary_counts[0] == 0);

    // A = {+++, ++-, +-+}
    const CodeSet A(3, {0b111, 0b011, 0b101});
    const GraphStats s = edge_counts(A, 2);
    CHECK(s.edge_counts[0] == 2);
    CHECK(s.edge_counts[1] == 1);

    const CodeSet single(4, {0b0110});
    const GraphStats s1 = edge_counts(single, 4);
    for (int d = 1; d <= 4; ++d) {
        CHECK(s1.edge_counts[static_cast<std::size_t>(d - 1)] == 0);
        CHECK(s1.boundary_counts[static_cast<std::size_t>(d - 1)] == binom_u64(4, d));
    }

    CHECK_THROWS_AS(edge_counts(A, 0), DomainError);
    CHECK_THROWS_AS(edge_counts(A, 4), DomainError);
}

TEST_CASE("m_d and l_d: small exact cases") {
    // any set with a distance-1 pair: m_1 = 2, l_1 = 1
    const CodeSet pair(3, {0b111, 0b011});
    const MdValue m1 = compute_md(pair, 1);
    CHECK(m1.value == 2);
    CHECK_FALSE(m1.vacuous);
    const MdValue l1 = compute_ld(pair, 1);
    CHECK(l1.value == 1);
    CHECK_FALSE(l1.vacuous);

    // full cube: every flip stays inside, so l_d is vacuous at its cap
    const CodeSet cube = testgen::full_cube(3);
    const MdValue mc = compute_md(cube, 2);
    CHECK(mc.value == 4);
    const MdValue lc = compute_ld(cube, 2);
    CHECK(lc.vacuous);
    CHECK(lc.value == 3);

    // no distance-2 pair at all: m_2 vacuous at its cap
    const CodeSet sparse(4, {0b0000, 0b0001});
    const MdValue m2 = compute_md(sparse, 2);
    CHECK(m2.vacuous);
    CHECK(m2.value == 2);  // min(2^2, |A|)
}

TEST_CASE("m_d/l_d agree with the brute transcription") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        std::mt19937_64 rng(seed);
        const int n = 4 + static_cast<int>(rng() % 4);
        const int size = 2 + static_cast<int>(rng() % (std::min(30, 1 << n) - 1));
        const CodeSet A = oracle::random_code_set(n, size, seed);
        for (int d = 1; d <= std::min(3, n); ++d) {
            const auto [md_b, ld_b] = oracle::brute_md_ld(A, d);
            const MdValue md = compute_md(A, d);
            const MdValue ld = compute_ld(A, d);
            CHECK(md.value == md_b.value);
            CHECK(md.vacuous == md_b.vacuous);
            CHECK(ld.value == ld_b.value);
            CHECK(ld.vacuous == ld_b.vacuous);
        }
    }
}

TEST_CASE("bound report: d=1 refined closed form") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        std::mt19937_64 rng(seed);
        const int n = 4 + static_cast<int>(rng() % 4);
        const int size = 2 + static_cast<int>(rng() % (std::min(40, 1 << n) - 1));
        const CodeSet A = oracle::random_code_set(n, size, seed);
        const BoundReport b = bound_report(A, 1);
        REQUIRE(b.refined.has_value());
        const double expected = 0.5 * static_cast<double>(A.size()) *
                                std::log2(static_cast<double>(A.size()));
        CHECK(*b.refined == doctest::Approx(expected).epsilon(1e-12));
        CHECK(b.holds);
        CHECK(*b.refined <= b.default_bound + 1e-9);
    }
}

TEST_CASE("bound report: subcube families hit the worked example") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const int n = 6;
        const int d_max = 2;
        const CodeSet A = subcube_family(n, d_max, seed);
        CHECK(is_subcube_closed(A, d_max));
        for (int d = 1; d <= d_max; ++d) {
            const MdValue md = compute_md(A, d);
            if (md.vacuous) continue;
            CHECK(md.value == (std::uint64_t{1} << d));
            // with the default l_d = 1 the refined bound collapses to
            // (1/2) C(n,d) |A| log2|A| / n
            const BoundReport b = bound_report(A, d, std::make_pair(md.value, std::uint64_t{1}));
            REQUIRE(b.refined.has_value());
            const double expected = 0.5 * binom_double(n, d) * static_cast<double>(A.size()) *
                                    std::log2(static_cast<double>(A.size())) / n;
            CHECK(*b.refined == doctest::Approx(expected).epsilon(1e-9));
            CHECK(b.holds);
        }
    }
}

TEST_CASE("bound report: usefulness verdict equals refined <= trivial") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        std::mt19937_64 rng(seed);
        const int n = 4 + static_cast<int>(rng() % 5);
        const int size = 2 + static_cast<int>(rng() % (std::min(50, 1 << n) - 1));
        const CodeSet A = oracle::random_code_set(n, size, seed);
        for (int d = 1; d <= std::min(3, n); ++d) {
            const BoundReport b = bound_report(A, d);
            CHECK(b.holds);
            if (b.refined) {
                CHECK(b.useful == (*b.refined <= b.trivial * (1 + 1e-9)));
                CHECK(*b.refined <= b.default_bound * (1 + 1e-9));
            }
        }
    }

    // the full cube sits exactly at |A| = m_d^{n/d}: refined == trivial
    const CodeSet cube = testgen::full_cube(4);
    const BoundReport b = bound_report(cube, 2);
    REQUIRE(b.refined.has_value());
    CHECK(*b.refined == doctest::Approx(b.trivial));
    CHECK(b.useful);
}

TEST_CASE("bound report: override validation") {
    const CodeSet cube = testgen::full_cube(3);
    CHECK_THROWS_AS(bound_report(cube, 1, std::make_pair(std::uint64_t{3}, std::uint64_t{1})),
                    PreconditionError);  // m_1 can never exceed 2
    const CodeSet A(3, {0b111, 0b011, 0b101});
    CHECK_THROWS_AS(bound_report(A, 2, std::make_pair(std::uint64_t{4}, std::uint64_t{1})),
                    PreconditionError);  // definitional minimum is 3
    const BoundReport ok = bound_report(A, 2, std::make_pair(std::uint64_t{2}, std::uint64_t{1}));
    CHECK(ok.m_d == 2);
    CHECK(ok.holds);
}

TEST_CASE("generalized Han step inequality per instance") {
    // C(n-1,d-1) log|A| >= C(n,d) log l_d + (2 E_d / |A|) log(m_d/l_d)
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        std::mt19937_64 rng(seed);
        const int n = 4 + static_cast<int>(rng() % 5);
        const int size = 2 + static_cast<int>(rng() % (std::min(60, 1 << n) - 1));
        const CodeSet A = oracle::random_code_set(n, size, seed);
        for (int d = 1; d <= std::min(3, n); ++d) {
            const MdValue md = compute_md(A, d);
            const MdValue ld = compute_ld(A, d);
            const std::uint64_t e_d =
                edge_counts(A, d).edge_counts[static_cast<std::size_t>(d - 1)];
            const double lhs = binom_double(n - 1, d - 1) *
                               std::log2(static_cast<double>(A.size()));
            const double rhs =
                binom_double(n, d) * std::log2(static_cast<double>(ld.value)) +
                2.0 * static_cast<double>(e_d) / static_cast<double>(A.size()) *
                    std::log2(static_cast<double>(md.value) / static_cast<double>(ld.value));
            CHECK(holds_geq(lhs, rhs, 1e-9));
        }
    }
}

TEST_CASE("total edge bound") {
    const CodeSet A(3, {0b111, 0b011, 0b101});
    const TotalEdgeBound t1 = total_edge_bound(A, 1);
    REQUIRE(t1.entropy_form.has_value());
    CHECK(t1.sum_form == doctest::Approx(*t1.entropy_form));
    CHECK(t1.sum_form ==
          doctest::Approx(0.5 * 3 * std::log2(3.0)));
    CHECK(t1.holds);

    // n=11, tau=6: entropy form uses Hb(1/2) = 1
    const CodeSet B = oracle::random_code_set(11, 40, 7);
    const TotalEdgeBound t6 = total_edge_bound(B, 6);
    REQUIRE(t6.entropy_form.has_value());
    CHECK(*t6.entropy_form ==
          doctest::Approx(0.5 * std::exp2(10.0) * 40 * std::log2(40.0)));
    CHECK(t6.holds);

    // tau beyond (n+1)/2 suppresses the entropy form
    const TotalEdgeBound t7 = total_edge_bound(B, 7);
    CHECK_FALSE(t7.entropy_form.has_value());

    const CodeSet single(5, {7});
    const TotalEdgeBound ts = total_edge_bound(single, 2);
    CHECK(ts.exact_total == 0);
    CHECK(ts.sum_form == 0.0);
}

TEST_CASE("influence: dictator set and the full cube") {
    for (int n : {3, 5, 8}) {
        const CodeSet dict = testgen::dictator_set(n);
        const double inf = influence(dict, 1);
        CHECK(inf == doctest::Approx(1.0 / n).epsilon(1e-12));
        // total influence meets 2 P log2(1/P) with equality
        CHECK(n * inf == doctest::Approx(2 * 0.5 * std::log2(2.0)).epsilon(1e-12));
        const InfluenceBounds b = influence_bounds(dict, 1);
        CHECK(b.holds);
        CHECK(b.exact == doctest::Approx(b.default_lb).epsilon(1e-12));
    }

    const CodeSet cube = testgen::full_cube(4);
    for (int d = 1; d <= 3; ++d) {
        CHECK(influence(cube, d) == 0.0);
        const InfluenceBounds b = influence_bounds(cube, d);
        CHECK(b.holds);
        if (d == 1) CHECK(b.default_lb == doctest::Approx(0.0));
    }
}

TEST_CASE("influence lower bounds on random sets") {
    for (std::uint64_t seed = 1; seed <= 40; ++seed) {
        std::mt19937_64 rng(seed);
        const int n = 5 + static_cast<int>(rng() % 4);
        const int size = 2 + static_cast<int>(rng() % ((1 << n) - 2));
        const CodeSet A = oracle::random_code_set(n, size, seed);
        for (int d = 1; d <= 2; ++d) {
            CHECK(influence_bounds(A, d).holds);
        }
    }
}

TEST_CASE("subcube families") {
    // single d_max-subcube built by closing a diagonal pair
    const CodeSet one_cube(5, {0b00000, 0b00011});
    // closure of a distance-2 pair spans a 4-word square
    CHECK_FALSE(is_subcube_closed(one_cube, 2));

    // a single 3-subcube has 2^3 words and m_3 = 2^3
    std::vector<std::uint32_t> cube_words;
    for (std::uint32_t sub = 0; sub < 8; ++sub) cube_words.push_back(0b10000 | sub);
    const CodeSet single_cube(5, cube_words);
    CHECK(single_cube.size() == 8);
    const MdValue m3 = compute_md(single_cube, 3);
    CHECK_FALSE(m3.vacuous);
    CHECK(m3.value == 8);

    const CodeSet closed = subcube_family(6, 2, 1);
    CHECK(is_subcube_closed(closed, 2));

    const CodeSet point = subcube_family(6, 0, 3);
    CHECK(point.size() == 1);

    // determinism per seed
    const CodeSet again = subcube_family(6, 2, 1);
    CHECK(closed.words() == again.words());
}

TEST_CASE("d=1 entropy identity") {
    const D1Identity full3 = d1_entropy_identity(testgen::full_cube(3));
    CHECK(full3.lhs == doctest::Approx(3.0));
    CHECK(full3.rhs == doctest::Approx(3.0));
    CHECK(full3.holds);

    const D1Identity single = d1_entropy_identity(CodeSet(4, {0b1010}));
    CHECK(single.lhs == doctest::Approx(0.0));
    CHECK(single.rhs == 0.0);
    CHECK(single.holds);

    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        std::mt19937_64 rng(seed);
        const int n = 3 + static_cast<int>(rng() % 8);
        const int size = 1 + static_cast<int>(rng() % (1 << n));
        const CodeSet A = oracle::random_code_set(n, size, seed);
        const D1Identity id = d1_entropy_identity(A);
        CHECK(id.holds);
        CHECK(id.lhs == doctest::Approx(id.rhs).epsilon(1e-9).scale(1.0));
    }
}

TEST_CASE("edge counts agree with the brute pair scan") {
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        std::mt19937_64 rng(seed);
        const int n = 3 + static_cast<int>(rng() % 8);
        const int size = 1 + static_cast<int>(rng() % std::min(60, 1 << n));
        const CodeSet A = oracle::random_code_set(n, size, seed);
        const int tau = 1 + static_cast<int>(rng() % std::min(3, n));
        const GraphStats fast = edge_counts(A, tau);
        const GraphStats brute = oracle::brute_pairs(A, tau);
        CHECK(fast.edge_counts == brute.edge_counts);
        CHECK(fast.boundary_counts == brute.boundary_counts);
    }
}

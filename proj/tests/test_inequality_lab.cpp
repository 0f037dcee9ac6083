#include "doctest.h"
#include "test_helpers.hpp"

using namespace submodkit;

namespace {

JointPmf fair_bits(int n) {
    const std::size_t cells = std::size_t{1} << n;
    return JointPmf(std::vector<int>(static_cast<std::size_t>(n), 2),
                    std::vector<double>(cells, 1.0 / static_cast<double>(cells)));
}

JointPmf fully_correlated_bits(int n) {
    std::vector<double> probs(std::size_t{1} << n, 0.0);
    probs.front() = 0.5;
    probs.back() = 0.5;
    return JointPmf(std::vector<int>(static_cast<std::size_t>(n), 2), std::move(probs));
}

}  // namespace

TEST_CASE("tk sequence: flat for independence, 1/k for full correlation") {
    const SequenceReport flat =
        tk_sequence(build_entropic_fn(fair_bits(3)), ScalarTransform::identity());
    CHECK(flat.direction_claimed == Direction::decreasing);
    CHECK(flat.holds);
    for (double v : flat.values) CHECK(v == doctest::Approx(1.0));

    const SequenceReport corr =
        tk_sequence(build_entropic_fn(fully_correlated_bits(3)), ScalarTransform::identity());
    CHECK(corr.values[0] == doctest::Approx(1.0));
    CHECK(corr.values[1] == doctest::Approx(0.5));
    CHECK(corr.values[2] == doctest::Approx(1.0 / 3.0));
    CHECK(corr.holds);
}

TEST_CASE("tk sequence rejects f(empty) != 0") {
    const SetFunction shifted(GroundSet::numbered(2), {0.5, 1, 1, 1.5});
    CHECK_THROWS_AS(tk_sequence(shifted, ScalarTransform::identity()), PreconditionError);
}

TEST_CASE("tk sequence: unknown case is measured, not claimed") {
    // submodular f with increasing *concave-only* g is outside the table
    const SetFunction f = oracle::random_rank_function(4, 3);
    const SequenceReport r = tk_sequence(f, ScalarTransform::neg_exp2_scaled(-1.0));
    CHECK(r.direction_claimed == Direction::none);
    CHECK(r.holds);  // vacuous
}

TEST_CASE("averaged subset sums are concave in k for submodular f") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        std::mt19937_64 rng(seed);
        const int n = 3 + static_cast<int>(rng() % 3);
        const SetFunction f =
            seed % 2 ? oracle::random_rank_function(n, seed) : testgen::random_coverage(n, seed);
        const std::vector<double> avg = subset_average_sequence(f);
        for (int k = 1; k + 1 <= f.n(); ++k) {
            CHECK(2 * avg[static_cast<std::size_t>(k)] >=
                  avg[static_cast<std::size_t>(k + 1)] + avg[static_cast<std::size_t>(k - 1)] -
                      1e-9 * f.scale());
        }
        // f_k / k decreases
        for (int k = 1; k + 1 <= f.n(); ++k) {
            CHECK(avg[static_cast<std::size_t>(k)] / k >=
                  avg[static_cast<std::size_t>(k + 1)] / (k + 1) - 1e-9 * f.scale());
        }
    }
}

TEST_CASE("scalar transforms expose derived flags") {
    CHECK(ScalarTransform::identity().convex());
    CHECK(ScalarTransform::identity().concave());
    CHECK(ScalarTransform::clipped_power(2.0)(3.0) == doctest::Approx(9.0));
    CHECK(ScalarTransform::clipped_power(2.0)(-1.0) == 0.0);
    CHECK_THROWS_AS(ScalarTransform::clipped_power(0.5), DomainError);
    CHECK_THROWS_AS(ScalarTransform::exp2_scaled(0.0), DomainError);
    CHECK(ScalarTransform::exp2_scaled(-1.0).monotone_dir() == Monotone::decreasing);
    CHECK(ScalarTransform::exp2_scaled(-1.0).convex());
    CHECK(ScalarTransform::neg_exp2_scaled(1.0).monotone_dir() == Monotone::decreasing);
    CHECK(ScalarTransform::neg_exp2_scaled(1.0).concave());
    CHECK(ScalarTransform::neg_exp2_scaled(-2.0).monotone_dir() == Monotone::increasing);
}

TEST_CASE("corollary 2: coefficient and the independent-bits equality") {
    CHECK(c_alpha_coefficient(1.0, 4, 3) == doctest::Approx(1.0));  // C(3,3)

    const int n = 4;
    const SetFunction h = build_entropic_fn(fair_bits(n));
    const Corollary2Report r = corollary2_check(h, 1.0, n - 1);
    CHECK(r.lhs == doctest::Approx(static_cast<double>(n)));
    CHECK(r.rhs == doctest::Approx(static_cast<double>(n)));
    CHECK(r.holds);
    REQUIRE(r.rank_bound.has_value());
    CHECK(r.rank_bound->holds);
}

TEST_CASE("corollary 2: random entropic instances, all alphas and ks") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        const SetFunction f = oracle::random_rank_function(4, seed);
        for (double alpha : {1.0, 1.5, 2.0, 3.0}) {
            for (int k = 1; k <= 3; ++k) {
                const Corollary2Report r = corollary2_check(f, alpha, k);
                CHECK(r.holds);
                REQUIRE(r.rank_bound.has_value());
                CHECK(r.rank_bound->holds);
            }
        }
    }
}

TEST_CASE("corollary 2: alpha=1 admits signed submodular functions") {
    for (std::uint64_t seed = 1; seed <= 15; ++seed) {
        const SetFunction f = testgen::random_signed_submodular(4, seed);
        bool negative_somewhere = false;
        for (double v : f.values()) negative_somewhere |= v < 0;
        for (int k = 1; k <= 3; ++k) CHECK(corollary2_check(f, 1.0, k).holds);
        if (negative_somewhere) {
            CHECK_THROWS_AS(corollary2_check(f, 2.0, 2), PreconditionError);
        }
    }
}

TEST_CASE("corollary 2 rejects non-submodular input") {
    const SetFunction sq(GroundSet::numbered(2), {0, 1, 1, 4});
    CHECK_THROWS_AS(corollary2_check(sq, 1.0, 1), PreconditionError);
}

TEST_CASE("han: equality for independence, slack otherwise") {
    const HanReport ind = han_check(fair_bits(3));
    CHECK(ind.holds);
    CHECK(ind.slack == doctest::Approx(0.0).epsilon(1e-12));

    const HanReport corr = han_check(fully_correlated_bits(3));
    CHECK(corr.lhs == doctest::Approx(0.0));
    CHECK(corr.rhs == doctest::Approx(1.0));
    CHECK(corr.holds);

    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        CHECK(han_check(oracle::random_joint_pmf(4, 3, seed)).holds);
    }
}

TEST_CASE("corollary 3: the named sequences") {
    const SequenceReport h = corollary3_sequences(fair_bits(3), 1.0, NamedSequence::h);
    for (double v : h.values) CHECK(v == doctest::Approx(1.0));
    CHECK(h.holds);

    // r-sequence of a fully correlated pair: (0, 1/2), increasing
    const SequenceReport r = corollary3_sequences(fully_correlated_bits(2), 1.0,
                                                  NamedSequence::r_seq);
    CHECK(r.direction_claimed == Direction::increasing);
    CHECK(r.values[0] == doctest::Approx(0.0));
    CHECK(r.values[1] == doctest::Approx(0.5));
    CHECK(r.holds);

    // s with r=1 on independent fair bits is constant 4
    const SequenceReport s = corollary3_sequences(fair_bits(3), 1.0, NamedSequence::s);
    for (double v : s.values) CHECK(v == doctest::Approx(4.0));
    CHECK(s.holds);
}

TEST_CASE("corollary 3: m and w need integer values and independence") {
    CHECK_THROWS_AS(corollary3_sequences(fair_bits(3), 1.0, NamedSequence::m),
                    PreconditionError);

    // integer-valued but correlated
    std::vector<double> probs{0.5, 0.0, 0.0, 0.5};
    const JointPmf corr({2, 2}, probs,
                        std::vector<std::vector<std::int64_t>>{{0, 1}, {0, 1}});
    CHECK_THROWS_AS(corollary3_sequences(corr, 1.0, NamedSequence::w), PreconditionError);

    // independent integer-valued bits work; m is n * (averaged sums)
    std::vector<double> uprobs(4, 0.25);
    const JointPmf ind({2, 2}, uprobs,
                       std::vector<std::vector<std::int64_t>>{{0, 1}, {0, 1}});
    const SequenceReport m = corollary3_sequences(ind, 1.0, NamedSequence::m);
    CHECK(m.holds);
    CHECK(m.values[0] == doctest::Approx(2.0));   // (1/C(1,0)) * 2 * H(bit) = 2
    CHECK(m.values[1] == doctest::Approx(1.5));   // H(X1+X2)
}

TEST_CASE("corollary 3: every claimed direction on random PMFs") {
    using NS = NamedSequence;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const JointPmf p = oracle::random_joint_pmf(4, 3, seed);
        for (NS which : {NS::h, NS::l, NS::r_seq, NS::s, NS::u, NS::v}) {
            const SequenceReport r = corollary3_sequences(p, 0.5 + (seed % 3) * 0.75, which);
            CHECK(r.holds);
        }
    }
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto marginals = oracle::random_integer_marginals(4, seed);
        // pack independent marginals into a product PMF with integer values
        std::vector<int> sizes;
        std::vector<std::vector<std::int64_t>> values;
        std::size_t cells = 1;
        for (const auto& m : marginals) {
            sizes.push_back(m.alphabet_sizes()[0]);
            values.push_back(m.integer_values()[0]);
            cells *= static_cast<std::size_t>(m.alphabet_sizes()[0]);
        }
        std::vector<double> probs(cells, 1.0);
        std::vector<int> idx(marginals.size(), 0);
        for (std::size_t flat = 0; flat < cells; ++flat) {
            for (std::size_t v = 0; v < marginals.size(); ++v) {
                probs[flat] *= marginals[v].probs()[static_cast<std::size_t>(idx[v])];
            }
            for (int v = static_cast<int>(marginals.size()) - 1; v >= 0; --v) {
                if (++idx[static_cast<std::size_t>(v)] < sizes[static_cast<std::size_t>(v)]) break;
                idx[static_cast<std::size_t>(v)] = 0;
            }
        }
        double total = 0.0;
        for (double q : probs) total += q;
        for (double& q : probs) q /= total;
        const JointPmf p(std::move(sizes), std::move(probs), std::move(values));
        CHECK(corollary3_sequences(p, 1.0, NS::m).holds);
        CHECK(corollary3_sequences(p, 1.0, NS::w).holds);
    }
}

TEST_CASE("corollary 1 sandwich") {
    // binomial sandwich at n=10, k=5: 1024/11 <= 252 <= 1024
    const SetFunction h = build_entropic_fn(fair_bits(4));
    const SandwichReport r4 = corollary1_sandwich(h, ScalarTransform::identity(), 2);
    CHECK(r4.chain_holds);
    CHECK(r4.binom_holds);
    CHECK(r4.lower == doctest::Approx(r4.mid));
    CHECK(r4.mid == doctest::Approx(r4.upper * 2.0 / 4.0));  // g identity, f(T)=|T|

    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const SetFunction f = oracle::random_rank_function(5, seed);
        const SandwichReport r =
            corollary1_sandwich(f, ScalarTransform::clipped_power(2.0), 3);
        CHECK(r.chain_holds);
        CHECK(r.binom_holds);
    }

    CHECK_THROWS_AS(
        corollary1_sandwich(h, ScalarTransform::neg_exp2_scaled(1.0), 2),
        PreconditionError);
}

TEST_CASE("binomial sandwich values at n=10, k=5") {
    const SetFunction h = build_entropic_fn(fair_bits(4));
    (void)h;
    const double ent = std::exp2(10 * binary_entropy(0.5));
    CHECK(ent == doctest::Approx(1024.0));
    CHECK(binom_double(10, 5) == doctest::Approx(252.0));
    CHECK(ent / 11.0 <= 252.0);
}

TEST_CASE("projection bound: grids achieve equality") {
    const ProjectionReport grid = projection_bound(testgen::grid_points(3, 2), 2);
    CHECK(grid.cardinality == 8);
    for (auto m : grid.projection_sizes) CHECK(m == 4);
    CHECK(grid.bound == doctest::Approx(8.0).epsilon(1e-9));
    CHECK(grid.holds);
    CHECK(grid.rate == doctest::Approx(grid.rate_mean).epsilon(1e-9));

    const ProjectionReport single = projection_bound({{3, 1, 4}}, 2);
    CHECK(single.cardinality == 1);
    CHECK(single.bound == doctest::Approx(1.0));
    CHECK(single.holds);

    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
        const auto pts = testgen::random_points(4, 100, 5, seed);
        const ProjectionReport r = projection_bound(pts, 2);
        CHECK(r.holds);
        const auto brute = oracle::brute_projection(pts, 2);
        // dedupe first for the brute count
        auto dedup = pts;
        std::sort(dedup.begin(), dedup.end());
        dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());
        CHECK(oracle::brute_projection(dedup, 2) == r.projection_sizes);
    }
}

TEST_CASE("sum-entropy inequalities: worked example and degenerate variable") {
    const JointPmf bit({2}, {0.5, 0.5}, std::vector<std::vector<std::int64_t>>{{0, 1}});
    const auto checks = sum_epi_checks({bit, bit, bit}, 2);
    REQUIRE(!checks.empty());
    const auto& eq3 = checks.front();
    CHECK(eq3.name == "sum_entropy_subset_bound");
    CHECK(eq3.lhs == doctest::Approx(1.811278124459133));  // H(1/8,3/8,3/8,1/8)
    CHECK(eq3.rhs == doctest::Approx(2.25));               // (1/2) * 3 * 1.5
    for (const auto& c : checks) CHECK(c.holds);

    // X2 deterministic: the entropy bounds collapse to equalities (the
    // arithmetic-mean loosening does not, its terms differ)
    const JointPmf zero({1}, {1.0}, std::vector<std::vector<std::int64_t>>{{0}});
    const auto degenerate = sum_epi_checks({bit, zero}, 1);
    for (const auto& c : degenerate) {
        CHECK(c.holds);
        if (c.name == "sum_entropy_subset_bound" || c.name == "entropy_power_geometric" ||
            c.name == "leave_one_out_geometric") {
            CHECK(c.lhs == doctest::Approx(c.rhs).epsilon(1e-9));
        }
    }

    // optional Shearer form with an explicit family
    const GroundSet g3 = GroundSet::numbered(3);
    const SubsetFamily family(g3, {0b011, 0b101, 0b110});
    const auto with_family =
        sum_epi_checks({bit, bit, bit}, 2, family, 2, full_mask(3));
    CHECK(with_family.back().name == "shearer_sum_entropy");
    CHECK(with_family.back().holds);
}

TEST_CASE("sum-entropy inequalities: random marginals, all k") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        std::mt19937_64 rng(seed);
        const int n = 3 + static_cast<int>(rng() % 2);
        const auto marginals = oracle::random_integer_marginals(n, seed);
        for (int k = 1; k < n; ++k) {
            for (const auto& c : sum_epi_checks(marginals, k)) CHECK(c.holds);
        }
    }
    // i.i.d. inputs: geometric and arithmetic EPI forms coincide
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        const auto marginals = oracle::random_integer_marginals(4, seed, /*iid=*/true);
        const auto checks = sum_epi_checks(marginals, 2);
        double geo = 0, arith = 0;
        for (const auto& c : checks) {
            if (c.name == "entropy_power_geometric") geo = c.rhs;
            if (c.name == "entropy_power_arithmetic") arith = c.rhs;
        }
        CHECK(arith == doctest::Approx(geo).epsilon(1e-9));
    }
}

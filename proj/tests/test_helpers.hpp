#pragma once

// Seeded instance generators shared by the unit and acceptance suites.
// Everything is deterministic per seed.

#include <cstdint>
#include <random>
#include <vector>

#include "submodkit/submodkit.hpp"

namespace testgen {

using submodkit::GroundSet;
using submodkit::JointPmf;
using submodkit::Mask;
using submodkit::SetFunction;

inline double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Arbitrary real table, no structure.
inline SetFunction random_table(int n, std::uint64_t seed, double lo = -2.0,
                                double hi = 2.0) {
    std::mt19937_64 rng(seed);
    std::vector<double> values(std::size_t{1} << n);
    for (double& v : values) v = lo + (hi - lo) * uniform01(rng);
    return SetFunction(GroundSet::numbered(n), std::move(values));
}

/// Weighted coverage: f(S) = sum_j w_j [S meets U_j]. Submodular,
/// monotone, f(empty) = 0.
inline SetFunction random_coverage(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int groups = 2 + static_cast<int>(rng() % 4);
    std::vector<Mask> cover(static_cast<std::size_t>(groups));
    std::vector<double> weight(static_cast<std::size_t>(groups));
    const Mask full = submodkit::full_mask(n);
    for (int j = 0; j < groups; ++j) {
        Mask u = static_cast<Mask>(rng()) & full;
        if (u == 0) u = Mask{1} << (rng() % n);
        cover[static_cast<std::size_t>(j)] = u;
        weight[static_cast<std::size_t>(j)] = 0.1 + uniform01(rng);
    }
    std::vector<double> values(std::size_t{1} << n, 0.0);
    for (Mask s = 0; s < values.size(); ++s) {
        for (int j = 0; j < groups; ++j) {
            if ((s & cover[static_cast<std::size_t>(j)]) != 0) {
                values[s] += weight[static_cast<std::size_t>(j)];
            }
        }
    }
    return SetFunction(GroundSet::numbered(n), std::move(values));
}

/// Entropic minus modular: submodular with f(empty) = 0 and, typically,
/// some negative values.
inline SetFunction random_signed_submodular(int n, std::uint64_t seed) {
    const SetFunction h = submodkit::oracle::random_rank_function(n, seed);
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
    std::vector<double> charge(static_cast<std::size_t>(n));
    for (double& c : charge) c = 0.3 + 0.7 * uniform01(rng);
    std::vector<double> values(h.values());
    for (Mask s = 0; s < values.size(); ++s) {
        for (int i = 0; i < n; ++i) {
            if (submodkit::has_bit(s, i)) values[s] -= charge[static_cast<std::size_t>(i)];
        }
    }
    return SetFunction(h.ground(), std::move(values));
}

/// Supermodular with f(empty) = 0: conditional-entropy function of a
/// random PMF, or a negated coverage function.
inline SetFunction random_supermodular(int n, std::uint64_t seed) {
    if (seed % 2 == 0) {
        return submodkit::build_cond_entropy_fn(
            submodkit::oracle::random_joint_pmf(n, 3, seed));
    }
    const SetFunction cov = random_coverage(n, seed);
    std::vector<double> values(cov.values());
    for (double& v : values) v = -v;
    return SetFunction(cov.ground(), std::move(values));
}

/// Joint PMF where the v-block is conditionally independent given the
/// u-block: p(u) prod_i p(v_i | u). Variables: u first, then v.
inline JointPmf ci_structured_pmf(int u_vars, int v_vars, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int n = u_vars + v_vars;
    std::vector<int> sizes(static_cast<std::size_t>(n));
    for (int& k : sizes) k = 2 + static_cast<int>(rng() % 2);

    std::size_t u_cells = 1;
    for (int i = 0; i < u_vars; ++i) u_cells *= static_cast<std::size_t>(sizes[static_cast<std::size_t>(i)]);
    std::vector<double> pu(u_cells);
    double total = 0.0;
    for (double& p : pu) {
        p = 0.05 + uniform01(rng);
        total += p;
    }
    for (double& p : pu) p /= total;

    // conditional tables: cond[i][u][a]
    std::vector<std::vector<std::vector<double>>> cond(static_cast<std::size_t>(v_vars));
    for (int i = 0; i < v_vars; ++i) {
        cond[static_cast<std::size_t>(i)].resize(u_cells);
        for (std::size_t u = 0; u < u_cells; ++u) {
            auto& row = cond[static_cast<std::size_t>(i)][u];
            row.resize(static_cast<std::size_t>(sizes[static_cast<std::size_t>(u_vars + i)]));
            double rt = 0.0;
            for (double& p : row) {
                p = 0.05 + uniform01(rng);
                rt += p;
            }
            for (double& p : row) p /= rt;
        }
    }

    std::size_t cells = u_cells;
    for (int i = 0; i < v_vars; ++i) cells *= static_cast<std::size_t>(sizes[static_cast<std::size_t>(u_vars + i)]);
    std::vector<double> probs(cells);
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    for (std::size_t flat = 0; flat < cells; ++flat) {
        std::size_t u = 0;
        for (int i = 0; i < u_vars; ++i) {
            u = u * static_cast<std::size_t>(sizes[static_cast<std::size_t>(i)]) +
                static_cast<std::size_t>(idx[static_cast<std::size_t>(i)]);
        }
        double p = pu[u];
        for (int i = 0; i < v_vars; ++i) {
            p *= cond[static_cast<std::size_t>(i)][u]
                     [static_cast<std::size_t>(idx[static_cast<std::size_t>(u_vars + i)])];
        }
        probs[flat] = p;
        for (int v = n - 1; v >= 0; --v) {
            if (++idx[static_cast<std::size_t>(v)] < sizes[static_cast<std::size_t>(v)]) break;
            idx[static_cast<std::size_t>(v)] = 0;
        }
    }
    double ptotal = 0.0;
    for (double p : probs) ptotal += p;
    for (double& p : probs) p /= ptotal;
    return JointPmf(std::move(sizes), std::move(probs));
}

/// Dependent-by-construction PMF: MI-function is provably nonconstant.
/// Retries seeds until the dependence is numerically solid.
inline JointPmf dependent_pmf(int n, int max_alphabet, std::uint64_t seed) {
    for (std::uint64_t s = seed;; s = s * 31 + 1) {
        JointPmf p = submodkit::oracle::random_joint_pmf(n, max_alphabet, s);
        const SetFunction mi = submodkit::build_mi_fn(p);
        double max_mi = 0.0;
        for (double v : mi.values()) max_mi = std::max(max_mi, v);
        if (max_mi > 1e-4) return p;
    }
}

/// {x : x_1 = +1}: the dictator set on coordinate 1.
inline submodkit::CodeSet dictator_set(int n) {
    std::vector<std::uint32_t> words;
    const std::uint64_t cube = std::uint64_t{1} << n;
    for (std::uint64_t w = 0; w < cube; ++w) {
        if (w & 1u) words.push_back(static_cast<std::uint32_t>(w));
    }
    return submodkit::CodeSet(n, std::move(words));
}

inline submodkit::CodeSet full_cube(int n) {
    std::vector<std::uint32_t> words(std::size_t{1} << n);
    for (std::size_t w = 0; w < words.size(); ++w) words[w] = static_cast<std::uint32_t>(w);
    return submodkit::CodeSet(n, std::move(words));
}

/// Axis-aligned grid with s points per dimension.
inline std::vector<submodkit::Point> grid_points(int n, int s) {
    std::vector<submodkit::Point> points;
    std::vector<std::int64_t> idx(static_cast<std::size_t>(n), 0);
    while (true) {
        points.emplace_back(idx);
        int v = n - 1;
        for (; v >= 0; --v) {
            if (++idx[static_cast<std::size_t>(v)] < s) break;
            idx[static_cast<std::size_t>(v)] = 0;
        }
        if (v < 0) break;
    }
    return points;
}

inline std::vector<submodkit::Point> random_points(int n, int count, int range,
                                                   std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<submodkit::Point> points;
    for (int i = 0; i < count; ++i) {
        submodkit::Point p(static_cast<std::size_t>(n));
        for (auto& c : p) c = static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(range));
        points.push_back(std::move(p));
    }
    return points;
}

/// Random subset of the ground set as a mask (never empty).
inline Mask random_subset(int n, std::mt19937_64& rng) {
    const Mask full = submodkit::full_mask(n);
    Mask m = static_cast<Mask>(rng()) & full;
    if (m == 0) m = Mask{1} << (rng() % n);
    return m;
}

}  // namespace testgen

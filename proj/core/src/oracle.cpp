#include "submodkit/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <random>
#include <set>

#include "submodkit/builders.hpp"
#include "submodkit/io.hpp"

namespace submodkit::oracle {

namespace {

double uniform01(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

/// Words as explicit +/-1 coordinate vectors; the oracles compare
/// positions one by one instead of using mask arithmetic.
std::vector<std::vector<int>> as_sign_vectors(const CodeSet& A) {
    std::vector<std::vector<int>> out;
    out.reserve(A.size());
    for (std::uint32_t w : A.words()) {
        std::vector<int> v(static_cast<std::size_t>(A.dimension()));
        for (int i = 0; i < A.dimension(); ++i) {
            v[static_cast<std::size_t>(i)] = ((w >> i) & 1u) ? 1 : -1;
        }
        out.push_back(std::move(v));
    }
    return out;
}

int sign_distance(const std::vector<int>& a, const std::vector<int>& b) {
    int d = 0;
    for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i] ? 1 : 0;
    return d;
}

bool member(const std::vector<std::vector<int>>& words, const std::vector<int>& v) {
    for (const auto& w : words) {
        if (w == v) return true;
    }
    return false;
}

/// First d-combination of {1..n} in colex order (as 0-based indices).
std::vector<int> first_combination(int d) {
    std::vector<int> c(static_cast<std::size_t>(d));
    std::iota(c.begin(), c.end(), 0);
    return c;
}

/// Colex successor; false when exhausted. Matches the ascending-bitmask
/// tuple order the optimized modules document.
bool next_combination(std::vector<int>& c, int n) {
    const int d = static_cast<int>(c.size());
    for (int i = 0; i < d; ++i) {
        const int limit = (i + 1 < d) ? c[static_cast<std::size_t>(i + 1)] : n;
        if (c[static_cast<std::size_t>(i)] + 1 < limit) {
            ++c[static_cast<std::size_t>(i)];
            for (int j = 0; j < i; ++j) c[static_cast<std::size_t>(j)] = j;
            return true;
        }
    }
    return false;
}

}  // namespace

PredicateVerdict submodularity_by_definition(const SetFunction& f, double tol) {
    if (f.n() > 12) {
        throw CapError("submodularity_by_definition refuses n > 12 (4^n pairs)");
    }
    const Mask table = static_cast<Mask>(f.ground().table_size());
    PredicateVerdict verdict;
    verdict.worst_violation = -std::numeric_limits<double>::infinity();
    for (Mask s = 0; s < table; ++s) {
        for (Mask t = 0; t < table; ++t) {
            const double shortfall = f(s | t) + f(s & t) - f(s) - f(t);
            if (shortfall > verdict.worst_violation) {
                verdict.worst_violation = shortfall;
                verdict.witness = PredicateWitness{s, -1, -1, t};
            }
        }
    }
    verdict.holds = verdict.worst_violation <= tol * f.scale();
    if (verdict.holds) verdict.witness.reset();
    return verdict;
}

JointPmf random_joint_pmf(int n, int max_alphabet, std::uint64_t seed, bool product) {
    if (n < 1) throw CapError("need n >= 1");
    if (n > 10) throw CapError("random_joint_pmf refuses n > 10");
    std::mt19937_64 rng(seed);
    std::vector<int> sizes(static_cast<std::size_t>(n));
    std::size_t cells = 1;
    for (int& k : sizes) {
        k = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(std::max(1, max_alphabet - 1)));
        cells *= static_cast<std::size_t>(k);
    }

    std::vector<double> probs(cells);
    if (product) {
        std::vector<std::vector<double>> factors;
        for (int k : sizes) {
            std::vector<double> w(static_cast<std::size_t>(k));
            double total = 0.0;
            for (double& x : w) {
                x = 0.05 + uniform01(rng);
                total += x;
            }
            for (double& x : w) x /= total;
            factors.push_back(std::move(w));
        }
        std::vector<int> idx(static_cast<std::size_t>(n), 0);
        for (std::size_t flat = 0; flat < cells; ++flat) {
            double p = 1.0;
            for (int v = 0; v < n; ++v) {
                p *= factors[static_cast<std::size_t>(v)][static_cast<std::size_t>(idx[static_cast<std::size_t>(v)])];
            }
            probs[flat] = p;
            for (int v = n - 1; v >= 0; --v) {
                if (++idx[static_cast<std::size_t>(v)] < sizes[static_cast<std::size_t>(v)]) break;
                idx[static_cast<std::size_t>(v)] = 0;
            }
        }
    } else {
        double total = 0.0;
        for (double& p : probs) {
            p = 0.01 + uniform01(rng);
            total += p;
        }
        for (double& p : probs) p /= total;
    }

    // Renormalize exactly enough for the 1e-12 construction invariant.
    const double total = std::accumulate(probs.begin(), probs.end(), 0.0);
    for (double& p : probs) p /= total;
    return JointPmf(std::move(sizes), std::move(probs));
}

SetFunction random_rank_function(int n, std::uint64_t seed) {
    if (n > 10) throw CapError("random_rank_function refuses n > 10");
    return build_entropic_fn(random_joint_pmf(n, 3, seed));
}

std::vector<JointPmf> random_integer_marginals(int n, std::uint64_t seed, bool iid) {
    if (n < 1 || n > 12) throw CapError("random_integer_marginals refuses n outside [1, 12]");
    std::mt19937_64 rng(seed);

    const auto make_one = [&]() {
        const int k = 2 + static_cast<int>(rng() % 3);
        std::set<std::int64_t> support;
        while (static_cast<int>(support.size()) < k) {
            support.insert(static_cast<std::int64_t>(rng() % 9) - 2);
        }
        std::vector<std::int64_t> values(support.begin(), support.end());
        std::vector<double> probs(static_cast<std::size_t>(k));
        double total = 0.0;
        for (double& p : probs) {
            p = 0.05 + uniform01(rng);
            total += p;
        }
        for (double& p : probs) p /= total;
        return JointPmf({k}, std::move(probs),
                        std::vector<std::vector<std::int64_t>>{std::move(values)});
    };

    std::vector<JointPmf> out;
    if (iid) {
        const JointPmf one = make_one();
        for (int i = 0; i < n; ++i) out.push_back(one);
    } else {
        for (int i = 0; i < n; ++i) out.push_back(make_one());
    }
    return out;
}

SubsetFamily random_cover_family(const GroundSet& ground, int d, Mask target,
                                 std::uint64_t seed) {
    if (d < 1) throw CapError("cover multiplicity must be >= 1");
    std::mt19937_64 rng(seed);
    const int n = ground.size();
    std::vector<Mask> members;
    const int initial = std::max(3, n / 2);
    for (int i = 0; i < initial; ++i) {
        members.push_back(static_cast<Mask>(rng()) & ground.full());
    }
    // Patch the deficit: any under-covered element of the target gets a
    // fresh member containing it.
    for (int i = 0; i < n; ++i) {
        if (!has_bit(target, i)) continue;
        while (true) {
            int deg = 0;
            for (Mask m : members) deg += has_bit(m, i) ? 1 : 0;
            if (deg >= d) break;
            members.push_back((static_cast<Mask>(rng()) & ground.full()) | (Mask{1} << i));
        }
    }
    return SubsetFamily(ground, std::move(members));
}

CodeSet random_code_set(int n, int size, std::uint64_t seed) {
    if (n < 1 || n > 16) throw CapError("random_code_set refuses n outside [1, 16]");
    const std::uint64_t cube = std::uint64_t{1} << n;
    if (size < 1 || static_cast<std::uint64_t>(size) > cube) {
        throw CapError("code-set size out of range");
    }
    std::mt19937_64 rng(seed);
    std::vector<std::uint32_t> all(cube);
    std::iota(all.begin(), all.end(), 0u);
    std::shuffle(all.begin(), all.end(), rng);
    all.resize(static_cast<std::size_t>(size));
    return CodeSet(n, std::move(all));
}

std::pair<MdValue, MdValue> brute_md_ld(const CodeSet& A, int d) {
    const int n = A.dimension();
    if (n > 10 || A.size() > 512) throw CapError("brute_md_ld refuses n > 10 or |A| > 512");
    if (d < 1 || d > n) throw CapError("d out of range");

    const auto words = as_sign_vectors(A);
    std::uint64_t min_in = 0, min_out = 0;
    bool any_in = false, any_out = false;

    std::vector<int> tuple = first_combination(d);
    do {
        for (const auto& x : words) {
            // Count the words whose subvector (tuple positions dropped)
            // coincides with x's.
            std::uint64_t count = 0;
            for (const auto& y : words) {
                bool agrees = true;
                for (int pos = 0; pos < n && agrees; ++pos) {
                    const bool dropped =
                        std::find(tuple.begin(), tuple.end(), pos) != tuple.end();
                    if (!dropped && x[static_cast<std::size_t>(pos)] != y[static_cast<std::size_t>(pos)]) {
                        agrees = false;
                    }
                }
                if (agrees) ++count;
            }

            std::vector<int> flipped = x;
            for (int pos : tuple) flipped[static_cast<std::size_t>(pos)] *= -1;
            if (member(words, flipped)) {
                if (!any_in || count < min_in) min_in = count;
                any_in = true;
            } else {
                if (!any_out || count < min_out) min_out = count;
                any_out = true;
            }
        }
    } while (next_combination(tuple, n));

    const std::uint64_t two_d = std::uint64_t{1} << d;
    MdValue md, ld;
    if (any_in) {
        md = MdValue{min_in, false};
    } else {
        md = MdValue{std::min<std::uint64_t>(two_d, A.size()), true};
    }
    const std::uint64_t l_cap = std::min<std::uint64_t>(two_d - 1, A.size() - 1);
    if (any_out) {
        ld = MdValue{std::max<std::uint64_t>(std::min(min_out, l_cap), 1), false};
    } else {
        ld = MdValue{std::max<std::uint64_t>(l_cap, 1), true};
    }
    return {md, ld};
}

GraphStats brute_pairs(const CodeSet& A, int tau) {
    const int n = A.dimension();
    if (n > 10) throw CapError("brute_pairs refuses n > 10");
    if (tau < 1 || tau > n) throw CapError("tau out of range");

    const auto words = as_sign_vectors(A);
    GraphStats stats;
    stats.tau = tau;
    stats.edge_counts.assign(static_cast<std::size_t>(tau), 0);
    stats.boundary_counts.assign(static_cast<std::size_t>(tau), 0);

    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            const int dist = sign_distance(words[i], words[j]);
            if (dist >= 1 && dist <= tau) ++stats.edge_counts[static_cast<std::size_t>(dist - 1)];
        }
    }

    // Ordered pairs (x in A, y in the cube outside A) at each distance.
    const std::uint64_t cube = std::uint64_t{1} << n;
    for (std::uint64_t yw = 0; yw < cube; ++yw) {
        std::vector<int> y(static_cast<std::size_t>(n));
        for (int b = 0; b < n; ++b) y[static_cast<std::size_t>(b)] = ((yw >> b) & 1u) ? 1 : -1;
        if (member(words, y)) continue;
        for (const auto& x : words) {
            const int dist = sign_distance(x, y);
            if (dist >= 1 && dist <= tau) ++stats.boundary_counts[static_cast<std::size_t>(dist - 1)];
        }
    }
    return stats;
}

std::vector<InequalityCheck> equivalence_suite(const OracleConfig& config) {
    std::vector<InequalityCheck> out;
    const auto finish = [&out](std::string name, int agree, int total) {
        InequalityCheck c;
        c.name = std::move(name);
        c.lhs = agree;
        c.rhs = total;
        c.slack = static_cast<double>(agree - total);
        c.holds = agree == total;
        out.push_back(std::move(c));
    };

    int agree = 0;
    for (int i = 0; i < config.instance_count; ++i) {
        const std::uint64_t seed = config.seed + static_cast<std::uint64_t>(i);
        std::mt19937_64 rng(seed);
        const int n = 2 + static_cast<int>(rng() % static_cast<unsigned>(config.max_n_setfn - 1));
        std::vector<double> values(std::size_t{1} << n);
        for (double& v : values) v = -2.0 + 4.0 * uniform01(rng);
        const SetFunction f(GroundSet::numbered(n), std::move(values));
        if (is_submodular(f).holds == submodularity_by_definition(f).holds) {
            ++agree;
        } else {
            dump_failing_instance("submodularity_seed" + std::to_string(seed),
                                  format_set_function(f),
                                  "submodkit check-setfn --oracle <file>");
        }
    }
    finish("submodularity_agreement", agree, config.instance_count);

    agree = 0;
    for (int i = 0; i < config.instance_count; ++i) {
        const std::uint64_t seed = config.seed + 31 * static_cast<std::uint64_t>(i) + 7;
        std::mt19937_64 rng(seed);
        const int n =
            3 + static_cast<int>(rng() % static_cast<unsigned>(config.max_n_hypercube - 2));
        const int size =
            2 + static_cast<int>(rng() % static_cast<unsigned>(std::min(40, 1 << n) - 1));
        const CodeSet A = random_code_set(n, size, seed);
        const int d = 1 + static_cast<int>(rng() % static_cast<unsigned>(std::min(3, n)));
        const GraphStats fast = edge_counts(A, d);
        const GraphStats slow = brute_pairs(A, d);
        const auto [md_b, ld_b] = brute_md_ld(A, d);
        const bool ok = fast.edge_counts == slow.edge_counts &&
                        fast.boundary_counts == slow.boundary_counts &&
                        compute_md(A, d).value == md_b.value &&
                        compute_ld(A, d).value == ld_b.value;
        if (ok) {
            ++agree;
        } else {
            dump_failing_instance("hypercube_seed" + std::to_string(seed), format_code_set(A),
                                  "submodkit hypercube --tau " + std::to_string(d) +
                                      " --oracle <file>");
        }
    }
    finish("hypercube_agreement", agree, config.instance_count);

    agree = 0;
    for (int i = 0; i < config.instance_count; ++i) {
        const std::uint64_t seed = config.seed + 97 * static_cast<std::uint64_t>(i) + 13;
        std::mt19937_64 rng(seed);
        const int n = 2 + static_cast<int>(rng() % 4);
        const int k = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1 > 0 ? n - 1 : 1));
        std::vector<Point> pts;
        const int count = 4 + static_cast<int>(rng() % 60);
        for (int p = 0; p < count; ++p) {
            Point pt(static_cast<std::size_t>(n));
            for (auto& c : pt) c = static_cast<std::int64_t>(rng() % 5);
            pts.push_back(std::move(pt));
        }
        std::sort(pts.begin(), pts.end());
        pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
        if (projection_bound(pts, k).projection_sizes == brute_projection(pts, k)) {
            ++agree;
        } else {
            dump_failing_instance("projection_seed" + std::to_string(seed), format_points(pts),
                                  "submodkit projections --k " + std::to_string(k) +
                                      " --oracle <file>");
        }
    }
    finish("projection_agreement", agree, config.instance_count);
    return out;
}

std::string dump_failing_instance(const std::string& tag, const std::string& instance_text,
                                  const std::string& repro_command) {
    const char* dir = std::getenv("SUBMODKIT_DUMP_DIR");
    const std::string base = (dir != nullptr && *dir != '\0') ? std::string(dir) + "/" : "";
    const std::string path = base + "submodkit_failure_" + tag + ".txt";
    std::ofstream out(path);
    out << "# repro: " << repro_command << "\n" << instance_text;
    return path;
}

std::vector<std::uint64_t> brute_projection(const std::vector<Point>& points, int k) {
    if (points.empty()) throw CapError("no points");
    const int n = static_cast<int>(points.front().size());
    if (n > 8 || points.size() > 4096) throw CapError("brute_projection refuses n > 8 or > 4096 points");
    if (k < 1 || k >= n) throw CapError("k out of range");

    std::vector<std::uint64_t> sizes;
    std::vector<int> tuple = first_combination(k);
    do {
        std::set<std::vector<std::int64_t>> seen;
        for (const auto& p : points) {
            std::vector<std::int64_t> proj;
            proj.reserve(static_cast<std::size_t>(k));
            for (int pos : tuple) proj.push_back(p[static_cast<std::size_t>(pos)]);
            seen.insert(std::move(proj));
        }
        sizes.push_back(seen.size());
    } while (next_combination(tuple, n));
    return sizes;
}

}  // namespace submodkit::oracle

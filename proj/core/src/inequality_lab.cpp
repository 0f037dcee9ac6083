#include "submodkit/inequality_lab.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace submodkit {

namespace {

/// Sum of term(T) over all k-subsets, ascending bitmask order.
template <typename Fn>
double k_subset_sum(int n, int k, Fn&& term) {
    double total = 0.0;
    for (Mask t = first_k_subset(k); t != 0 || k == 0; t = next_k_subset(t, n)) {
        total += term(t);
        if (k == 0) break;
    }
    return total;
}

void evaluate_direction(SequenceReport& report, double tol) {
    const auto& v = report.values;
    report.worst_k = 0;
    report.worst_slack = 0.0;
    if (v.size() < 2) {
        report.holds = true;
        report.direction_measured = Direction::none;
        report.measured_flat = true;
        return;
    }

    bool all_dec = true, all_inc = true;
    // Slack of step k in the claimed direction; measured as decreasing
    // when no direction is claimed.
    const bool slack_as_increasing = report.direction_claimed == Direction::increasing;
    double worst = std::numeric_limits<double>::infinity();
    int worst_k = 1;
    for (std::size_t k = 0; k + 1 < v.size(); ++k) {
        const double scale = tol * rel_scale(v[k], v[k + 1]);
        if (v[k] < v[k + 1] - scale) all_dec = false;
        if (v[k] > v[k + 1] + scale) all_inc = false;
        const double slack = slack_as_increasing ? v[k + 1] - v[k] : v[k] - v[k + 1];
        if (slack < worst) {
            worst = slack;
            worst_k = static_cast<int>(k) + 1;
        }
    }
    report.worst_k = worst_k;
    report.worst_slack = worst;
    report.measured_flat = all_dec && all_inc;
    if (report.measured_flat) report.direction_measured = Direction::decreasing;
    else if (all_dec) report.direction_measured = Direction::decreasing;
    else if (all_inc) report.direction_measured = Direction::increasing;
    else report.direction_measured = Direction::none;

    switch (report.direction_claimed) {
        case Direction::decreasing: report.holds = all_dec; break;
        case Direction::increasing: report.holds = all_inc; break;
        case Direction::none: report.holds = true; break;
    }
}

}  // namespace

std::string to_string(Direction d) {
    switch (d) {
        case Direction::decreasing: return "decreasing";
        case Direction::increasing: return "increasing";
        case Direction::none: return "none";
    }
    return "none";
}

SequenceReport tk_sequence(const SetFunction& f, const ScalarTransform& g,
                           std::optional<Direction> claim, double tol) {
    if (std::fabs(f(0)) > tol) {
        throw PreconditionError("tk_sequence requires f(empty) = 0, got " +
                                std::to_string(f(0)));
    }
    const int n = f.n();

    Direction direction;
    if (claim) {
        direction = *claim;
    } else {
        const bool sub = is_submodular(f, tol).holds;
        const bool super = is_supermodular(f, tol).holds;
        const bool inc = g.monotone_dir() == Monotone::increasing;
        if (sub && inc && g.convex()) direction = Direction::decreasing;
        else if (sub && !inc && g.concave()) direction = Direction::increasing;
        else if (super && inc && g.concave()) direction = Direction::increasing;
        else if (super && !inc && g.convex()) direction = Direction::decreasing;
        else direction = Direction::none;
    }

    SequenceReport report;
    report.direction_claimed = direction;
    report.values.resize(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) {
        const double sum =
            k_subset_sum(n, k, [&](Mask t) { return g(f(t) / static_cast<double>(k)); });
        report.values[static_cast<std::size_t>(k - 1)] = sum / binom_double(n, k);
    }
    evaluate_direction(report, tol);
    return report;
}

std::vector<double> subset_average_sequence(const SetFunction& f) {
    const int n = f.n();
    std::vector<double> avg(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        avg[static_cast<std::size_t>(k)] =
            k_subset_sum(n, k, [&](Mask t) { return f(t); }) / binom_double(n, k);
    }
    return avg;
}

double c_alpha_coefficient(double alpha, int n, int k) {
    if (alpha == 1.0) return binom_double(n - 1, k);
    const double ratio = std::pow(static_cast<double>(k) / n, alpha);
    return (1.0 - ratio) * binom_double(n, k);
}

Corollary2Report corollary2_check(const SetFunction& f, double alpha, int k, double tol) {
    const int n = f.n();
    if (alpha < 1.0) throw DomainError("alpha must be >= 1");
    if (k < 1 || k > n - 1) throw DomainError("k must be in [1, n-1]");
    if (!is_submodular(f, tol).holds) {
        throw PreconditionError("corollary2_check requires a submodular f");
    }
    if (std::fabs(f(0)) > tol) {
        throw PreconditionError("corollary2_check requires f(empty) = 0");
    }
    if (alpha > 1.0) {
        for (double v : f.values()) {
            if (v < -tol * f.scale()) {
                throw PreconditionError(
                    "corollary2_check with alpha > 1 requires nonnegative f");
            }
        }
    }

    const auto power = [&](double x) {
        if (alpha == 1.0) return x;
        return x >= 0.0 ? std::pow(x, alpha) : 0.0;
    };
    const double f_full_a = power(f(f.ground().full()));

    Corollary2Report report;
    report.c_alpha = c_alpha_coefficient(alpha, n, k);
    report.lhs = k_subset_sum(n, k, [&](Mask t) { return f_full_a - power(f(t)); });
    report.rhs = report.c_alpha * f_full_a;
    report.holds = holds_leq(report.lhs, report.rhs, tol);

    if (is_rank_function(f, tol).holds) {
        RankPowerBound rb;
        rb.sum = k_subset_sum(n, k, [&](Mask t) { return power(f(t)); });
        rb.lower = std::pow(static_cast<double>(k) / n, alpha - 1.0) *
                   binom_double(n - 1, k - 1) * f_full_a;
        rb.upper = binom_double(n, k) * f_full_a;
        rb.holds = holds_geq(rb.sum, rb.lower, tol) && holds_leq(rb.sum, rb.upper, tol);
        report.rank_bound = rb;
    }
    return report;
}

HanReport han_check(const JointPmf& p) {
    const int n = p.var_count();
    const Mask full = full_mask(n);
    const double h_full = entropy(p, full);
    HanReport report;
    report.rhs = h_full;
    for (int i = 0; i < n; ++i) {
        report.lhs += h_full - entropy(p, full & ~(Mask{1} << i));
    }
    report.slack = report.rhs - report.lhs;
    report.holds = holds_leq(report.lhs, report.rhs, kDefaultTol);
    return report;
}

std::string to_string(NamedSequence which) {
    switch (which) {
        case NamedSequence::h: return "h";
        case NamedSequence::l: return "l";
        case NamedSequence::m: return "m";
        case NamedSequence::r_seq: return "r";
        case NamedSequence::s: return "s";
        case NamedSequence::u: return "u";
        case NamedSequence::v: return "v";
        case NamedSequence::w: return "w";
    }
    return "?";
}

SequenceReport corollary3_sequences(const JointPmf& p, double r, NamedSequence which,
                                    double tol) {
    const int n = p.var_count();
    const bool needs_rate = which == NamedSequence::s || which == NamedSequence::u ||
                            which == NamedSequence::v || which == NamedSequence::w;
    if (needs_rate && !(r > 0.0)) throw DomainError("rate r must be positive");

    const bool needs_sums = which == NamedSequence::m || which == NamedSequence::w;
    std::vector<JointPmf> marginals;
    if (needs_sums) {
        if (!p.has_integer_values()) {
            throw PreconditionError("sequence " + to_string(which) +
                                    " requires integer_values on the PMF");
        }
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const double mi = mutual_information(p, Mask{1} << i, Mask{1} << j);
                if (mi > 1e-6) {
                    throw PreconditionError("sequence " + to_string(which) +
                                            " requires independent variables; I(X" +
                                            std::to_string(i + 1) + ";X" +
                                            std::to_string(j + 1) + ") = " +
                                            std::to_string(mi));
                }
            }
        }
        for (int i = 0; i < n; ++i) marginals.push_back(marginalize(p, Mask{1} << i));
    }

    switch (which) {
        case NamedSequence::h:
            return tk_sequence(build_entropic_fn(p), ScalarTransform::identity(),
                               Direction::decreasing, tol);
        case NamedSequence::l:
            return tk_sequence(build_mi_fn(p), ScalarTransform::identity(),
                               Direction::decreasing, tol);
        case NamedSequence::r_seq:
            return tk_sequence(build_cond_entropy_fn(p), ScalarTransform::identity(),
                               Direction::increasing, tol);
        case NamedSequence::s:
            return tk_sequence(build_entropic_fn(p), ScalarTransform::exp2_scaled(2.0 * r),
                               Direction::decreasing, tol);
        case NamedSequence::u:
            return tk_sequence(build_cond_entropy_fn(p), ScalarTransform::exp2_scaled(-r),
                               Direction::decreasing, tol);
        case NamedSequence::v:
            return tk_sequence(build_mi_fn(p), ScalarTransform::exp2_scaled(r),
                               Direction::decreasing, tol);
        case NamedSequence::m: {
            // m_k renormalizes by C(n-1,k-1) = (k/n) C(n,k): n times the plain
            // averaged sequence.
            SequenceReport report =
                tk_sequence(build_sum_entropy_fn(marginals), ScalarTransform::identity(),
                            Direction::decreasing, tol);
            for (double& v : report.values) v *= static_cast<double>(n);
            evaluate_direction(report, tol);
            return report;
        }
        case NamedSequence::w:
            return tk_sequence(build_sum_entropy_fn(marginals),
                               ScalarTransform::exp2_scaled(2.0 * r),
                               Direction::decreasing, tol);
    }
    throw DomainError("unknown sequence");
}

SandwichReport corollary1_sandwich(const SetFunction& f, const ScalarTransform& g,
                                   int k, double tol) {
    const int n = f.n();
    if (k < 1 || k > n) throw DomainError("k must be in [1, n]");
    if (!is_rank_function(f, tol).holds) {
        throw PreconditionError("corollary1_sandwich requires a rank function");
    }
    if (!(g.convex() && g.monotone_dir() == Monotone::increasing)) {
        throw PreconditionError("corollary1_sandwich requires convex increasing g");
    }

    SandwichReport report;
    const double f_full = f(f.ground().full());
    report.binom = binom_double(n, k);
    report.lower = report.binom * g(f_full / n);
    report.mid = k_subset_sum(n, k, [&](Mask t) { return g(f(t) / k); });
    report.upper = report.binom * g(f_full / k);
    const double ent = std::exp2(n * binary_entropy(static_cast<double>(k) / n));
    report.binom_lo = ent / (n + 1);
    report.binom_hi = ent;
    report.chain_holds = holds_leq(report.lower, report.mid, tol) &&
                         holds_leq(report.mid, report.upper, tol);
    report.binom_holds = holds_leq(report.binom_lo, report.binom, tol) &&
                         holds_leq(report.binom, report.binom_hi, tol);
    return report;
}

ProjectionReport projection_bound(const std::vector<Point>& points, int k, double tol) {
    if (points.empty()) throw DomainError("projection bound needs at least one point");
    const int n = static_cast<int>(points.front().size());
    if (n < 2) throw DomainError("points must have dimension >= 2");
    for (const auto& p : points) {
        if (static_cast<int>(p.size()) != n) {
            throw DomainError("points must all have the same dimension");
        }
    }
    if (k < 1 || k > n - 1) throw DomainError("k must be in [1, n-1]");

    std::vector<Point> dedup = points;
    std::sort(dedup.begin(), dedup.end());
    dedup.erase(std::unique(dedup.begin(), dedup.end()), dedup.end());

    ProjectionReport report;
    report.cardinality = dedup.size();

    double log_prod = 0.0;
    double rate_sum = 0.0;
    for (Mask coords = first_k_subset(k); coords != 0; coords = next_k_subset(coords, n)) {
        std::set<Point> projected;
        Point proj(static_cast<std::size_t>(k));
        for (const auto& p : dedup) {
            int j = 0;
            for (int i = 0; i < n; ++i) {
                if (has_bit(coords, i)) proj[static_cast<std::size_t>(j++)] = p[static_cast<std::size_t>(i)];
            }
            projected.insert(proj);
        }
        const auto m_j = static_cast<std::uint64_t>(projected.size());
        report.projection_sizes.push_back(m_j);
        log_prod += std::log2(static_cast<double>(m_j));
        rate_sum += std::log2(static_cast<double>(m_j)) / k;
    }

    report.bound = std::exp2(log_prod / binom_double(n - 1, k - 1));
    report.holds = static_cast<double>(report.cardinality) <= report.bound * (1.0 + tol);
    report.rate = std::log2(static_cast<double>(report.cardinality)) / n;
    report.rate_mean = rate_sum / binom_double(n, k);
    return report;
}

std::vector<InequalityCheck> sum_epi_checks(const std::vector<JointPmf>& marginals, int k,
                                            const std::optional<SubsetFamily>& family,
                                            int d, Mask target, double tol) {
    const int n = static_cast<int>(marginals.size());
    if (n < 2) throw DomainError("sum-entropy inequalities need n >= 2 variables");
    if (k < 1 || k > n - 1) throw DomainError("k must be in [1, n-1]");

    const SetFunction f = build_sum_entropy_fn(marginals);
    const Mask full = f.ground().full();
    const double h_full = f(full);
    const double binom_inner = binom_double(n - 1, k - 1);

    std::vector<InequalityCheck> checks;
    const auto push = [&](std::string name, double lhs, double rhs, bool geq = false) {
        InequalityCheck c;
        c.name = std::move(name);
        c.lhs = lhs;
        c.rhs = rhs;
        c.slack = rhs - lhs;
        c.holds = geq ? holds_geq(lhs, rhs, tol) : holds_leq(lhs, rhs, tol);
        checks.push_back(std::move(c));
    };

    // H(sum all) <= (1/C(n-1,k-1)) sum_{|T|=k} H(sum_T)
    const double sum_h_k = k_subset_sum(n, k, [&](Mask t) { return f(t); });
    push("sum_entropy_subset_bound", h_full, sum_h_k / binom_inner);

    // Entropy-power forms: N(Y) = 2^{2 H(Y)} for scalar sums.
    const double n_full = std::exp2(2.0 * h_full);
    const double geo = std::exp2(2.0 * sum_h_k / binom_inner);
    push("entropy_power_geometric", n_full, geo);

    const double ratio = static_cast<double>(n) / k;
    const double arith =
        k_subset_sum(n, k, [&](Mask t) { return std::exp2(2.0 * f(t) * ratio); }) /
        binom_double(n, k);
    push("entropy_power_arithmetic", n_full, arith);

    // The arithmetic form is the AM-GM loosening of the geometric form.
    push("entropy_power_ordering", arith, geo, /*geq=*/true);

    // Leave-one-out pair (the k = n-1 specialization).
    const int k1 = n - 1;
    const double sum_h_loo = k_subset_sum(n, k1, [&](Mask t) { return f(t); });
    const double loo_geo = std::exp2(2.0 * sum_h_loo / binom_double(n - 1, k1 - 1));
    push("leave_one_out_geometric", n_full, loo_geo);
    const double loo_ratio = static_cast<double>(n) / k1;
    const double loo_arith =
        k_subset_sum(n, k1, [&](Mask t) { return std::exp2(2.0 * f(t) * loo_ratio); }) /
        binom_double(n, k1);
    push("leave_one_out_arithmetic", n_full, loo_arith);
    push("leave_one_out_chain", loo_arith, loo_geo, /*geq=*/true);

    if (family) {
        const ShearerReport sr = shearer_check(f, *family, d, target, tol);
        InequalityCheck c;
        c.name = "shearer_sum_entropy";
        c.lhs = sr.lhs;
        c.rhs = sr.rhs;
        c.slack = sr.lhs - sr.rhs;
        c.holds = sr.holds;
        checks.push_back(std::move(c));
    }
    return checks;
}

}  // namespace submodkit

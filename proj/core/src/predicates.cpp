#include "submodkit/predicates.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace submodkit {

namespace {

/// Scan driver: feeds constraint shortfalls to the verdict, keeping the
/// first maximal violation as witness.
struct VerdictAccumulator {
    double threshold;
    bool any = false;
    PredicateVerdict verdict;

    explicit VerdictAccumulator(double threshold_) : threshold(threshold_) {
        verdict.worst_violation = -std::numeric_limits<double>::infinity();
    }

    void feed(double shortfall, PredicateWitness w) {
        any = true;
        if (shortfall > verdict.worst_violation) {
            verdict.worst_violation = shortfall;
            verdict.witness = w;
        }
    }

    PredicateVerdict finish() {
        if (!any) verdict.worst_violation = 0.0;
        verdict.holds = verdict.worst_violation <= threshold;
        if (verdict.holds) verdict.witness.reset();
        return verdict;
    }
};

PredicateVerdict submodular_scan(const SetFunction& f, double sign, double tol) {
    const int n = f.n();
    const Mask table = static_cast<Mask>(f.ground().table_size());
    VerdictAccumulator acc(tol * f.scale());
    for (Mask s = 0; s < table; ++s) {
        for (int i = 0; i < n; ++i) {
            if (has_bit(s, i)) continue;
            const Mask si = s | (Mask{1} << i);
            for (int j = i + 1; j < n; ++j) {
                if (has_bit(s, j)) continue;
                const Mask sj = s | (Mask{1} << j);
                const double shortfall =
                    sign * (f(si | sj) + f(s) - f(si) - f(sj));
                acc.feed(shortfall, PredicateWitness{s, i, j, std::nullopt});
            }
        }
    }
    return acc.finish();
}

}  // namespace

std::string render_witness(const GroundSet& ground, const PredicateWitness& w) {
    std::string out = "S=" + ground.render(w.subset);
    if (w.subset_b) out += ", T=" + ground.render(*w.subset_b);
    if (w.i >= 0) out += ", i=" + ground.label(w.i);
    if (w.j >= 0) out += ", j=" + ground.label(w.j);
    return out;
}

PredicateVerdict is_submodular(const SetFunction& f, double tol) {
    return submodular_scan(f, +1.0, tol);
}

PredicateVerdict is_supermodular(const SetFunction& f, double tol) {
    return submodular_scan(f, -1.0, tol);
}

PredicateVerdict is_monotone_increasing(const SetFunction& f, double tol) {
    const int n = f.n();
    const Mask table = static_cast<Mask>(f.ground().table_size());
    VerdictAccumulator acc(tol * f.scale());
    for (Mask s = 0; s < table; ++s) {
        for (int i = 0; i < n; ++i) {
            if (has_bit(s, i)) continue;
            acc.feed(f(s) - f(s | (Mask{1} << i)), PredicateWitness{s, i, -1, std::nullopt});
        }
    }
    return acc.finish();
}

PredicateVerdict is_subadditive(const SetFunction& f, double tol) {
    const Mask table = static_cast<Mask>(f.ground().table_size());
    VerdictAccumulator acc(tol * f.scale());
    for (Mask s = 0; s < table; ++s) {
        for (Mask t = s; t < table; ++t) {
            acc.feed(f(s | t) - f(s) - f(t), PredicateWitness{s, -1, -1, t});
        }
    }
    return acc.finish();
}

PredicateVerdict is_rank_function(const SetFunction& f, double tol) {
    const PredicateVerdict sub = is_submodular(f, tol);
    const PredicateVerdict mono = is_monotone_increasing(f, tol);
    const double empty_violation = std::fabs(f(0));
    PredicateVerdict out;
    out.worst_violation =
        std::max({sub.worst_violation, mono.worst_violation, empty_violation});
    out.holds = sub.holds && mono.holds && empty_violation <= tol;
    if (!out.holds) {
        if (!sub.holds) out.witness = sub.witness;
        else if (!mono.holds) out.witness = mono.witness;
        else out.witness = PredicateWitness{0, -1, -1, std::nullopt};
    }
    return out;
}

ShearerReport shearer_check(const SetFunction& f, const SubsetFamily& family,
                            int d, Mask target, double tol) {
    if (d < 1) throw DomainError("shearer_check needs d >= 1");
    if (target >= f.ground().table_size()) throw DomainError("target bitmask out of range");
    if (family.ground().size() != f.n()) {
        throw DomainError("family and set function live on different ground sets");
    }
    for (int i = 0; i < f.n(); ++i) {
        if (!has_bit(target, i)) continue;
        if (family.degree(i) < d) {
            throw PreconditionError("cover condition violated: element " +
                                    f.ground().label(i) + " is in " +
                                    std::to_string(family.degree(i)) +
                                    " members, needs " + std::to_string(d));
        }
    }

    ShearerReport report;
    for (Mask m : family.members()) report.lhs += f(m);
    report.rhs = static_cast<double>(d) * f(target);
    report.holds = holds_geq(report.lhs, report.rhs, tol);

    if (target == f.ground().full()) {
        const bool nonneg =
            std::all_of(f.values().begin(), f.values().end(),
                        [&](double v) { return v >= -tol * f.scale(); });
        if (nonneg && is_submodular(f, tol).holds) report.part = 'a';
    }
    if (report.part == 'n' && is_rank_function(f, tol).holds) report.part = 'b';
    return report;
}

bool is_chain(const SubsetFamily& family) {
    const auto& m = family.members();
    for (std::size_t i = 0; i + 1 < m.size(); ++i) {
        const Mask a = m[i], b = m[i + 1];
        if ((a & b) != a) return false;  // members must ascend by inclusion
    }
    return true;
}

UncrossResult uncross_to_chain(const SubsetFamily& family) {
    std::vector<Mask> work = family.members();
    std::vector<std::pair<int, int>> steps;
    const int m = static_cast<int>(work.size());
    const std::size_t step_cap =
        family.ground().size() < 16
            ? (std::size_t{1} << (2 * family.ground().size()))
            : std::numeric_limits<std::size_t>::max();

    // work[0..i-1] is a chain in ascending inclusion order; sink work[i]
    // down against the current top, uncrossing non-nested pairs.
    for (int i = 1; i < m; ++i) {
        int hi = i;
        while (hi > 0) {
            const Mask top = work[hi - 1];
            const Mask x = work[hi];
            if ((top & x) == top) break;  // top ⊆ x: chain restored
            if ((top & x) == x) {
                std::swap(work[hi - 1], work[hi]);  // x ⊆ top: sink below
                --hi;
                continue;
            }
            steps.emplace_back(hi - 1, hi);
            if (steps.size() > step_cap) {
                throw Error("uncrossing exceeded the 4^n step cap; this falsifies "
                            "the termination argument");
            }
            work[hi - 1] = top & x;
            work[hi] = top | x;
            --hi;
        }
    }

    return UncrossResult{SubsetFamily(family.ground(), std::move(work)), std::move(steps)};
}

}  // namespace submodkit

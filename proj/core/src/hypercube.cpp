#include "submodkit/hypercube.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <unordered_map>

#include "submodkit/joint_pmf.hpp"
#include "submodkit/set_function.hpp"

namespace submodkit {

namespace {

std::uint64_t min_u64(std::uint64_t a, std::uint64_t b) { return a < b ? a : b; }

/// 2^d saturating to |A|-sized comparisons without overflow for d <= 63.
std::uint64_t pow2_u64(int d) { return std::uint64_t{1} << d; }

}  // namespace

CodeSet::CodeSet(int n, std::vector<std::uint32_t> words)
    : n_(n), words_(std::move(words)) {
    if (n < 1 || n > max_codeset_dimension()) {
        throw DomainError("code-set dimension " + std::to_string(n) + " outside [1, " +
                          std::to_string(max_codeset_dimension()) + "]");
    }
    if (words_.empty()) throw DomainError("code set must be nonempty");
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint32_t w : words_) {
        if (w >= limit) throw DomainError("code word exceeds dimension");
    }
    std::sort(words_.begin(), words_.end());
    words_.erase(std::unique(words_.begin(), words_.end()), words_.end());
}

bool CodeSet::contains(std::uint32_t w) const {
    return std::binary_search(words_.begin(), words_.end(), w);
}

GraphStats edge_counts(const CodeSet& A, int tau) {
    const int n = A.dimension();
    if (tau < 1 || tau > n) throw DomainError("tau must be in [1, n]");

    GraphStats stats;
    stats.tau = tau;
    stats.edge_counts.assign(static_cast<std::size_t>(tau), 0);
    stats.boundary_counts.assign(static_cast<std::size_t>(tau), 0);

    // Edges: unordered pairs within A, bucketed by Hamming distance.
    const auto& words = A.words();
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            const int d = std::popcount(words[i] ^ words[j]);
            if (d <= tau) ++stats.edge_counts[static_cast<std::size_t>(d - 1)];
        }
    }

    // Boundary: distance-d neighbors outside A, counted independently so
    // the counting identity checks two routes against each other.
    for (int d = 1; d <= tau; ++d) {
        std::uint64_t misses = 0;
        for (std::uint32_t x : words) {
            for (Mask m = first_k_subset(d); m != 0; m = next_k_subset(m, n)) {
                if (!A.contains(x ^ m)) ++misses;
            }
        }
        stats.boundary_counts[static_cast<std::size_t>(d - 1)] = misses;
    }

    for (int d = 1; d <= tau; ++d) {
        const std::uint64_t total = binom_u64(n, d) * A.size();
        const std::uint64_t recombined =
            2 * stats.edge_counts[static_cast<std::size_t>(d - 1)] +
            stats.boundary_counts[static_cast<std::size_t>(d - 1)];
        if (total != recombined) {
            throw Error("edge/boundary counting identity failed at d=" + std::to_string(d));
        }
    }
    return stats;
}

namespace {

struct MdScan {
    std::uint64_t min_in = 0;   // min class size over configs with full flip in A
    std::uint64_t min_out = 0;  // ... with full flip outside A
    bool any_in = false;
    bool any_out = false;
};

MdScan scan_classes(const CodeSet& A, int d) {
    const int n = A.dimension();
    MdScan scan;
    // For each position tuple (as a weight-d mask), bucket words by their
    // punctured subvector and read off class sizes.
    for (Mask m = first_k_subset(d); m != 0; m = next_k_subset(m, n)) {
        std::unordered_map<std::uint32_t, std::uint64_t> classes;
        classes.reserve(A.size() * 2);
        for (std::uint32_t x : A.words()) ++classes[x & ~m];
        for (std::uint32_t x : A.words()) {
            const std::uint64_t c = classes[x & ~m];
            if (A.contains(x ^ m)) {
                if (!scan.any_in || c < scan.min_in) scan.min_in = c;
                scan.any_in = true;
            } else {
                if (!scan.any_out || c < scan.min_out) scan.min_out = c;
                scan.any_out = true;
            }
        }
    }
    return scan;
}

}  // namespace

MdValue compute_md(const CodeSet& A, int d) {
    const int n = A.dimension();
    if (d < 1 || d > n) throw DomainError("d must be in [1, n]");
    const MdScan scan = scan_classes(A, d);
    const std::uint64_t cap = min_u64(pow2_u64(d), A.size());
    if (!scan.any_in) return MdValue{cap, true};
    return MdValue{scan.min_in, false};
}

MdValue compute_ld(const CodeSet& A, int d) {
    const int n = A.dimension();
    if (d < 1 || d > n) throw DomainError("d must be in [1, n]");
    const MdScan scan = scan_classes(A, d);
    // The class can cover all of A when one d-subcube does (only its full
    // flip is missing), so the documented cap |A|-1 may undercut the
    // definitional minimum; clamping keeps every downstream bound valid.
    const std::uint64_t cap = min_u64(pow2_u64(d) - 1, A.size() - 1);
    if (!scan.any_out) return MdValue{std::max<std::uint64_t>(cap, 1), true};
    return MdValue{std::max<std::uint64_t>(min_u64(scan.min_out, cap), 1), false};
}

BoundReport bound_report(const CodeSet& A, int d,
                         std::optional<std::pair<std::uint64_t, std::uint64_t>> overrides,
                         double tol) {
    const int n = A.dimension();
    if (d < 1 || d > n) throw DomainError("d must be in [1, n]");
    const std::uint64_t size = A.size();
    const double log_size = std::log2(static_cast<double>(size));

    const MdValue md = compute_md(A, d);
    const MdValue ld = compute_ld(A, d);

    BoundReport report;
    report.d = d;
    report.m_d = md.value;
    report.l_d = ld.value;
    report.m_vacuous = md.vacuous;
    report.l_vacuous = ld.vacuous;

    if (overrides) {
        const auto [m_o, l_o] = *overrides;
        if (m_o < 2 || m_o > min_u64(pow2_u64(d), size)) {
            throw PreconditionError("m_d override " + std::to_string(m_o) +
                                    " outside its admissible range");
        }
        if (l_o < 1 || l_o > min_u64(pow2_u64(d) - 1, size > 0 ? size - 1 : 0)) {
            throw PreconditionError("l_d override " + std::to_string(l_o) +
                                    " outside its admissible range");
        }
        // Any value at most the definitional minimum satisfies the
        // defining inequality; vacuous scans admit the whole range.
        if (!md.vacuous && m_o > md.value) {
            throw PreconditionError("m_d override exceeds the definitional minimum " +
                                    std::to_string(md.value));
        }
        if (!ld.vacuous && l_o > ld.value) {
            throw PreconditionError("l_d override exceeds the definitional minimum " +
                                    std::to_string(ld.value));
        }
        report.m_d = m_o;
        report.l_d = l_o;
        report.m_vacuous = report.l_vacuous = false;
    }

    report.exact_count = edge_counts(A, d).edge_counts[static_cast<std::size_t>(d - 1)];
    report.default_bound = 0.5 * binom_double(n - 1, d - 1) * static_cast<double>(size) * log_size;
    report.trivial = 0.5 * binom_double(n, d) * static_cast<double>(size);

    const double log_m = std::log2(static_cast<double>(report.m_d));
    report.useful = d * log_size <= n * log_m + tol * std::max(1.0, n * log_m);

    // Any l at most the definitional minimum is a valid constant. The
    // refined formula is monotone in l with direction set by the sign of
    // log|A| - (n/d) log m, so the tighter plug-in is l_d when the bound
    // is useful and 1 otherwise. Overrides are honored verbatim.
    if (overrides) report.l_used = report.l_d;
    else report.l_used = report.useful ? report.l_d : 1;

    if (report.m_d > report.l_d && size > 1) {
        const double log_l = std::log2(static_cast<double>(report.l_used));
        report.refined = binom_double(n - 1, d - 1) * static_cast<double>(size) *
                         (log_size - static_cast<double>(n) / d * log_l) /
                         (2.0 * (log_m - log_l));
    }

    const double exact = static_cast<double>(report.exact_count);
    report.holds = holds_leq(exact, report.default_bound, tol) &&
                   holds_leq(exact, report.trivial, tol) &&
                   (!report.refined || holds_leq(exact, *report.refined, tol));
    return report;
}

TotalEdgeBound total_edge_bound(const CodeSet& A, int tau, double tol) {
    const int n = A.dimension();
    if (tau < 1 || tau > n) throw DomainError("tau must be in [1, n]");
    const double size = static_cast<double>(A.size());
    const double log_size = std::log2(size);

    TotalEdgeBound out;
    const GraphStats stats = edge_counts(A, tau);
    for (std::uint64_t e : stats.edge_counts) out.exact_total += e;

    double binom_sum = 0.0;
    for (int d = 1; d <= tau; ++d) binom_sum += binom_double(n - 1, d - 1);
    out.sum_form = 0.5 * binom_sum * size * log_size;

    if (2 * tau <= n + 1) {
        const double theta = n > 1 ? static_cast<double>(tau - 1) / (n - 1) : 0.0;
        out.entropy_form = 0.5 * std::exp2((n - 1) * binary_entropy(theta)) * size * log_size;
    }

    out.holds = holds_leq(static_cast<double>(out.exact_total), out.sum_form, tol) &&
                (!out.entropy_form || holds_leq(out.sum_form, *out.entropy_form, tol));
    return out;
}

double influence(const CodeSet& A, int d) {
    const int n = A.dimension();
    if (d < 1 || d > n) throw DomainError("d must be in [1, n]");
    const std::uint64_t boundary =
        edge_counts(A, d).boundary_counts[static_cast<std::size_t>(d - 1)];
    return static_cast<double>(boundary) /
           (std::exp2(static_cast<double>(n - 1)) * binom_double(n, d));
}

InfluenceBounds influence_bounds(const CodeSet& A, int d,
                                 std::optional<std::pair<std::uint64_t, std::uint64_t>>
                                     overrides,
                                 double tol) {
    const int n = A.dimension();
    if (d < 1 || d > n) throw DomainError("d must be in [1, n]");

    InfluenceBounds out;
    out.exact = influence(A, d);

    const double prob = static_cast<double>(A.size()) / std::exp2(static_cast<double>(n));
    const double log_inv_p = -std::log2(prob);
    out.default_lb =
        2.0 * prob * (static_cast<double>(d) / n * log_inv_p + 1.0 - static_cast<double>(d));

    const BoundReport bounds = bound_report(A, d, overrides, tol);
    if (bounds.m_d > bounds.l_d) {
        const double log_m = std::log2(static_cast<double>(bounds.m_d));
        const double log_l = std::log2(static_cast<double>(bounds.l_used));
        out.refined_lb = 2.0 * prob *
                         (static_cast<double>(d) / n * log_inv_p - (d - log_m)) /
                         (log_m - log_l);
    }

    out.holds = holds_geq(out.exact, out.default_lb, tol) &&
                (!out.refined_lb || holds_geq(out.exact, *out.refined_lb, tol));
    return out;
}

CodeSet subcube_family(int n, int d_max, std::uint64_t seed) {
    if (n < 1 || n > max_codeset_dimension()) throw DomainError("dimension out of range");
    if (d_max < 0 || d_max > n) throw DomainError("d_max must be in [0, n]");

    std::mt19937_64 rng(seed);
    std::set<std::uint32_t> words;
    const std::uint32_t full = static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1);
    const int cubes = d_max == 0 ? 1 : 1 + static_cast<int>(rng() % 3);
    for (int c = 0; c < cubes; ++c) {
        std::vector<int> positions(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) positions[static_cast<std::size_t>(i)] = i;
        std::shuffle(positions.begin(), positions.end(), rng);
        Mask span = 0;
        for (int i = 0; i < d_max; ++i) span |= Mask{1} << positions[static_cast<std::size_t>(i)];
        const std::uint32_t base = static_cast<std::uint32_t>(rng()) & full & ~span;
        // All 2^{d_max} completions over the spanned positions.
        Mask sub = span;
        while (true) {
            words.insert(base | sub);
            if (sub == 0) break;
            sub = (sub - 1) & span;
        }
    }

    // Close under subcube completion: whenever two members are within
    // distance d_max, the subcube spanned by their differing positions
    // must be entirely present.
    bool changed = true;
    while (changed) {
        changed = false;
        const std::vector<std::uint32_t> snapshot(words.begin(), words.end());
        for (std::size_t i = 0; i < snapshot.size(); ++i) {
            for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
                const Mask span = snapshot[i] ^ snapshot[j];
                if (std::popcount(span) > d_max) continue;
                const std::uint32_t base = snapshot[i] & ~span;
                Mask sub = span;
                while (true) {
                    changed |= words.insert(base | sub).second;
                    if (sub == 0) break;
                    sub = (sub - 1) & span;
                }
            }
        }
    }

    return CodeSet(n, {words.begin(), words.end()});
}

bool is_subcube_closed(const CodeSet& A, int d_max) {
    const auto& words = A.words();
    for (std::size_t i = 0; i < words.size(); ++i) {
        for (std::size_t j = i + 1; j < words.size(); ++j) {
            const Mask span = words[i] ^ words[j];
            if (std::popcount(span) > d_max) continue;
            const std::uint32_t base = words[i] & ~span;
            Mask sub = span;
            while (true) {
                if (!A.contains(base | sub)) return false;
                if (sub == 0) break;
                sub = (sub - 1) & span;
            }
        }
    }
    return true;
}

D1Identity d1_entropy_identity(const CodeSet& A, double tol) {
    const int n = A.dimension();
    if (n > 24) throw DomainError("d1_entropy_identity needs n <= 24 (dense PMF table)");

    // X uniform on A as a joint PMF of n binary variables; the left side
    // runs through the entropy machinery on purpose.
    std::vector<double> probs(std::size_t{1} << n, 0.0);
    const double p = 1.0 / static_cast<double>(A.size());
    for (std::uint32_t w : A.words()) {
        std::size_t flat = 0;
        for (int v = 0; v < n; ++v) {
            flat = flat * 2 + ((w >> v) & 1u);
        }
        probs[flat] = p;
    }
    const JointPmf pmf(std::vector<int>(static_cast<std::size_t>(n), 2), std::move(probs));

    D1Identity out;
    const Mask full = full_mask(n);
    const double h_full = entropy(pmf, full);
    for (int k = 0; k < n; ++k) {
        out.lhs += h_full - entropy(pmf, full & ~(Mask{1} << k));
    }
    out.rhs = 2.0 * static_cast<double>(edge_counts(A, 1).edge_counts[0]) /
              static_cast<double>(A.size());
    out.holds = near(out.lhs, out.rhs, tol);
    return out;
}

}  // namespace submodkit

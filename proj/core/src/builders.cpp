#include "submodkit/builders.hpp"

#include <cmath>
#include <map>

namespace submodkit {

namespace {

constexpr std::size_t kMaxSumSupport = 1000000;

GroundSet numbered_ground(int n) { return GroundSet::numbered(n); }

}  // namespace

SetFunction build_entropic_fn(const JointPmf& p) {
    const int n = p.var_count();
    std::vector<double> values(std::size_t{1} << n);
    for (Mask t = 0; t < values.size(); ++t) values[t] = entropy(p, t);
    return SetFunction(numbered_ground(n), std::move(values));
}

SetFunction build_cond_entropy_fn(const JointPmf& p) {
    const int n = p.var_count();
    const Mask full = full_mask(n);
    const double h_full = entropy(p, full);
    std::vector<double> values(std::size_t{1} << n);
    for (Mask t = 0; t < values.size(); ++t) {
        // H(X_T | X_{T^c}) = H(X_full) - H(X_{T^c})
        values[t] = h_full - entropy(p, full & ~t);
    }
    values[0] = 0.0;
    return SetFunction(numbered_ground(n), std::move(values));
}

SetFunction build_mi_fn(const JointPmf& p) {
    const int n = p.var_count();
    const Mask full = full_mask(n);
    const double h_full = entropy(p, full);
    std::vector<double> values(std::size_t{1} << n);
    for (Mask t = 0; t < values.size(); ++t) {
        const double mi = entropy(p, t) + entropy(p, full & ~t) - h_full;
        values[t] = (mi < 0.0 && mi > -kDefaultTol) ? 0.0 : mi;
    }
    values[0] = 0.0;
    return SetFunction(numbered_ground(n), std::move(values));
}

CondMiFn build_cond_mi_fn(const JointPmf& p, Mask u, Mask v, double ci_tol) {
    if ((u & v) != 0) throw DomainError("u and v must be disjoint");
    if (v == 0) throw DomainError("v must be nonempty");
    const int n = p.var_count();
    if ((u | v) >= (Mask{1} << n)) throw DomainError("u/v masks out of range");

    CondMiFn out{SetFunction(GroundSet::numbered(1), {0.0, 0.0}), false, 0.0};
    // Conditional-independence hypothesis: I(X_i; X_j | X_u) ~ 0 for all
    // i != j in v. A failure is reported, not fatal.
    for (int i = 0; i < n; ++i) {
        if (!has_bit(v, i)) continue;
        for (int j = i + 1; j < n; ++j) {
            if (!has_bit(v, j)) continue;
            const double cmi =
                conditional_mutual_information(p, Mask{1} << i, Mask{1} << j, u);
            out.worst_ci = std::max(out.worst_ci, cmi);
        }
    }
    out.ci_warning = out.worst_ci > ci_tol;

    const int m = popcount(v);
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        if (has_bit(v, i)) labels.push_back(std::to_string(i + 1));
    }
    std::vector<double> values(std::size_t{1} << m);
    for (Mask packed = 0; packed < values.size(); ++packed) {
        const Mask t = expand_subset(packed, v);
        values[packed] = mutual_information(p, u, t);
    }
    values[0] = 0.0;
    out.fn = SetFunction(GroundSet(m, std::move(labels)), std::move(values));
    return out;
}

std::vector<std::pair<std::int64_t, double>> sum_distribution(
    const std::vector<JointPmf>& marginals, Mask subset) {
    std::map<std::int64_t, double> dist;
    dist[0] = 1.0;
    int idx = 0;
    for (const auto& m : marginals) {
        const bool in = has_bit(subset, idx);
        ++idx;
        if (!in) continue;
        if (m.var_count() != 1) {
            throw DomainError("sum-entropy marginals must be single-variable PMFs");
        }
        const auto& values = m.integer_values()[0];
        std::map<std::int64_t, double> next;
        for (const auto& [s, ps] : dist) {
            for (std::size_t a = 0; a < m.probs().size(); ++a) {
                const double q = m.probs()[a];
                if (q == 0.0) continue;
                next[s + values[a]] += ps * q;
            }
        }
        if (next.size() > kMaxSumSupport) {
            throw DomainError("sum distribution support exceeds the width cap");
        }
        dist = std::move(next);
    }
    return {dist.begin(), dist.end()};
}

SetFunction build_sum_entropy_fn(const std::vector<JointPmf>& marginals) {
    const int n = static_cast<int>(marginals.size());
    if (n < 1) throw DomainError("sum-entropy builder needs at least one marginal");
    std::vector<double> values(std::size_t{1} << n);
    for (Mask t = 0; t < values.size(); ++t) {
        double h = 0.0;
        for (const auto& [s, q] : sum_distribution(marginals, t)) {
            if (q > 0.0) h -= q * std::log2(q);
        }
        values[t] = h;
    }
    values[0] = 0.0;
    return SetFunction(GroundSet::numbered(n), std::move(values));
}

}  // namespace submodkit

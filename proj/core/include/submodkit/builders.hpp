#pragma once

#include <vector>

#include "submodkit/joint_pmf.hpp"
#include "submodkit/set_function.hpp"

namespace submodkit {

/// f(T) = H(X_T). A rank function for every joint PMF.
SetFunction build_entropic_fn(const JointPmf& p);

/// f(T) = H(X_T | X_{T^c}). Supermodular, monotone increasing, f(empty)=0.
SetFunction build_cond_entropy_fn(const JointPmf& p);

/// f(T) = I(X_T ; X_{T^c}). Submodular with f(T) = f(T^c), so never
/// monotone unless identically zero.
SetFunction build_mi_fn(const JointPmf& p);

struct CondMiFn {
    SetFunction fn;
    /// Set when the conditional-independence hypothesis I(X_i;X_j|X_u) ~ 0
    /// failed validation; the table is still returned.
    bool ci_warning = false;
    double worst_ci = 0.0;
};

/// f(T) = I(X_u ; X_T) for T ⊆ v, on a ground set of size popcount(v).
/// Requires u and v disjoint; validates that the v-variables are
/// conditionally independent given X_u (threshold `ci_tol`, looser than
/// the verdict tol because test PMFs are constructed, not estimated).
CondMiFn build_cond_mi_fn(const JointPmf& p, Mask u, Mask v, double ci_tol = 1e-6);

/// f(T) = H(sum_{w in T} X_w) for independent integer-valued variables
/// given by single-variable marginals carrying integer_values. Sum
/// distributions come from exact convolution over integer supports
/// (support width capped at 10^6 points).
SetFunction build_sum_entropy_fn(const std::vector<JointPmf>& marginals);

/// Distribution of sum_{w in T} X_w as (support, probability) pairs in
/// increasing support order. Exposed for the sum-entropy inequalities.
std::vector<std::pair<std::int64_t, double>> sum_distribution(
    const std::vector<JointPmf>& marginals, Mask subset);

}  // namespace submodkit

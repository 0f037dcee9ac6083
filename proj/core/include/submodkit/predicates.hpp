#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "submodkit/set_function.hpp"
#include "submodkit/tolerance.hpp"

namespace submodkit {

/// Locates a predicate violation. `i`/`j` are element indices (-1 when the
/// condition involves fewer elements); `subset_b` is the second subset of
/// a pairwise condition (subadditivity).
struct PredicateWitness {
    Mask subset = 0;
    int i = -1;
    int j = -1;
    std::optional<Mask> subset_b;
};

struct PredicateVerdict {
    bool holds = true;
    /// Largest shortfall over all scanned constraints (required minus
    /// actual); negative when comfortably satisfied.
    double worst_violation = 0.0;
    /// Set when holds is false; the scan order (ascending subset, then
    /// i, then j) fixes which violation is reported.
    std::optional<PredicateWitness> witness;
};

std::string render_witness(const GroundSet& ground, const PredicateWitness& w);

/// Local pair check: f(S+i) + f(S+j) >= f(S+ij) + f(S) for every S and
/// i != j outside S, with slack tol * scale.
PredicateVerdict is_submodular(const SetFunction& f, double tol = kDefaultTol);

/// -f is submodular.
PredicateVerdict is_supermodular(const SetFunction& f, double tol = kDefaultTol);

/// f(S) <= f(S+i) for every S and i outside S.
PredicateVerdict is_monotone_increasing(const SetFunction& f, double tol = kDefaultTol);

/// f(S u T) <= f(S) + f(T) for all pairs. O(4^n) scan.
PredicateVerdict is_subadditive(const SetFunction& f, double tol = kDefaultTol);

/// Submodular, monotonically increasing, and f(empty) = 0.
PredicateVerdict is_rank_function(const SetFunction& f, double tol = kDefaultTol);

/// Which hypothesis of the generalized Shearer inequality applied:
/// 'a' = nonnegative submodular with target = full set,
/// 'b' = rank function with arbitrary target,
/// 'n' = neither hypothesis re-validated (result is informational only).
struct ShearerReport {
    double lhs = 0.0;  // sum of f over the family
    double rhs = 0.0;  // d * f(target)
    bool holds = false;
    char part = 'n';
};

/// Checks sum_j f(S_j) >= d * f(target), verifying the cover condition
/// (every element of target in >= d members) and re-validating the
/// applicable hypothesis. Throws PreconditionError naming an uncovered
/// element when the cover condition fails.
ShearerReport shearer_check(const SetFunction& f, const SubsetFamily& family,
                            int d, Mask target, double tol = kDefaultTol);

struct UncrossResult {
    SubsetFamily chain;
    /// Positions (in the working array, at the time of the step) of each
    /// pair replaced by intersection/union; position .first receives the
    /// intersection.
    std::vector<std::pair<int, int>> steps;
};

/// Uncrosses a family into a chain (totally ordered by inclusion) by the
/// recursive strategy of replacing a non-nested pair with intersection
/// and union: prefix chains first, then each next member sunk against the
/// chain top, so step logs are reproducible. Preserves the per-element
/// degree profile and never increases sum_j f(S_j) for submodular f.
UncrossResult uncross_to_chain(const SubsetFamily& family);

/// True when the members are totally ordered by inclusion as listed.
bool is_chain(const SubsetFamily& family);

}  // namespace submodkit

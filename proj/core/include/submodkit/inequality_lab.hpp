#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "submodkit/builders.hpp"
#include "submodkit/joint_pmf.hpp"
#include "submodkit/predicates.hpp"
#include "submodkit/scalar_transform.hpp"
#include "submodkit/set_function.hpp"

namespace submodkit {

/// One verified inequality: the common currency of all reports.
struct InequalityCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double slack = 0.0;  // lhs - rhs, signed so the reader sees direction
    bool holds = false;
};

enum class Direction { decreasing, increasing, none };

std::string to_string(Direction d);

/// A sequence t_1..t_n with a monotonicity verdict.
struct SequenceReport {
    std::vector<double> values;
    Direction direction_claimed = Direction::none;
    /// Every adjacent pair satisfies the claimed direction within tol.
    /// Vacuously true when no direction is claimed.
    bool holds = true;
    /// Index k (1-based) and signed slack of the tightest/worst adjacent
    /// step in the claimed direction (measured as decreasing when no
    /// claim was made).
    int worst_k = 0;
    double worst_slack = 0.0;
    /// What the numbers actually do, independent of any claim.
    Direction direction_measured = Direction::none;
    bool measured_flat = false;
};

/// t_k = (1/C(n,k)) sum_{|T|=k} g(f(T)/k), k = 1..n, by exact enumeration.
/// Requires f(empty) = 0 within tol. The claimed direction comes from the
/// (modularity class of f, flags of g) case table:
///   submodular   + increasing convex   -> decreasing
///   submodular   + decreasing concave  -> increasing
///   supermodular + increasing concave  -> increasing
///   supermodular + decreasing convex   -> decreasing
/// `claim`, when supplied, overrides detection; combinations outside the
/// table yield direction_claimed = none with monotonicity merely measured.
SequenceReport tk_sequence(const SetFunction& f, const ScalarTransform& g,
                           std::optional<Direction> claim = std::nullopt,
                           double tol = kDefaultTol);

/// Averaged subset sums f_k = (1/C(n,k)) sum_{|T|=k} f(T) for k = 0..n.
std::vector<double> subset_average_sequence(const SetFunction& f);

struct RankPowerBound {
    double lower = 0.0;  // (k/n)^{a-1} C(n-1,k-1) f(full)^a
    double sum = 0.0;    // sum_{|T|=k} f(T)^a
    double upper = 0.0;  // C(n,k) f(full)^a
    bool holds = false;
};

struct Corollary2Report {
    double lhs = 0.0;      // sum_{|T|=k} (f(full)^a - f(T)^a)
    double rhs = 0.0;      // c_a(n,k) f(full)^a
    double c_alpha = 0.0;  // (1 - k^a/n^a) C(n,k); C(n-1,k) when a = 1
    bool holds = false;
    /// Present when f is a rank function: the two-sided power-sum bound.
    std::optional<RankPowerBound> rank_bound;
};

/// Generalized Han inequality for submodular f with f(empty) = 0,
/// 1 <= k <= n-1, alpha >= 1. Nonnegativity of f is validated for
/// alpha > 1 and waived for alpha = 1.
Corollary2Report corollary2_check(const SetFunction& f, double alpha, int k,
                                  double tol = kDefaultTol);

/// c_alpha(n,k) as used by corollary2_check.
double c_alpha_coefficient(double alpha, int n, int k);

struct HanReport {
    double lhs = 0.0;  // sum_i (H(X^n) - H(X without i))
    double rhs = 0.0;  // H(X^n)
    double slack = 0.0;
    bool holds = false;
};

/// Han's inequality on a joint PMF.
HanReport han_check(const JointPmf& p);

enum class NamedSequence { h, l, m, r_seq, s, u, v, w };

std::string to_string(NamedSequence which);

/// The eight entropy sequences: h, l (MI), m (sums), r (conditional),
/// and the exponential family s, u, v, w with rate r > 0. m and w
/// require integer_values and pairwise independence (MI <= 1e-6).
SequenceReport corollary3_sequences(const JointPmf& p, double r, NamedSequence which,
                                    double tol = kDefaultTol);

struct SandwichReport {
    double lower = 0.0;  // C(n,k) g(f(full)/n)
    double mid = 0.0;    // sum_{|T|=k} g(f(T)/k)
    double upper = 0.0;  // C(n,k) g(f(full)/k)
    double binom = 0.0;
    double binom_lo = 0.0;  // 2^{n Hb(k/n)} / (n+1)
    double binom_hi = 0.0;  // 2^{n Hb(k/n)}
    bool chain_holds = false;
    bool binom_holds = false;
};

/// Finite-n sandwich around the k-subset sum for a rank function and a
/// convex increasing g, plus the entropy bounds on C(n,k).
SandwichReport corollary1_sandwich(const SetFunction& f, const ScalarTransform& g,
                                   int k, double tol = kDefaultTol);

using Point = std::vector<std::int64_t>;

struct ProjectionReport {
    std::uint64_t cardinality = 0;
    std::vector<std::uint64_t> projection_sizes;  // M_j, ascending coordinate masks
    double bound = 0.0;                           // (prod M_j)^{1/C(n-1,k-1)}
    bool holds = false;
    double rate = 0.0;       // log2(M)/n
    double rate_mean = 0.0;  // (1/l) sum log2(M_j)/k
};

/// Projects a finite point set onto every k-subset of coordinates and
/// checks |P| <= (prod_j M_j)^{1/C(n-1,k-1)}. Points are deduplicated.
ProjectionReport projection_bound(const std::vector<Point>& points, int k,
                                  double tol = kDefaultTol);

/// Sum-entropy and entropy-power inequalities for independent integer
/// random variables: the k-subset averaging bound, its entropy-power
/// forms (geometric and arithmetic mean), and the leave-one-out pair.
/// When a family/target/d is supplied, the Shearer form
/// d H(sum_{A}) <= sum_j H(sum_{S_j}) is appended.
std::vector<InequalityCheck> sum_epi_checks(
    const std::vector<JointPmf>& marginals, int k,
    const std::optional<SubsetFamily>& family = std::nullopt, int d = 1,
    Mask target = 0, double tol = kDefaultTol);

}  // namespace submodkit

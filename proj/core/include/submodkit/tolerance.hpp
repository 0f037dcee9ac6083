#pragma once

#include <algorithm>
#include <cmath>

namespace submodkit {

/// Default slack for all inequality verdicts. The reference inequalities
/// are exact over the reals; floating point forces a slack convention.
inline constexpr double kDefaultTol = 1e-9;

inline double rel_scale(double lhs, double rhs) {
    return std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
}

/// "lhs >= rhs" under the relative-slack convention.
inline bool holds_geq(double lhs, double rhs, double tol) {
    return lhs >= rhs - tol * rel_scale(lhs, rhs);
}

/// "lhs <= rhs" under the relative-slack convention.
inline bool holds_leq(double lhs, double rhs, double tol) {
    return lhs <= rhs + tol * rel_scale(lhs, rhs);
}

inline bool near(double a, double b, double tol) {
    return std::fabs(a - b) <= tol * rel_scale(a, b);
}

}  // namespace submodkit

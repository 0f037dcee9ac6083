#pragma once

#include <cmath>
#include <string>

#include "submodkit/errors.hpp"

namespace submodkit {

enum class Monotone { increasing, decreasing };

/// Descriptor of a monotone convex/concave scalar map g. The monotonicity
/// and shape flags are derived from the kind and parameters, never set by
/// the caller:
///   identity            g(x) = x             increasing, convex and concave
///   clipped_power(a)    g(x) = x^a (x>=0), 0 (x<0), a >= 1
///                                            increasing, convex
///   exp2_scaled(c)      g(x) = 2^{c x}, c != 0
///                                            convex; increasing iff c > 0
///   neg_exp2_scaled(c)  g(x) = -2^{c x}, c != 0
///                                            concave; decreasing iff c > 0
/// The negated kind exists so that the decreasing-concave and
/// increasing-concave rows of the sequence case table are instantiable.
class ScalarTransform {
public:
    enum class Kind { identity, clipped_power, exp2_scaled, neg_exp2_scaled };

    static ScalarTransform identity();
    static ScalarTransform clipped_power(double alpha);
    static ScalarTransform exp2_scaled(double c);
    static ScalarTransform neg_exp2_scaled(double c);

    double operator()(double x) const;

    Kind kind() const { return kind_; }
    double param() const { return param_; }
    Monotone monotone_dir() const { return monotone_dir_; }
    bool convex() const { return convex_; }
    bool concave() const { return concave_; }
    std::string describe() const;

private:
    ScalarTransform(Kind kind, double param);

    Kind kind_;
    double param_;
    Monotone monotone_dir_;
    bool convex_;
    bool concave_;
};

}  // namespace submodkit

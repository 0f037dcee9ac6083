#include "submodkit/scalar_transform.hpp"

namespace submodkit {

ScalarTransform::ScalarTransform(Kind kind, double param)
    : kind_(kind), param_(param) {
    switch (kind_) {
        case Kind::identity:
            monotone_dir_ = Monotone::increasing;
            convex_ = concave_ = true;
            break;
        case Kind::clipped_power:
            if (!(param_ >= 1.0)) {
                throw DomainError("clipped power needs exponent >= 1");
            }
            monotone_dir_ = Monotone::increasing;
            convex_ = true;
            concave_ = false;
            break;
        case Kind::exp2_scaled:
            if (param_ == 0.0) throw DomainError("exp2 scale must be nonzero");
            monotone_dir_ = param_ > 0.0 ? Monotone::increasing : Monotone::decreasing;
            convex_ = true;
            concave_ = false;
            break;
        case Kind::neg_exp2_scaled:
            if (param_ == 0.0) throw DomainError("exp2 scale must be nonzero");
            monotone_dir_ = param_ > 0.0 ? Monotone::decreasing : Monotone::increasing;
            convex_ = false;
            concave_ = true;
            break;
    }
}

ScalarTransform ScalarTransform::identity() { return {Kind::identity, 0.0}; }

ScalarTransform ScalarTransform::clipped_power(double alpha) {
    return {Kind::clipped_power, alpha};
}

ScalarTransform ScalarTransform::exp2_scaled(double c) { return {Kind::exp2_scaled, c}; }

ScalarTransform ScalarTransform::neg_exp2_scaled(double c) {
    return {Kind::neg_exp2_scaled, c};
}

double ScalarTransform::operator()(double x) const {
    switch (kind_) {
        case Kind::identity:
            return x;
        case Kind::clipped_power:
            return x >= 0.0 ? std::pow(x, param_) : 0.0;
        case Kind::exp2_scaled:
            return std::exp2(param_ * x);
        case Kind::neg_exp2_scaled:
            return -std::exp2(param_ * x);
    }
    return x;  // unreachable
}

std::string ScalarTransform::describe() const {
    switch (kind_) {
        case Kind::identity:
            return "identity";
        case Kind::clipped_power:
            return "clipped_power(" + std::to_string(param_) + ")";
        case Kind::exp2_scaled:
            return "exp2_scaled(" + std::to_string(param_) + ")";
        case Kind::neg_exp2_scaled:
            return "neg_exp2_scaled(" + std::to_string(param_) + ")";
    }
    return "identity";
}

}  // namespace submodkit

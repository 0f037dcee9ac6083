#include "submodkit/set_function.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <unordered_set>

namespace submodkit {

namespace {

int env_cap(const char* name, int fallback) {
    const char* v = std::getenv(name);
    if (v == nullptr || *v == '\0') return fallback;
    char* end = nullptr;
    long parsed = std::strtol(v, &end, 10);
    if (end == v || *end != '\0' || parsed < 1) return fallback;
    return static_cast<int>(parsed);
}

}  // namespace

int max_ground_set_size() {
    static const int cap = env_cap("SUBMODKIT_MAX_N", 24);
    return std::min(cap, 31);  // bitmask width is the absolute ceiling
}

int max_codeset_dimension() {
    static const int cap = env_cap("SUBMODKIT_MAX_N", 30);
    return std::min(cap, 31);
}

GroundSet::GroundSet(int n, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
    if (n < 1 || n > max_ground_set_size()) {
        throw DomainError("ground set size " + std::to_string(n) +
                          " outside [1, " + std::to_string(max_ground_set_size()) + "]");
    }
    if (static_cast<int>(labels_.size()) != n) {
        throw DomainError("expected " + std::to_string(n) + " labels, got " +
                          std::to_string(labels_.size()));
    }
    std::unordered_set<std::string> seen;
    for (const auto& l : labels_) {
        if (!seen.insert(l).second) {
            throw DomainError("duplicate ground-set label '" + l + "'");
        }
    }
}

GroundSet GroundSet::numbered(int n) {
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 1; i <= n; ++i) labels.push_back(std::to_string(i));
    return GroundSet(n, std::move(labels));
}

std::string GroundSet::render(Mask subset) const {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < n_; ++i) {
        if (!has_bit(subset, i)) continue;
        if (!first) out += ",";
        out += labels_[static_cast<std::size_t>(i)];
        first = false;
    }
    out += "}";
    return out;
}

SetFunction::SetFunction(GroundSet ground, std::vector<double> values)
    : ground_(std::move(ground)), values_(std::move(values)), scale_(1.0) {
    if (values_.size() != ground_.table_size()) {
        throw DomainError("set-function table has " + std::to_string(values_.size()) +
                          " entries, expected " + std::to_string(ground_.table_size()));
    }
    for (double v : values_) {
        if (!std::isfinite(v)) throw DomainError("set-function table entry is not finite");
        scale_ = std::max(scale_, std::fabs(v));
    }
}

double evaluate(const SetFunction& f, Mask subset) {
    if (subset >= f.ground().table_size()) {
        throw DomainError("subset bitmask " + std::to_string(subset) +
                          " out of range for n=" + std::to_string(f.n()));
    }
    return f(subset);
}

SetFunction restrict(const SetFunction& f, Mask domain) {
    if (domain >= f.ground().table_size() && domain != f.ground().full()) {
        throw DomainError("restriction domain out of range");
    }
    const int m = popcount(domain);
    if (m == 0) throw DomainError("restriction to the empty domain is not a set function");
    std::vector<std::string> labels;
    labels.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < f.n(); ++i) {
        if (has_bit(domain, i)) labels.push_back(f.ground().label(i));
    }
    std::vector<double> values(std::size_t{1} << m);
    for (Mask packed = 0; packed < values.size(); ++packed) {
        values[packed] = f(expand_subset(packed, domain));
    }
    return SetFunction(GroundSet(m, std::move(labels)), std::move(values));
}

SubsetFamily::SubsetFamily(GroundSet ground, std::vector<Mask> members)
    : ground_(std::move(ground)), members_(std::move(members)) {
    if (members_.empty()) throw DomainError("subset family must have at least one member");
    for (Mask m : members_) {
        if (m >= ground_.table_size()) {
            throw DomainError("family member bitmask out of range");
        }
    }
}

int SubsetFamily::degree(int element) const {
    int deg = 0;
    for (Mask m : members_) deg += has_bit(m, element) ? 1 : 0;
    return deg;
}

std::vector<int> SubsetFamily::degree_profile() const {
    std::vector<int> profile(static_cast<std::size_t>(ground_.size()));
    for (int i = 0; i < ground_.size(); ++i) profile[static_cast<std::size_t>(i)] = degree(i);
    return profile;
}

}  // namespace submodkit

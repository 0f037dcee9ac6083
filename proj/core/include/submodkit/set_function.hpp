#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "submodkit/bits.hpp"
#include "submodkit/errors.hpp"

namespace submodkit {

/// Hard cap on ground-set size, so every dense 2^n table fits memory.
/// SUBMODKIT_MAX_N in the environment overrides it (at the user's risk).
int max_ground_set_size();

/// Cap for code sets on the binary hypercube (words are 32-bit masks).
int max_codeset_dimension();

/// The finite universe a set function is defined over. Immutable.
class GroundSet {
public:
    GroundSet(int n, std::vector<std::string> labels);

    /// Ground set with default labels "1".."n".
    static GroundSet numbered(int n);

    int size() const { return n_; }
    Mask full() const { return full_mask(n_); }
    std::size_t table_size() const { return std::size_t{1} << n_; }
    const std::string& label(int i) const { return labels_[static_cast<std::size_t>(i)]; }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Renders a subset as "{a,c}" using element labels.
    std::string render(Mask subset) const;

    bool operator==(const GroundSet& o) const = default;

private:
    int n_;
    std::vector<std::string> labels_;
};

/// Dense table of real values over all subsets of a ground set, indexed
/// by bitmask. f(empty) is stored explicitly, never assumed zero.
class SetFunction {
public:
    SetFunction(GroundSet ground, std::vector<double> values);

    const GroundSet& ground() const { return ground_; }
    int n() const { return ground_.size(); }
    const std::vector<double>& values() const { return values_; }

    double operator()(Mask subset) const { return values_[subset]; }

    /// Largest absolute table entry, floored at 1; the scale all predicate
    /// tolerances are relative to.
    double scale() const { return scale_; }

private:
    GroundSet ground_;
    std::vector<double> values_;
    double scale_;
};

/// Table lookup with range checking.
double evaluate(const SetFunction& f, Mask subset);

/// Restriction of f to the subsets of `domain`, on a ground set of size
/// popcount(domain). Preserves submodularity and f(empty).
SetFunction restrict(const SetFunction& f, Mask domain);

/// A finite collection of subsets S_1..S_M of a ground set; repeats allowed.
class SubsetFamily {
public:
    SubsetFamily(GroundSet ground, std::vector<Mask> members);

    const GroundSet& ground() const { return ground_; }
    const std::vector<Mask>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }

    /// Number of members containing element i.
    int degree(int element) const;

    /// Per-element degree vector (deg(1), ..., deg(n)).
    std::vector<int> degree_profile() const;

private:
    GroundSet ground_;
    std::vector<Mask> members_;
};

}  // namespace submodkit

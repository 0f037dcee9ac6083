#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "submodkit/bits.hpp"
#include "submodkit/errors.hpp"
#include "submodkit/tolerance.hpp"

namespace submodkit {

/// All logarithms are base 2 and all entropies are in bits; the entropy
/// power uses exponent base 2 to match. A single constant, not
/// user-configurable.
inline constexpr double kLogBase = 2.0;

/// Probability table over a finite product alphabet for n discrete
/// variables. Immutable after construction. Cell (i_1,...,i_n) lives at
/// flat index ((i_1 * k_2 + i_2) * k_3 + ...) + i_n, i.e. the last
/// variable varies fastest.
class JointPmf {
public:
    JointPmf(std::vector<int> alphabet_sizes, std::vector<double> probs,
             std::optional<std::vector<std::vector<std::int64_t>>> integer_values = std::nullopt);

    int var_count() const { return static_cast<int>(alphabet_sizes_.size()); }
    const std::vector<int>& alphabet_sizes() const { return alphabet_sizes_; }
    const std::vector<double>& probs() const { return probs_; }
    bool has_integer_values() const { return integer_values_.has_value(); }
    const std::vector<std::vector<std::int64_t>>& integer_values() const;

    double cell(const std::vector<int>& indices) const;
    std::size_t flat_index(const std::vector<int>& indices) const;

private:
    std::vector<int> alphabet_sizes_;
    std::vector<double> probs_;
    std::optional<std::vector<std::vector<std::int64_t>>> integer_values_;
};

/// Sums out the variables not in `keep`; keep must be nonempty.
JointPmf marginalize(const JointPmf& p, Mask keep);

/// H(X_subset) in bits; terms with q = 0 contribute 0. H of the empty
/// subset is 0 (the caller convention implemented centrally).
double entropy(const JointPmf& p, Mask subset);

/// H(X_a | X_b) = H(X_{a u b}) - H(X_b); a and b must be disjoint.
double conditional_entropy(const JointPmf& p, Mask subset_a, Mask subset_b);

/// I(X_a ; X_b) = H(X_a) + H(X_b) - H(X_{a u b}), clamped at 0 when within
/// tol of 0; a and b must be disjoint.
double mutual_information(const JointPmf& p, Mask subset_a, Mask subset_b,
                          double tol = kDefaultTol);

/// I(X_a ; X_b | X_c) = H(X_{ac}) + H(X_{bc}) - H(X_c) - H(X_{abc}),
/// clamped at 0 within tol; a, b, c pairwise disjoint.
double conditional_mutual_information(const JointPmf& p, Mask a, Mask b, Mask c,
                                      double tol = kDefaultTol);

/// Binary entropy function on [0,1], endpoints -> 0.
double binary_entropy(double p);

/// N = 2^{(2/n) h} with h in bits.
double entropy_power(double h_bits, int dimension);

enum class Quantity { entropy, conditional_entropy, mutual_information, entropy_power };

/// A tagged information measure; construction validates the range the
/// quantity admits (entropies and MI nonnegative, entropy power positive).
struct InfoValue {
    Quantity quantity;
    double value;
};

InfoValue make_info_value(Quantity quantity, double value);

}  // namespace submodkit

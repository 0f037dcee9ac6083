#include "submodkit/joint_pmf.hpp"

#include <cmath>
#include <cstddef>
#include <numeric>

namespace submodkit {

namespace {

constexpr std::size_t kMaxCells = std::size_t{1} << 24;

std::size_t checked_cell_count(const std::vector<int>& sizes) {
    if (sizes.empty()) throw DomainError("joint PMF needs at least one variable");
    std::size_t cells = 1;
    for (int k : sizes) {
        if (k < 1) throw DomainError("alphabet sizes must be >= 1");
        if (cells > kMaxCells / static_cast<std::size_t>(k)) {
            throw DomainError("joint PMF table exceeds the cell cap");
        }
        cells *= static_cast<std::size_t>(k);
    }
    return cells;
}

}  // namespace

JointPmf::JointPmf(std::vector<int> alphabet_sizes, std::vector<double> probs,
                   std::optional<std::vector<std::vector<std::int64_t>>> integer_values)
    : alphabet_sizes_(std::move(alphabet_sizes)),
      probs_(std::move(probs)),
      integer_values_(std::move(integer_values)) {
    const std::size_t cells = checked_cell_count(alphabet_sizes_);
    if (probs_.size() != cells) {
        throw DomainError("probability table has " + std::to_string(probs_.size()) +
                          " cells, expected " + std::to_string(cells));
    }
    double total = 0.0;
    for (double p : probs_) {
        if (!(p >= 0.0)) throw DomainError("probabilities must be nonnegative");
        total += p;
    }
    if (std::fabs(total - 1.0) > 1e-12) {
        throw DomainError("probabilities sum to " + std::to_string(total) + ", not 1");
    }
    if (integer_values_) {
        if (integer_values_->size() != alphabet_sizes_.size()) {
            throw DomainError("integer_values must cover every variable");
        }
        for (std::size_t i = 0; i < integer_values_->size(); ++i) {
            if ((*integer_values_)[i].size() !=
                static_cast<std::size_t>(alphabet_sizes_[i])) {
                throw DomainError("integer_values for variable " + std::to_string(i + 1) +
                                  " must match its alphabet size");
            }
        }
    }
}

const std::vector<std::vector<std::int64_t>>& JointPmf::integer_values() const {
    if (!integer_values_) throw DomainError("PMF carries no integer_values");
    return *integer_values_;
}

std::size_t JointPmf::flat_index(const std::vector<int>& indices) const {
    if (indices.size() != alphabet_sizes_.size()) {
        throw DomainError("index tuple arity mismatch");
    }
    std::size_t flat = 0;
    for (std::size_t v = 0; v < indices.size(); ++v) {
        if (indices[v] < 0 || indices[v] >= alphabet_sizes_[v]) {
            throw DomainError("alphabet index out of range for variable " +
                              std::to_string(v + 1));
        }
        flat = flat * static_cast<std::size_t>(alphabet_sizes_[v]) +
               static_cast<std::size_t>(indices[v]);
    }
    return flat;
}

double JointPmf::cell(const std::vector<int>& indices) const {
    return probs_[flat_index(indices)];
}

JointPmf marginalize(const JointPmf& p, Mask keep) {
    const int n = p.var_count();
    if (keep == 0) throw DomainError("cannot marginalize onto the empty variable set");
    if (keep >= (Mask{1} << n)) throw DomainError("keep mask out of range");

    std::vector<int> kept_sizes;
    std::vector<int> kept_vars;
    for (int v = 0; v < n; ++v) {
        if (has_bit(keep, v)) {
            kept_vars.push_back(v);
            kept_sizes.push_back(p.alphabet_sizes()[static_cast<std::size_t>(v)]);
        }
    }

    std::size_t kept_cells = 1;
    for (int k : kept_sizes) kept_cells *= static_cast<std::size_t>(k);
    std::vector<double> out(kept_cells, 0.0);

    // Walk the full table once, projecting each cell's index tuple.
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    const auto& sizes = p.alphabet_sizes();
    for (std::size_t flat = 0; flat < p.probs().size(); ++flat) {
        std::size_t out_flat = 0;
        for (std::size_t j = 0; j < kept_vars.size(); ++j) {
            out_flat = out_flat * static_cast<std::size_t>(kept_sizes[j]) +
                       static_cast<std::size_t>(idx[static_cast<std::size_t>(kept_vars[j])]);
        }
        out[out_flat] += p.probs()[flat];

        for (int v = n - 1; v >= 0; --v) {
            if (++idx[static_cast<std::size_t>(v)] < sizes[static_cast<std::size_t>(v)]) break;
            idx[static_cast<std::size_t>(v)] = 0;
        }
    }

    std::optional<std::vector<std::vector<std::int64_t>>> values;
    if (p.has_integer_values()) {
        std::vector<std::vector<std::int64_t>> kept_values;
        for (int v : kept_vars) {
            kept_values.push_back(p.integer_values()[static_cast<std::size_t>(v)]);
        }
        values = std::move(kept_values);
    }
    return JointPmf(std::move(kept_sizes), std::move(out), std::move(values));
}

double entropy(const JointPmf& p, Mask subset) {
    if (subset == 0) return 0.0;  // caller convention: H(X_empty) = 0
    if (subset >= (Mask{1} << p.var_count())) throw DomainError("subset mask out of range");

    const std::vector<double>* table = &p.probs();
    JointPmf marginal = p;  // cheap: small tables by construction
    if (subset != full_mask(p.var_count())) {
        marginal = marginalize(p, subset);
        table = &marginal.probs();
    }
    double h = 0.0;
    for (double q : *table) {
        if (q > 0.0) h -= q * std::log2(q);
    }
    return h;
}

double conditional_entropy(const JointPmf& p, Mask subset_a, Mask subset_b) {
    if ((subset_a & subset_b) != 0) {
        throw DomainError("conditional entropy needs disjoint variable sets");
    }
    return entropy(p, subset_a | subset_b) - entropy(p, subset_b);
}

double mutual_information(const JointPmf& p, Mask subset_a, Mask subset_b, double tol) {
    if ((subset_a & subset_b) != 0) {
        throw DomainError("mutual information needs disjoint variable sets");
    }
    const double mi = entropy(p, subset_a) + entropy(p, subset_b) - entropy(p, subset_a | subset_b);
    return (mi < 0.0 && mi > -tol) ? 0.0 : mi;
}

double conditional_mutual_information(const JointPmf& p, Mask a, Mask b, Mask c, double tol) {
    if ((a & b) != 0 || (a & c) != 0 || (b & c) != 0) {
        throw DomainError("conditional mutual information needs pairwise disjoint sets");
    }
    const double cmi = entropy(p, a | c) + entropy(p, b | c) - entropy(p, c) - entropy(p, a | b | c);
    return (cmi < 0.0 && cmi > -tol) ? 0.0 : cmi;
}

double binary_entropy(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("binary entropy argument " + std::to_string(p) +
                          " outside [0,1]");
    }
    double h = 0.0;
    if (p > 0.0) h -= p * std::log2(p);
    if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
    return h;
}

double entropy_power(double h_bits, int dimension) {
    if (dimension < 1) throw DomainError("entropy power needs dimension >= 1");
    return std::exp2(2.0 * h_bits / static_cast<double>(dimension));
}

InfoValue make_info_value(Quantity quantity, double value) {
    switch (quantity) {
        case Quantity::entropy:
        case Quantity::conditional_entropy:
        case Quantity::mutual_information:
            if (value < -1e-12) {
                throw DomainError("information measure must be nonnegative");
            }
            break;
        case Quantity::entropy_power:
            if (!(value > 0.0)) throw DomainError("entropy power must be positive");
            break;
    }
    return InfoValue{quantity, value};
}

}  // namespace submodkit

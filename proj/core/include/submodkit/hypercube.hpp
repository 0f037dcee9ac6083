#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "submodkit/bits.hpp"
#include "submodkit/errors.hpp"
#include "submodkit/tolerance.hpp"

namespace submodkit {

/// A subset of {-1,1}^n stored as sorted, deduplicated n-bit masks
/// (bit = 1 <=> coordinate +1). Canonical and immutable.
class CodeSet {
public:
    CodeSet(int n, std::vector<std::uint32_t> words);

    int dimension() const { return n_; }
    std::size_t size() const { return words_.size(); }
    const std::vector<std::uint32_t>& words() const { return words_; }
    bool contains(std::uint32_t w) const;
    bool is_full_cube() const { return size() == (std::size_t{1} << n_); }

private:
    int n_;
    std::vector<std::uint32_t> words_;
};

/// Exact edge and boundary counts of the confusion graph, per distance d.
/// Invariant (asserted on construction): C(n,d)|A| = 2 E_d + B_d.
struct GraphStats {
    int tau = 0;
    std::vector<std::uint64_t> edge_counts;      // E_d at index d-1
    std::vector<std::uint64_t> boundary_counts;  // B_d at index d-1
};

/// E_d by pair enumeration over A x A, B_d by distance-d neighbor misses;
/// the counting identity ties the two routes together.
GraphStats edge_counts(const CodeSet& A, int tau);

struct MdValue {
    std::uint64_t value = 0;
    /// No qualifying (word, position-tuple) configuration existed; the
    /// value is the defining range's upper cap rather than a minimum.
    bool vacuous = false;
};

/// m_d: the minimum over words x in A and d-position tuples whose full
/// flip stays in A, of how many words of A share x's punctured subvector.
MdValue compute_md(const CodeSet& A, int d);

/// l_d: same minimum over configurations whose full flip leaves A,
/// clamped to the documented cap min(2^d - 1, |A| - 1).
MdValue compute_ld(const CodeSet& A, int d);

struct BoundReport {
    int d = 0;
    std::uint64_t m_d = 0;
    std::uint64_t l_d = 0;
    bool m_vacuous = false;
    bool l_vacuous = false;
    /// The l plugged into the refined formula. Any 1 <= l <= l_d is a
    /// valid constant; larger l tightens the bound exactly when
    /// |A| <= m_d^{n/d}, so l_used is l_d in that regime and 1 otherwise
    /// (keeping refined <= default_bound on every instance).
    std::uint64_t l_used = 0;
    /// C(n-1,d-1)|A|(log2|A| - (n/d) log2 l_used) / (2 log2(m_d/l_used));
    /// absent when m_d = l_d (the rearrangement divides by log(m/l)).
    std::optional<double> refined;
    double default_bound = 0.0;  // (1/2) C(n-1,d-1) |A| log2|A|
    double trivial = 0.0;        // (1/2) C(n,d) |A|
    bool useful = false;         // |A| <= m_d^{n/d}
    std::uint64_t exact_count = 0;
    bool holds = false;  // exact_count <= every applicable bound, within tol
};

/// Edge bounds at distance d. Overrides for (m_d, l_d), when given, are
/// validated against the defining minimizations by brute force.
BoundReport bound_report(const CodeSet& A, int d,
                         std::optional<std::pair<std::uint64_t, std::uint64_t>> overrides =
                             std::nullopt,
                         double tol = kDefaultTol);

struct TotalEdgeBound {
    double sum_form = 0.0;
    /// (1/2) 2^{(n-1) Hb((tau-1)/(n-1))} |A| log2|A|; present only when
    /// tau <= (n+1)/2.
    std::optional<double> entropy_form;
    std::uint64_t exact_total = 0;
    bool holds = false;
};

TotalEdgeBound total_edge_bound(const CodeSet& A, int tau, double tol = kDefaultTol);

/// Average influence of d-subsets: |B^{(n,d)}(A)| / (2^{n-1} C(n,d)).
double influence(const CodeSet& A, int d);

struct InfluenceBounds {
    double exact = 0.0;
    /// Present when m_d > l_d.
    std::optional<double> refined_lb;
    double default_lb = 0.0;
    bool holds = false;  // exact >= every present lower bound, within tol
};

InfluenceBounds influence_bounds(const CodeSet& A, int d,
                                 std::optional<std::pair<std::uint64_t, std::uint64_t>>
                                     overrides = std::nullopt,
                                 double tol = kDefaultTol);

/// Union of random axis-aligned subcubes of dimension d_max, closed so
/// that whenever x and its d-flip are both present (d <= d_max) the whole
/// spanned subcube is present. Deterministic per seed.
CodeSet subcube_family(int n, int d_max, std::uint64_t seed);

/// The subcube-closure property subcube_family guarantees, checkable on
/// any set: every distance-<=d_max pair spans a fully contained subcube.
bool is_subcube_closed(const CodeSet& A, int d_max);

struct D1Identity {
    double lhs = 0.0;  // sum_k (H(X^n) - H(X with coordinate k dropped))
    double rhs = 0.0;  // 2 |E_1| / |A| bits
    bool holds = false;
};

/// Exact d=1 identity for X uniform on A, tying the edge counting to the
/// entropy machinery. Needs n <= 24 (dense PMF table).
D1Identity d1_entropy_identity(const CodeSet& A, double tol = kDefaultTol);

}  // namespace submodkit

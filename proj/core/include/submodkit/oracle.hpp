#pragma once

#include <cstdint>
#include <vector>

#include "submodkit/hypercube.hpp"
#include "submodkit/inequality_lab.hpp"
#include "submodkit/joint_pmf.hpp"
#include "submodkit/predicates.hpp"
#include "submodkit/set_function.hpp"

/// Definition-level brute-force transcriptions, used exclusively as test
/// oracles against the optimized modules. No code is shared with the
/// implementations they check; the duplication is deliberate. Single
/// threaded, and instances above the caps are refused, never truncated.
namespace submodkit::oracle {

struct OracleConfig {
    int max_n_setfn = 6;
    int max_n_hypercube = 10;
    std::uint64_t seed = 1;
    int instance_count = 100;
};

/// Cross-checks the optimized implementations against the transcriptions
/// below on seeded random instances. Each family reports agreements as an
/// InequalityCheck (lhs = agreeing instances, rhs = instances); any
/// disagreement dumps the offending instance to disk.
std::vector<InequalityCheck> equivalence_suite(const OracleConfig& config);

/// Submodularity over all ordered pairs (S,T), straight from the
/// definition. Refuses n > 12.
PredicateVerdict submodularity_by_definition(const SetFunction& f,
                                             double tol = kDefaultTol);

/// Entropic function of a randomly generated joint PMF; a rank function
/// by construction. Deterministic per seed.
SetFunction random_rank_function(int n, std::uint64_t seed);

/// Random joint PMF with alphabet sizes in [2, max_alphabet]; product
/// distribution when `product` is set. Deterministic per seed.
JointPmf random_joint_pmf(int n, int max_alphabet, std::uint64_t seed,
                          bool product = false);

/// Random single-variable integer-valued PMFs for sum-entropy work;
/// identical marginals when `iid` is set. Deterministic per seed.
std::vector<JointPmf> random_integer_marginals(int n, std::uint64_t seed,
                                               bool iid = false);

/// Random subset family covering every element of `target` at least d
/// times. Deterministic per seed.
SubsetFamily random_cover_family(const GroundSet& ground, int d, Mask target,
                                 std::uint64_t seed);

/// Random code set with the given |A|. Deterministic per seed.
CodeSet random_code_set(int n, int size, std::uint64_t seed);

/// (m_d, l_d) by literal transcription of the defining minimizations:
/// explicit position tuples, per-position subvector comparison.
std::pair<MdValue, MdValue> brute_md_ld(const CodeSet& A, int d);

/// Edge/boundary counts by per-position Hamming distance over all pairs.
GraphStats brute_pairs(const CodeSet& A, int tau);

/// Projection sizes M_j by materializing every projected tuple set.
std::vector<std::uint64_t> brute_projection(const std::vector<Point>& points, int k);

/// Serializes a disagreeing instance next to the working directory (or
/// $SUBMODKIT_DUMP_DIR) in the module's own text format, appending a
/// one-line repro command. Returns the path written.
std::string dump_failing_instance(const std::string& tag, const std::string& instance_text,
                                  const std::string& repro_command);

}  // namespace submodkit::oracle

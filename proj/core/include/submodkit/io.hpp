#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "submodkit/hypercube.hpp"
#include "submodkit/inequality_lab.hpp"
#include "submodkit/joint_pmf.hpp"
#include "submodkit/set_function.hpp"

namespace submodkit {

/// Set-function text format:
///   setfn n=<n>
///   <bitmask-as-binary> <value>     (exactly 2^n lines, any order)
/// Missing, duplicate or malformed entries raise ParseError with
/// line/column diagnostics.
SetFunction parse_set_function(std::istream& in);
std::string format_set_function(const SetFunction& f);

/// PMF text format:
///   pmf n=<n> sizes=<k1,...,kn> [values=<v11,...;v21,...;...>]
///   <i1> <i2> ... <in> <prob>      (0-based indices; unlisted cells are 0)
JointPmf parse_joint_pmf(std::istream& in);
std::string format_joint_pmf(const JointPmf& p);

/// Code-set file: one word per line over +/- or 1/0 characters, fixed
/// length, '#' comments. Duplicates are dropped with a warning collected
/// into `warnings` (when non-null), not an error.
CodeSet parse_code_set(std::istream& in, std::vector<std::string>* warnings = nullptr);
std::string format_code_set(const CodeSet& A);

/// Point-set file: one point per line, n whitespace-separated integers,
/// '#' comments.
std::vector<Point> parse_points(std::istream& in);
std::string format_points(const std::vector<Point>& points);

enum class InputKind { set_function, joint_pmf, code_set, points };

/// Sniffs the format from the first non-comment, non-blank line.
InputKind detect_input_kind(std::istream& in);

}  // namespace submodkit

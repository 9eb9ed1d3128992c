#pragma once

#include "radiant/groups.hpp"
#include "radiant/surfaces.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace radiant::cli {

/// Runs one command; args excludes the program name. Returns the exit code:
/// 0 success, 1 domain error (e.g. non-radiant input), 2 malformed input,
/// 3 internal invariant failure.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Semicolon-separated rows of space-separated integers.
std::vector<std::vector<Integer>> parse_rows(const std::string& text);

/// Comma- or space-separated integers.
SurfaceSequence parse_sequence(const std::string& text);

/// DOT digraph of the root graph: inner arrows dashed, outer arrows dotted,
/// vertices in id order labelled by root coordinates.
std::string emit_dot(const RootSystem& sys, const RootGraph& graph);

} // namespace radiant::cli

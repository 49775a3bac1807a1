#pragma once

#include <string>
#include <string_view>

#include "pcog/graph.hpp"

namespace pcog {

/// Text format, one record per line. `#`-prefixed comment lines and blank
/// lines are skipped anywhere. Layout:
///   p kprobe <n> <k> <m>
///   n lines: l <vertex-id> <bitstring of length k, or "-" when k = 0>
///            (vertex ids 1..n, ascending)
///   m lines: e <u> <v>   with 1 <= u < v <= n
/// Duplicate edges, self-loops, out-of-order vertex ids, and trailing content
/// are errors. Throws ParseError carrying the 1-based line number. The parsed
/// graph is structurally sound but not necessarily valid; run validate
/// separately.
LabeledGraph parse_graph(std::string_view text);

/// Reads and parses a file; throws Error when the file cannot be read.
LabeledGraph read_graph(const std::string& path);

/// Canonical serialization, the exact inverse of parse_graph.
std::string write_graph(const LabeledGraph& g);

}  // namespace pcog

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "boxdom/graph.hpp"

namespace boxdom {

// graph6: header encoding the order (one byte n+63 for n <= 62, '~' plus
// three 6-bit bytes above that, capped at Graph::kMaxOrder), then the
// upper-triangle adjacency bits in column-major order (for j = 1..n-1,
// i = 0..j-1), packed big-endian into 6-bit chunks, each offset by 63. The
// optional ">>graph6<<" prefix is tolerated and skipped.
Graph parse_graph6(std::string_view line);

std::string emit_graph6(const Graph& g);

// One graph per line; blank lines and a leading ">>graph6<<" header line are
// skipped. Throws ParseError with the offending line number in the message.
std::vector<Graph> read_graph6_file(const std::string& path);

}  // namespace boxdom

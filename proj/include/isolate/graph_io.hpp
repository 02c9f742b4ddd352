#pragma once

#include <string>

#include "isolate/graph.hpp"

namespace isolate {

// Edge-list text: first line the vertex count, then one "u v" pair per line,
// 0-indexed.  Blank lines and trailing whitespace tolerated on parse; emit is
// canonical (sorted pairs u < v, single spaces, trailing newline).
Graph parse_edge_list(const std::string &text);
std::string emit_edge_list(const Graph &g);

// graph6, n <= 62: one length byte n+63, then the upper triangle column by
// column packed into 6-bit groups, each group + 63.
Graph parse_graph6(const std::string &text);
std::string emit_graph6(const Graph &g);

Graph load_graph_file(const std::string &path); // .g6 suffix selects graph6
std::string read_text_file(const std::string &path);
void write_text_file(const std::string &path, const std::string &content);

} // namespace isolate

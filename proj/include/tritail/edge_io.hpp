#pragma once

#include <iosfwd>
#include <string>

#include "tritail/graph.hpp"

namespace tritail {

// Edge-list text format:
//   optional first data line  n=<int>
//   one edge per line         u v           (ASCII decimal, single space)
// Blank lines and lines starting with '#' are ignored. Without the n= header
// the vertex count is 1 + max vertex index.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
void write_edge_list_file(const std::string& path, const Graph& g);

// The same format as a string (used for counterexample reports).
std::string to_edge_list(const Graph& g);

}  // namespace tritail

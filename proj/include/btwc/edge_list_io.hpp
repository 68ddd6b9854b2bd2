#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "btwc/graph.hpp"

namespace btwc {

struct EdgeListData {
  Vertex n = 0;
  std::vector<Edge> edges;
};

// Format: one "u v" edge per line; "#" starts a comment; blank lines are
// ignored; an optional first line "n=<count>" pins the order (otherwise it is
// max id + 1). A file with neither header nor edges is a parse error.
EdgeListData parse_edge_list(std::istream& in);
EdgeListData read_edge_list_file(const std::string& path);

// Canonical form: "n=<count>" header, then "u v" with u < v, lexicographic.
std::string format_edge_list(const Graph& g);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace btwc

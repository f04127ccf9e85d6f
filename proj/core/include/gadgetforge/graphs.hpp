#pragma once

#include <string>
#include <utility>
#include <vector>

namespace gf {

// Simple undirected 3-regular graph with a designated start vertex.
struct CubicGraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // 0-based endpoints, u < v
  int start = 0;

  void validate() const;  // simple + every degree exactly 3
  std::vector<std::vector<int>> adjacency() const;
};

// Text format: first line "V E [start]", then E lines "u v" (0-based).
CubicGraph parse_cubic_graph(const std::string& text);
std::string print_cubic_graph(const CubicGraph& g);

CubicGraph make_k4();
CubicGraph make_k33();
CubicGraph make_petersen();

}  // namespace gf

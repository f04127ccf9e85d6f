#include "gadgetforge/graphs.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gf {

void CubicGraph::validate() const {
  if (num_vertices <= 0) throw std::runtime_error("empty graph");
  if (start < 0 || start >= num_vertices)
    throw std::runtime_error("start vertex out of range");
  std::set<std::pair<int, int>> seen;
  std::vector<int> degree(static_cast<std::size_t>(num_vertices), 0);
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices)
      throw std::runtime_error("edge endpoint out of range");
    if (u == v) throw std::runtime_error("self-loop");
    auto key = std::minmax(u, v);
    if (!seen.insert({key.first, key.second}).second)
      throw std::runtime_error("multi-edge");
    ++degree[static_cast<std::size_t>(u)];
    ++degree[static_cast<std::size_t>(v)];
  }
  for (int d : degree)
    if (d != 3) throw std::runtime_error("graph is not 3-regular");
}

std::vector<std::vector<int>> CubicGraph::adjacency() const {
  std::vector<std::vector<int>> adj(static_cast<std::size_t>(num_vertices));
  for (auto [u, v] : edges) {
    adj[static_cast<std::size_t>(u)].push_back(v);
    adj[static_cast<std::size_t>(v)].push_back(u);
  }
  return adj;
}

CubicGraph parse_cubic_graph(const std::string& text) {
  std::istringstream in(text);
  CubicGraph g;
  int num_edges = 0;
  if (!(in >> g.num_vertices >> num_edges))
    throw std::runtime_error("bad graph header");
  if (!(in >> g.start)) {
    in.clear();
    g.start = 0;
  }
  for (int i = 0; i < num_edges; ++i) {
    int u, v;
    if (!(in >> u >> v)) throw std::runtime_error("truncated edge list");
    g.edges.emplace_back(std::min(u, v), std::max(u, v));
  }
  g.validate();
  return g;
}

std::string print_cubic_graph(const CubicGraph& g) {
  std::ostringstream out;
  out << g.num_vertices << ' ' << g.edges.size() << ' ' << g.start << '\n';
  for (auto [u, v] : g.edges) out << u << ' ' << v << '\n';
  return out.str();
}

CubicGraph make_k4() {
  CubicGraph g;
  g.num_vertices = 4;
  g.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  g.validate();
  return g;
}

CubicGraph make_k33() {
  CubicGraph g;
  g.num_vertices = 6;
  for (int u = 0; u < 3; ++u)
    for (int v = 3; v < 6; ++v) g.edges.emplace_back(u, v);
  g.validate();
  return g;
}

CubicGraph make_petersen() {
  CubicGraph g;
  g.num_vertices = 10;
  for (int i = 0; i < 5; ++i) {
    g.edges.emplace_back(i, (i + 1) % 5);          // outer cycle
    g.edges.emplace_back(i, i + 5);                // spokes
    g.edges.emplace_back(std::min(i + 5, (i + 2) % 5 + 5),
                         std::max(i + 5, (i + 2) % 5 + 5));  // inner star
  }
  g.validate();
  return g;
}

}  // namespace gf

#include "gadgetforge/grid.hpp"

#include <stdexcept>

namespace gf {

const char* grid_kind_name(GridKind k) {
  switch (k) {
    case GridKind::Square: return "square";
    case GridKind::Hex: return "hex";
    case GridKind::Tri: return "tri";
  }
  return "?";
}

GridKind grid_kind_from_name(const std::string& name) {
  if (name == "square") return GridKind::Square;
  if (name == "hex") return GridKind::Hex;
  if (name == "tri") return GridKind::Tri;
  throw std::runtime_error("unknown grid kind: " + name);
}

std::vector<Coord> neighbor_offsets(GridKind kind, Coord c) {
  switch (kind) {
    case GridKind::Square:
      return {{0, 1}, {1, 0}, {0, -1}, {-1, 0}};  // N E S W
    case GridKind::Hex:
      return {{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}};
    case GridKind::Tri:
      if (tri_points_up(c)) return {{1, 0}, {-1, 0}, {0, -1}};  // E W S
      return {{1, 0}, {-1, 0}, {0, 1}};                         // E W N
  }
  return {};
}

std::vector<Coord> neighbors(const GridSpec& g, Coord c) {
  if (!g.in_bounds(c)) throw std::runtime_error("neighbors: out of bounds");
  std::vector<Coord> out;
  for (Coord d : neighbor_offsets(g.kind, c)) {
    Coord n{c.x + d.x, c.y + d.y};
    if (g.in_bounds(n)) out.push_back(n);
  }
  return out;
}

int num_rays(GridKind kind) {
  switch (kind) {
    case GridKind::Square: return 4;
    case GridKind::Hex: return 6;
    case GridKind::Tri: return 3;
  }
  return 0;
}

namespace {

std::vector<Coord> walk(const GridSpec& g, Coord c, Coord step,
                        const std::function<bool(Coord)>& blocked) {
  std::vector<Coord> run;
  Coord p{c.x + step.x, c.y + step.y};
  while (g.in_bounds(p) && !blocked(p)) {
    run.push_back(p);
    p = {p.x + step.x, p.y + step.y};
  }
  return run;
}

}  // namespace

std::vector<std::vector<Coord>> ray_runs(const GridSpec& g, Coord c,
                                         const std::function<bool(Coord)>& blocked) {
  std::vector<std::vector<Coord>> runs;
  switch (g.kind) {
    case GridKind::Square:
      runs.push_back(walk(g, c, {0, 1}, blocked));
      runs.push_back(walk(g, c, {1, 0}, blocked));
      runs.push_back(walk(g, c, {0, -1}, blocked));
      runs.push_back(walk(g, c, {-1, 0}, blocked));
      break;
    case GridKind::Hex:
      for (Coord d : std::vector<Coord>{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}})
        runs.push_back(walk(g, c, d, blocked));
      break;
    case GridKind::Tri: {
      runs.push_back(walk(g, c, {1, 0}, blocked));
      runs.push_back(walk(g, c, {-1, 0}, blocked));
      std::vector<Coord> down = walk(g, c, {0, -1}, blocked);
      std::vector<Coord> column(down.rbegin(), down.rend());
      for (Coord p : walk(g, c, {0, 1}, blocked)) column.push_back(p);
      runs.push_back(std::move(column));
      break;
    }
  }
  return runs;
}

std::vector<Coord> cast_rays(const GridSpec& g, Coord c,
                             const std::function<bool(Coord)>& blocked) {
  std::vector<Coord> out;
  for (auto& run : ray_runs(g, c, blocked))
    out.insert(out.end(), run.begin(), run.end());
  return out;
}

}  // namespace gf

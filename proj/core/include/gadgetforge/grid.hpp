#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace gf {

enum class GridKind { Square, Hex, Tri };

const char* grid_kind_name(GridKind k);
GridKind grid_kind_from_name(const std::string& name);

// One coordinate type for all grids:
//  - Square: (x, y) = (col, row)
//  - Hex:    axial (q, r), pointy-top; x = q, y = r
//  - Tri:    (col, row); the cell points up iff col + row is even
struct Coord {
  int x = 0;
  int y = 0;
  auto operator<=>(const Coord&) const = default;
};

inline bool tri_points_up(Coord c) { return ((c.x + c.y) % 2 + 2) % 2 == 0; }

// Rectangular bounding region in coordinate space.
struct GridSpec {
  GridKind kind = GridKind::Square;
  int x0 = 0, y0 = 0;
  int width = 0, height = 0;

  bool in_bounds(Coord c) const {
    return c.x >= x0 && c.x < x0 + width && c.y >= y0 && c.y < y0 + height;
  }
  std::size_t index(Coord c) const {
    return static_cast<std::size_t>(c.y - y0) * static_cast<std::size_t>(width) +
           static_cast<std::size_t>(c.x - x0);
  }
  std::size_t cell_count() const {
    return static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
  }
  Coord coord_at(std::size_t i) const {
    return {x0 + static_cast<int>(i % static_cast<std::size_t>(width)),
            y0 + static_cast<int>(i / static_cast<std::size_t>(width))};
  }
};

// Edge-adjacent neighbor offsets, in the documented deterministic order:
//  - Square: N, E, S, W (clockwise from north)
//  - Hex:    E, SE, SW, W, NW, NE (clockwise from east)
//  - Tri:    E, W, then the vertical edge neighbor (S for up cells, N for
//    down cells)
std::vector<Coord> neighbor_offsets(GridKind kind, Coord c);

// In-bounds edge-adjacent cells of c, in the documented order. Throws if c
// is out of bounds.
std::vector<Coord> neighbors(const GridSpec& g, Coord c);

// Number of sight rays per cell: Square 4, Hex 6, Tri 3 (E run, W run, and
// the vertical column counted as one bidirectional line).
int num_rays(GridKind kind);

// Per-ray maximal unblocked runs from c, excluding c. Ray order: Square
// N, E, S, W; Hex E, SE, SW, W, NW, NE; Tri E, W, V (the vertical column,
// listed in ascending y). The tri column passes alternating shared edges
// and vertices; keeping it bidirectional keeps mutual visibility symmetric.
std::vector<std::vector<Coord>> ray_runs(const GridSpec& g, Coord c,
                                         const std::function<bool(Coord)>& blocked);

// Union of ray_runs.
std::vector<Coord> cast_rays(const GridSpec& g, Coord c,
                             const std::function<bool(Coord)>& blocked);

}  // namespace gf

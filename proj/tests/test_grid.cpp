#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "gadgetforge/grid.hpp"

using namespace gf;

TEST_CASE("neighbor cardinality on interior cells: 4 / 6 / 3") {
  GridSpec sq{GridKind::Square, 0, 0, 5, 5};
  CHECK(neighbors(sq, {2, 2}).size() == 4);
  GridSpec hx{GridKind::Hex, -3, -3, 7, 7};
  CHECK(neighbors(hx, {0, 0}).size() == 6);
  GridSpec tr{GridKind::Tri, 0, 0, 7, 7};
  CHECK(neighbors(tr, {3, 3}).size() == 3);
  CHECK(neighbors(tr, {2, 2}).size() == 3);
}

TEST_CASE("tri neighbors alternate orientation") {
  GridSpec tr{GridKind::Tri, 0, 0, 9, 9};
  for (Coord c : std::vector<Coord>{{4, 4}, {3, 4}, {5, 2}}) {
    bool up = tri_points_up(c);
    for (Coord n : neighbors(tr, c)) CHECK(tri_points_up(n) != up);
  }
}

TEST_CASE("tri vertical neighbor is below for up cells, above for down cells") {
  GridSpec tr{GridKind::Tri, 0, 0, 9, 9};
  Coord up{4, 4};  // 4+4 even: points up
  REQUIRE(tri_points_up(up));
  auto nu = neighbors(tr, up);
  CHECK(std::find(nu.begin(), nu.end(), Coord{4, 3}) != nu.end());
  Coord down{4, 5};
  REQUIRE(!tri_points_up(down));
  auto nd = neighbors(tr, down);
  CHECK(std::find(nd.begin(), nd.end(), Coord{4, 6}) != nd.end());
}

TEST_CASE("out-of-bounds coordinate is rejected") {
  GridSpec sq{GridKind::Square, 0, 0, 3, 3};
  CHECK_THROWS(neighbors(sq, {5, 5}));
}

TEST_CASE("ray counts per grid kind") {
  CHECK(num_rays(GridKind::Square) == 4);
  CHECK(num_rays(GridKind::Hex) == 6);
  CHECK(num_rays(GridKind::Tri) == 3);
  GridSpec hx{GridKind::Hex, -4, -4, 9, 9};
  auto rr = ray_runs(hx, {0, 0}, [](Coord) { return false; });
  CHECK(rr.size() == 6);
  GridSpec tr{GridKind::Tri, 0, 0, 9, 9};
  auto rt = ray_runs(tr, {4, 4}, [](Coord) { return false; });
  CHECK(rt.size() == 3);
}

TEST_CASE("square corridor illumination") {
  GridSpec g{GridKind::Square, 0, 0, 5, 1};
  auto none = [](Coord) { return false; };
  auto cells = cast_rays(g, {0, 0}, none);
  CHECK(cells.size() == 4);  // the other four corridor cells
}

TEST_CASE("adjacent obstacle stops a ray immediately") {
  GridSpec g{GridKind::Square, 0, 0, 5, 1};
  auto blocked = [](Coord c) { return c.x == 1; };
  auto cells = cast_rays(g, {0, 0}, blocked);
  CHECK(cells.empty());
}

TEST_CASE("hex rays match an independent per-direction walker") {
  GridSpec g{GridKind::Hex, -2, -2, 5, 5};
  std::mt19937 rng(7);
  for (int it = 0; it < 200; ++it) {
    std::set<Coord> obstacles;
    for (std::size_t i = 0; i < g.cell_count(); ++i)
      if (rng() % 3 == 0) obstacles.insert(g.coord_at(i));
    Coord c = g.coord_at(rng() % g.cell_count());
    if (obstacles.count(c)) continue;
    auto blocked = [&](Coord p) { return obstacles.count(p) > 0; };
    std::set<Coord> got;
    for (Coord p : cast_rays(g, c, blocked)) got.insert(p);
    // Naive walker, written against the six axial directions directly.
    std::set<Coord> want;
    for (Coord d : std::vector<Coord>{{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, -1}, {-1, 1}}) {
      Coord p{c.x + d.x, c.y + d.y};
      while (g.in_bounds(p) && !blocked(p)) {
        want.insert(p);
        p = {p.x + d.x, p.y + d.y};
      }
    }
    CHECK(got == want);
  }
}

TEST_CASE("ray symmetry: mutual visibility on random boards, all grids") {
  std::mt19937 rng(11);
  for (GridKind kind : {GridKind::Square, GridKind::Hex, GridKind::Tri}) {
    GridSpec g{kind, 0, 0, 6, 6};
    for (int it = 0; it < 1000; ++it) {
      std::set<Coord> obstacles;
      for (std::size_t i = 0; i < g.cell_count(); ++i)
        if (rng() % 4 == 0) obstacles.insert(g.coord_at(i));
      auto blocked = [&](Coord p) { return obstacles.count(p) > 0; };
      // Pick two random unblocked cells and check b in rays(a) <=> a in rays(b).
      Coord a = g.coord_at(rng() % g.cell_count());
      Coord b = g.coord_at(rng() % g.cell_count());
      if (obstacles.count(a) || obstacles.count(b) || a == b) continue;
      auto ra = cast_rays(g, a, blocked);
      auto rb = cast_rays(g, b, blocked);
      bool a_sees_b = std::find(ra.begin(), ra.end(), b) != ra.end();
      bool b_sees_a = std::find(rb.begin(), rb.end(), a) != rb.end();
      CHECK(a_sees_b == b_sees_a);
    }
  }
}

TEST_CASE("tri rays: row runs plus the vertical column") {
  GridSpec g{GridKind::Tri, 0, 0, 7, 7};
  auto none = [](Coord) { return false; };
  auto runs = ray_runs(g, {3, 3}, none);
  REQUIRE(runs.size() == 3);
  // East then west then column.
  CHECK(runs[0].front() == Coord{4, 3});
  CHECK(runs[1].front() == Coord{2, 3});
  for (const Coord& p : runs[2]) CHECK(p.x == 3);
  // Column cells alternate orientation along the column.
  for (std::size_t i = 0; i + 1 < runs[2].size(); ++i) {
    if (runs[2][i + 1].y == runs[2][i].y + 1)
      CHECK(tri_points_up(runs[2][i]) != tri_points_up(runs[2][i + 1]));
  }
}

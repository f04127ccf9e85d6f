#include "gadgetforge/akari.hpp"

#include <algorithm>
#include <stdexcept>

namespace gf {

AkariBoard AkariBoard::filled(const GridSpec& g, AkariCellKind fill) {
  AkariBoard b;
  b.grid = g;
  b.kind.assign(g.cell_count(), fill);
  b.clue.assign(g.cell_count(), -1);
  return b;
}

void AkariBoard::set(Coord c, AkariCellKind k, int clue_value) {
  kind[grid.index(c)] = k;
  clue[grid.index(c)] = static_cast<std::int8_t>(k == AkariCellKind::Clue ? clue_value : -1);
}

void AkariBoard::validate() const {
  if (grid.cell_count() == 0) throw std::runtime_error("empty board");
  if (kind.size() != grid.cell_count() || clue.size() != grid.cell_count())
    throw std::runtime_error("board arrays mismatch grid");
  for (std::size_t i = 0; i < kind.size(); ++i) {
    if (kind[i] == AkariCellKind::Clue) {
      Coord c = grid.coord_at(i);
      int degree = static_cast<int>(neighbors(grid, c).size());
      if (clue[i] < 0 || clue[i] > degree)
        throw std::runtime_error("clue value exceeds cell degree");
    }
  }
}

namespace {

struct Sight {
  // visible[i]: empty cells mutually visible with empty cell i.
  std::vector<std::vector<int>> visible;
  std::vector<std::vector<int>> clue_neighbors;  // per clue cell: adjacent empties
  std::vector<int> empties;                      // indices of empty cells
};

Sight build_sight(const AkariBoard& b) {
  Sight s;
  const GridSpec& g = b.grid;
  s.visible.resize(g.cell_count());
  s.clue_neighbors.resize(g.cell_count());
  auto blocked = [&](Coord c) { return b.at(c) != AkariCellKind::Empty; };
  for (std::size_t i = 0; i < g.cell_count(); ++i) {
    Coord c = g.coord_at(i);
    if (b.kind[i] == AkariCellKind::Empty) {
      s.empties.push_back(static_cast<int>(i));
      for (Coord v : cast_rays(g, c, blocked))
        s.visible[i].push_back(static_cast<int>(g.index(v)));
    } else if (b.kind[i] == AkariCellKind::Clue) {
      for (Coord n : neighbors(g, c))
        if (b.at(n) == AkariCellKind::Empty)
          s.clue_neighbors[i].push_back(static_cast<int>(g.index(n)));
    }
  }
  return s;
}

}  // namespace

AkariVerdict verify_akari(const AkariBoard& b, const LampSet& lamps) {
  b.validate();
  AkariVerdict v;
  const GridSpec& g = b.grid;
  std::vector<char> lamp(g.cell_count(), 0);
  for (Coord c : lamps) {
    if (!g.in_bounds(c) || b.at(c) != AkariCellKind::Empty) {
      v.violations.push_back({AkariViolation::Rule::LampPlacement, c});
      continue;
    }
    lamp[g.index(c)] = 1;
  }
  Sight s = build_sight(b);
  std::vector<char> lit(g.cell_count(), 0);
  for (std::size_t i = 0; i < g.cell_count(); ++i) {
    if (!lamp[i]) continue;
    for (int j : s.visible[i]) {
      lit[static_cast<std::size_t>(j)] = 1;
      if (lamp[static_cast<std::size_t>(j)] && static_cast<std::size_t>(j) > i)
        v.violations.push_back(
            {AkariViolation::Rule::MutualLight, g.coord_at(static_cast<std::size_t>(j))});
    }
  }
  for (std::size_t i = 0; i < g.cell_count(); ++i) {
    if (b.kind[i] == AkariCellKind::Clue) {
      int n = 0;
      for (int j : s.clue_neighbors[i]) n += lamp[static_cast<std::size_t>(j)];
      if (n != b.clue[i])
        v.violations.push_back({AkariViolation::Rule::ClueCount, g.coord_at(i)});
    } else if (b.kind[i] == AkariCellKind::Empty) {
      if (!lamp[i] && !lit[i])
        v.violations.push_back({AkariViolation::Rule::Unlit, g.coord_at(i)});
    }
  }
  v.ok = v.violations.empty();
  return v;
}

namespace {

enum : char { kUnknown = 0, kLamp = 1, kNoLamp = 2 };

struct SolverCtx {
  const AkariBoard& b;
  const Sight& s;
  std::vector<int> clue_cells;
};

struct State {
  std::vector<char> mark;
  std::vector<int> lit_by;      // lamps seeing this cell
  std::vector<int> clue_lamps;  // per cell (clue cells only)
  bool bad = false;
};

struct Prop {
  const SolverCtx& ctx;
  State& st;
  std::vector<int> queue_cells;  // cells needing a lighting recheck
  std::vector<int> queue_clues;

  bool forbid(int i);
  bool place(int i);

  bool recheck_clue(int ci) {
    const auto& nbrs = ctx.s.clue_neighbors[static_cast<std::size_t>(ci)];
    int want = ctx.b.clue[static_cast<std::size_t>(ci)];
    int placed = st.clue_lamps[static_cast<std::size_t>(ci)];
    int free_cells = 0;
    for (int j : nbrs)
      if (st.mark[static_cast<std::size_t>(j)] == kUnknown) ++free_cells;
    if (placed > want) return false;
    if (placed + free_cells < want) return false;
    if (placed == want) {
      for (int j : nbrs)
        if (st.mark[static_cast<std::size_t>(j)] == kUnknown)
          if (!forbid(j)) return false;
    } else if (placed + free_cells == want) {
      for (int j : nbrs)
        if (st.mark[static_cast<std::size_t>(j)] == kUnknown)
          if (!place(j)) return false;
    }
    return true;
  }

  bool recheck_cell(int i) {
    // Rule (c): an unlit cell whose only remaining lighting candidate is a
    // single cell forces that lamp.
    auto ii = static_cast<std::size_t>(i);
    if (st.mark[ii] == kLamp || st.lit_by[ii] > 0) return true;
    int cand = -1;
    int cand_count = 0;
    if (st.mark[ii] == kUnknown) {
      cand = i;
      ++cand_count;
    }
    for (int j : ctx.s.visible[ii]) {
      if (st.mark[static_cast<std::size_t>(j)] == kUnknown) {
        cand = j;
        if (++cand_count > 1) return true;
      }
    }
    if (cand_count == 0) return false;
    return place(cand);
  }

  bool drain() {
    while (!queue_clues.empty() || !queue_cells.empty()) {
      if (!queue_clues.empty()) {
        int c = queue_clues.back();
        queue_clues.pop_back();
        if (!recheck_clue(c)) return false;
        continue;
      }
      int i = queue_cells.back();
      queue_cells.pop_back();
      if (!recheck_cell(i)) return false;
    }
    return true;
  }
};

bool Prop::forbid(int i) {
  auto ii = static_cast<std::size_t>(i);
  if (st.mark[ii] == kLamp) return false;
  if (st.mark[ii] == kNoLamp) return true;
  st.mark[ii] = kNoLamp;
  // Cells this one could have lit may now be down to one candidate.
  queue_cells.push_back(i);
  for (int j : ctx.s.visible[ii]) queue_cells.push_back(j);
  Coord c = ctx.b.grid.coord_at(ii);
  for (Coord n : neighbors(ctx.b.grid, c)) {
    std::size_t ni = ctx.b.grid.index(n);
    if (ctx.b.kind[ni] == AkariCellKind::Clue)
      queue_clues.push_back(static_cast<int>(ni));
  }
  return true;
}

bool Prop::place(int i) {
  auto ii = static_cast<std::size_t>(i);
  if (st.mark[ii] == kNoLamp) return false;
  if (st.mark[ii] == kLamp) return true;
  st.mark[ii] = kLamp;
  for (int j : ctx.s.visible[ii]) {
    auto jj = static_cast<std::size_t>(j);
    if (st.mark[jj] == kLamp) return false;  // mutual illumination
    ++st.lit_by[jj];
    if (!forbid(j)) return false;
  }
  Coord c = ctx.b.grid.coord_at(ii);
  for (Coord n : neighbors(ctx.b.grid, c)) {
    std::size_t ni = ctx.b.grid.index(n);
    if (ctx.b.kind[ni] == AkariCellKind::Clue) {
      ++st.clue_lamps[ni];
      queue_clues.push_back(static_cast<int>(ni));
    }
  }
  return true;
}

struct Search {
  const SolverCtx& ctx;
  SolveMode mode;
  AkariSolveResult result;
  std::vector<LampSet>* collect = nullptr;

  bool complete(const State& st) const {
    for (int i : ctx.s.empties)
      if (st.mark[static_cast<std::size_t>(i)] == kUnknown) return false;
    return true;
  }

  LampSet lamps_of(const State& st) const {
    LampSet l;
    for (int i : ctx.s.empties)
      if (st.mark[static_cast<std::size_t>(i)] == kLamp)
        l.insert(ctx.b.grid.coord_at(static_cast<std::size_t>(i)));
    return l;
  }

  // Returns true when the search can stop (First mode, found).
  bool run(State st) {
    {
      Prop p{ctx, st, {}, {}};
      // Full initial recheck.
      for (int i : ctx.s.empties) p.queue_cells.push_back(i);
      for (int c : ctx.clue_cells) p.queue_clues.push_back(c);
      if (!p.drain()) return false;
    }
    return dfs(st);
  }

  bool dfs(State& st) {
    if (complete(st)) {
      LampSet lamps = lamps_of(st);
      // Propagation is sound; a full verify keeps the counter honest.
      if (!verify_akari(ctx.b, lamps).ok) return false;
      result.count += 1;
      if (!result.solution) result.solution = lamps;
      if (collect) collect->push_back(lamps);
      return mode == SolveMode::First;
    }
    int branch = -1;
    for (int i : ctx.s.empties)
      if (st.mark[static_cast<std::size_t>(i)] == kUnknown) {
        branch = i;
        break;
      }
    // Lamps-first, then no-lamp.
    {
      State copy = st;
      Prop p{ctx, copy, {}, {}};
      if (p.place(branch) && p.drain())
        if (dfs(copy)) return true;
    }
    {
      State copy = st;
      Prop p{ctx, copy, {}, {}};
      if (p.forbid(branch) && p.drain())
        if (dfs(copy)) return true;
    }
    return false;
  }
};

}  // namespace

AkariSolveResult solve_akari(const AkariBoard& b, SolveMode mode,
                             std::size_t guard_empty_cells) {
  b.validate();
  Sight sight = build_sight(b);
  if (sight.empties.size() > guard_empty_cells)
    throw std::runtime_error("solve_akari size guard exceeded");
  SolverCtx ctx{b, sight, {}};
  for (std::size_t i = 0; i < b.kind.size(); ++i)
    if (b.kind[i] == AkariCellKind::Clue)
      ctx.clue_cells.push_back(static_cast<int>(i));
  Search search{ctx, mode, {}, nullptr};
  State st;
  st.mark.assign(b.grid.cell_count(), kUnknown);
  // Non-empty cells can never hold lamps.
  for (std::size_t i = 0; i < b.kind.size(); ++i)
    if (b.kind[i] != AkariCellKind::Empty) st.mark[i] = kNoLamp;
  st.lit_by.assign(b.grid.cell_count(), 0);
  st.clue_lamps.assign(b.grid.cell_count(), 0);
  search.run(std::move(st));
  return search.result;
}

std::vector<LampSet> enumerate_akari_solutions(const AkariBoard& b,
                                               std::size_t limit) {
  b.validate();
  Sight sight = build_sight(b);
  SolverCtx ctx{b, sight, {}};
  for (std::size_t i = 0; i < b.kind.size(); ++i)
    if (b.kind[i] == AkariCellKind::Clue)
      ctx.clue_cells.push_back(static_cast<int>(i));
  std::vector<LampSet> out;
  Search search{ctx, SolveMode::CountAll, {}, &out};
  State st;
  st.mark.assign(b.grid.cell_count(), kUnknown);
  for (std::size_t i = 0; i < b.kind.size(); ++i)
    if (b.kind[i] != AkariCellKind::Empty) st.mark[i] = kNoLamp;
  st.lit_by.assign(b.grid.cell_count(), 0);
  st.clue_lamps.assign(b.grid.cell_count(), 0);
  search.run(std::move(st));
  if (out.size() > limit) throw std::runtime_error("enumeration limit exceeded");
  return out;
}

}  // namespace gf

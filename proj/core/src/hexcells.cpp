#include "gadgetforge/hexcells.hpp"

#include <stdexcept>

namespace gf {

HexCellsBoard HexCellsBoard::filled(const GridSpec& g, HexCellsKind fill) {
  HexCellsBoard b;
  b.grid = g;
  b.kind.assign(g.cell_count(), fill);
  b.clue.assign(g.cell_count(), -1);
  return b;
}

void HexCellsBoard::set(Coord c, HexCellsKind k, int clue_value) {
  kind[grid.index(c)] = k;
  clue[grid.index(c)] =
      static_cast<std::int8_t>(k == HexCellsKind::Clue ? clue_value : -1);
}

void HexCellsBoard::validate() const {
  if (grid.kind != GridKind::Hex)
    throw std::runtime_error("HexCells board must be hexagonal");
  if (kind.size() != grid.cell_count())
    throw std::runtime_error("board arrays mismatch grid");
  std::size_t unrevealed = 0;
  for (std::size_t i = 0; i < kind.size(); ++i) {
    if (kind[i] == HexCellsKind::Clue && (clue[i] < 0 || clue[i] > 6))
      throw std::runtime_error("clue out of range");
    if (kind[i] == HexCellsKind::Unrevealed) ++unrevealed;
  }
  if (total_bombs < 0 || static_cast<std::size_t>(total_bombs) > unrevealed)
    throw std::runtime_error("total_bombs exceeds unrevealed cells");
}

HexCellsVerdict verify_hexcells(const HexCellsBoard& b, const std::set<Coord>& bombs) {
  b.validate();
  HexCellsVerdict v;
  std::vector<char> bomb(b.grid.cell_count(), 0);
  for (Coord c : bombs) {
    if (!b.grid.in_bounds(c) || b.at(c) != HexCellsKind::Unrevealed) {
      v.bad_bombs.push_back(c);
      continue;
    }
    bomb[b.grid.index(c)] = 1;
  }
  for (std::size_t i = 0; i < b.kind.size(); ++i) {
    if (b.kind[i] != HexCellsKind::Clue) continue;
    int n = 0;
    for (Coord nb : neighbors(b.grid, b.grid.coord_at(i)))
      if (b.at(nb) == HexCellsKind::Unrevealed && bomb[b.grid.index(nb)]) ++n;
    if (n != b.clue[i]) v.bad_clues.push_back(b.grid.coord_at(i));
  }
  v.bomb_total_ok = static_cast<int>(bombs.size()) == b.total_bombs;
  v.ok = v.bad_bombs.empty() && v.bad_clues.empty() && v.bomb_total_ok;
  return v;
}

namespace {

enum : char { kUnknown = 0, kBomb = 1, kNoBomb = 2 };

struct HCSolver {
  const HexCellsBoard& b;
  SolveMode mode;
  bool ignore_total = false;
  std::vector<std::set<Coord>>* collect = nullptr;
  std::vector<int> unrevealed;               // cell indices, row-major
  std::vector<std::vector<int>> clue_nbrs;   // per clue cell
  std::vector<std::vector<int>> cell_clues;  // per unrevealed cell
  HexCellsSolveResult result;

  explicit HCSolver(const HexCellsBoard& board, SolveMode m) : b(board), mode(m) {
    clue_nbrs.resize(b.grid.cell_count());
    cell_clues.resize(b.grid.cell_count());
    for (std::size_t i = 0; i < b.kind.size(); ++i) {
      Coord c = b.grid.coord_at(i);
      if (b.kind[i] == HexCellsKind::Unrevealed)
        unrevealed.push_back(static_cast<int>(i));
      else if (b.kind[i] == HexCellsKind::Clue)
        for (Coord nb : neighbors(b.grid, c))
          if (b.at(nb) == HexCellsKind::Unrevealed) {
            clue_nbrs[i].push_back(static_cast<int>(b.grid.index(nb)));
            cell_clues[b.grid.index(nb)].push_back(static_cast<int>(i));
          }
    }
  }

  struct State {
    std::vector<char> mark;
    int bombs = 0;
    int undecided = 0;
  };

  bool set_mark(State& st, int cell, char m, std::vector<int>& dirty_clues) {
    char& cur = st.mark[static_cast<std::size_t>(cell)];
    if (cur == m) return true;
    if (cur != kUnknown) return false;
    cur = m;
    --st.undecided;
    if (m == kBomb) ++st.bombs;
    for (int cl : cell_clues[static_cast<std::size_t>(cell)]) dirty_clues.push_back(cl);
    return true;
  }

  bool propagate(State& st, std::vector<int> dirty) {
    while (!dirty.empty()) {
      int ci = dirty.back();
      dirty.pop_back();
      int want = b.clue[static_cast<std::size_t>(ci)];
      int placed = 0, open = 0;
      for (int j : clue_nbrs[static_cast<std::size_t>(ci)]) {
        char m = st.mark[static_cast<std::size_t>(j)];
        if (m == kBomb) ++placed;
        if (m == kUnknown) ++open;
      }
      if (placed > want || placed + open < want) return false;
      if (open == 0) continue;
      if (placed == want) {
        for (int j : clue_nbrs[static_cast<std::size_t>(ci)])
          if (st.mark[static_cast<std::size_t>(j)] == kUnknown)
            if (!set_mark(st, j, kNoBomb, dirty)) return false;
      } else if (placed + open == want) {
        for (int j : clue_nbrs[static_cast<std::size_t>(ci)])
          if (st.mark[static_cast<std::size_t>(j)] == kUnknown)
            if (!set_mark(st, j, kBomb, dirty)) return false;
      }
    }
    if (!ignore_total) {
      if (st.bombs > b.total_bombs) return false;
      if (st.bombs + st.undecided < b.total_bombs) return false;
    }
    return true;
  }

  std::set<Coord> bombs_of(const State& st) const {
    std::set<Coord> s;
    for (int i : unrevealed)
      if (st.mark[static_cast<std::size_t>(i)] == kBomb)
        s.insert(b.grid.coord_at(static_cast<std::size_t>(i)));
    return s;
  }

  bool dfs(State& st) {
    if (st.undecided == 0) {
      if (!ignore_total && st.bombs != b.total_bombs) return false;
      auto bombs = bombs_of(st);
      if (!ignore_total && !verify_hexcells(b, bombs).ok) return false;
      if (ignore_total) {
        HexCellsBoard adjusted = b;
        adjusted.total_bombs = static_cast<int>(bombs.size());
        if (!verify_hexcells(adjusted, bombs).ok) return false;
      }
      result.count += 1;
      if (!result.solution) result.solution = bombs;
      if (collect) collect->push_back(bombs);
      return mode == SolveMode::First;
    }
    int branch = -1;
    for (int i : unrevealed)
      if (st.mark[static_cast<std::size_t>(i)] == kUnknown) {
        branch = i;
        break;
      }
    for (char choice : {kBomb, kNoBomb}) {
      State copy = st;
      std::vector<int> dirty;
      if (!set_mark(copy, branch, choice, dirty)) continue;
      if (!propagate(copy, std::move(dirty))) continue;
      if (dfs(copy)) return true;
    }
    return false;
  }

  void run() {
    State st;
    st.mark.assign(b.grid.cell_count(), kNoBomb);
    for (int i : unrevealed) st.mark[static_cast<std::size_t>(i)] = kUnknown;
    st.undecided = static_cast<int>(unrevealed.size());
    std::vector<int> dirty;
    for (std::size_t i = 0; i < b.kind.size(); ++i)
      if (b.kind[i] == HexCellsKind::Clue) dirty.push_back(static_cast<int>(i));
    if (!propagate(st, std::move(dirty))) return;
    dfs(st);
  }
};

}  // namespace

HexCellsSolveResult solve_hexcells(const HexCellsBoard& b, SolveMode mode,
                                   std::size_t guard_cells) {
  b.validate();
  HCSolver solver(b, mode);
  if (solver.unrevealed.size() > guard_cells)
    throw std::runtime_error("solve_hexcells size guard exceeded");
  solver.run();
  return solver.result;
}

std::vector<std::set<Coord>> enumerate_hexcells_solutions(
    const HexCellsBoard& b, bool ignore_total, std::size_t limit) {
  HexCellsBoard board = b;
  if (ignore_total) board.total_bombs = 0;  // validated but unused
  board.validate();
  HCSolver solver(board, SolveMode::CountAll);
  solver.ignore_total = ignore_total;
  std::vector<std::set<Coord>> out;
  solver.collect = &out;
  solver.run();
  if (out.size() > limit) throw std::runtime_error("enumeration limit exceeded");
  return out;
}

}  // namespace gf

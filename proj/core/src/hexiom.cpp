#include "gadgetforge/hexiom.hpp"

#include <algorithm>
#include <stdexcept>

namespace gf {

HexiomBoard HexiomBoard::filled(const GridSpec& g, HexiomKind fill) {
  HexiomBoard b;
  b.grid = g;
  b.kind.assign(g.cell_count(), fill);
  b.fixed_number.assign(g.cell_count(), -1);
  return b;
}

void HexiomBoard::set(Coord c, HexiomKind k, int number) {
  kind[grid.index(c)] = k;
  fixed_number[grid.index(c)] =
      static_cast<std::int8_t>(k == HexiomKind::Fixed ? number : -1);
}

void HexiomBoard::validate() const {
  if (grid.kind != GridKind::Hex)
    throw std::runtime_error("Hexiom board must be hexagonal");
  if (kind.size() != grid.cell_count())
    throw std::runtime_error("board arrays mismatch grid");
  std::size_t slots = 0;
  for (std::size_t i = 0; i < kind.size(); ++i) {
    if (kind[i] == HexiomKind::Fixed && (fixed_number[i] < 0 || fixed_number[i] > 6))
      throw std::runtime_error("fixed number out of range");
    if (kind[i] == HexiomKind::Slot) ++slots;
  }
  if (hand.size() > slots) throw std::runtime_error("hand larger than slot count");
  for (int v : hand)
    if (v < 0 || v > 6) throw std::runtime_error("hand piece out of range");
}

HexiomVerdict verify_hexiom(const HexiomBoard& b, const HexiomPlacement& p) {
  b.validate();
  HexiomVerdict v;
  std::vector<int> value(b.grid.cell_count(), -1);  // number of each numbered cell
  for (std::size_t i = 0; i < b.kind.size(); ++i)
    if (b.kind[i] == HexiomKind::Fixed) value[i] = b.fixed_number[i];
  std::vector<int> used(7, 0);
  for (const auto& [c, num] : p) {
    if (!b.grid.in_bounds(c) || b.at(c) != HexiomKind::Slot || num < 0 || num > 6) {
      v.slots_ok = false;
      continue;
    }
    value[b.grid.index(c)] = num;
    ++used[static_cast<std::size_t>(num)];
  }
  std::vector<int> have(7, 0);
  for (int h : b.hand) ++have[static_cast<std::size_t>(h)];
  v.hand_ok = (used == have);
  for (std::size_t i = 0; i < b.kind.size(); ++i) {
    if (value[i] < 0) continue;
    int n = 0;
    for (Coord nb : neighbors(b.grid, b.grid.coord_at(i)))
      if (value[b.grid.index(nb)] >= 0) ++n;
    if (n != value[i]) v.bad_cells.push_back(b.grid.coord_at(i));
  }
  v.ok = v.bad_cells.empty() && v.hand_ok && v.slots_ok;
  return v;
}

HexiomParity hexiom_parity_sum(const HexiomBoard& b) {
  HexiomParity p;
  for (std::size_t i = 0; i < b.kind.size(); ++i)
    if (b.kind[i] == HexiomKind::Fixed) p.total += b.fixed_number[i];
  for (int h : b.hand) p.total += h;
  p.even = (p.total % 2) == 0;
  return p;
}

namespace {

enum : char { kUndec = 0, kEmpty = 1, kOcc = 2 };

struct HXSolver {
  const HexiomBoard& b;
  SolveMode mode;
  bool pool_mode = false;
  std::vector<HexiomPlacement>* collect = nullptr;
  std::vector<int> slots;                     // slot cell indices, row-major
  std::vector<std::vector<int>> adj_slots;    // per cell: adjacent slot cells
  std::vector<std::vector<int>> adj_numbered; // per cell: adjacent cells that can be numbered (slots+fixed)
  HexiomSolveResult result;

  explicit HXSolver(const HexiomBoard& board, SolveMode m) : b(board), mode(m) {
    adj_slots.resize(b.grid.cell_count());
    adj_numbered.resize(b.grid.cell_count());
    for (std::size_t i = 0; i < b.kind.size(); ++i) {
      if (b.kind[i] == HexiomKind::Slot) slots.push_back(static_cast<int>(i));
      for (Coord nb : neighbors(b.grid, b.grid.coord_at(i))) {
        std::size_t j = b.grid.index(nb);
        if (b.kind[j] == HexiomKind::Slot) adj_slots[i].push_back(static_cast<int>(j));
        if (b.kind[j] != HexiomKind::Wall) adj_numbered[i].push_back(static_cast<int>(j));
      }
    }
  }

  struct State {
    std::vector<char> occ;      // per cell, slots only meaningful
    std::vector<signed char> val;  // per cell; fixed numbers prefilled
    std::vector<signed char> occ_adj, undec_adj;
    std::vector<int> remaining = std::vector<int>(7, 0);
    int remaining_total = 0;
    int undecided_slots = 0;   // slots with occ == kUndec
    int valueless_occ = 0;     // slots occupied but without a value yet
  };

  bool mark_empty(State& st, int s, std::vector<int>& dirty) {
    char& cur = st.occ[static_cast<std::size_t>(s)];
    if (cur == kEmpty) return true;
    if (cur != kUndec) return false;
    cur = kEmpty;
    --st.undecided_slots;
    for (int t : adj_numbered[static_cast<std::size_t>(s)]) {
      --st.undec_adj[static_cast<std::size_t>(t)];
      dirty.push_back(t);
    }
    return true;
  }

  bool mark_occ(State& st, int s, std::vector<int>& dirty) {
    char& cur = st.occ[static_cast<std::size_t>(s)];
    if (cur == kOcc) return true;
    if (cur != kUndec) return false;
    cur = kOcc;
    --st.undecided_slots;
    ++st.valueless_occ;
    for (int t : adj_numbered[static_cast<std::size_t>(s)]) {
      --st.undec_adj[static_cast<std::size_t>(t)];
      ++st.occ_adj[static_cast<std::size_t>(t)];
      dirty.push_back(t);
    }
    dirty.push_back(s);
    return true;
  }

  bool assign_value(State& st, int s, int v, std::vector<int>& dirty) {
    if (!pool_mode && st.remaining[static_cast<std::size_t>(v)] <= 0) return false;
    if (st.occ[static_cast<std::size_t>(s)] == kEmpty) return false;
    if (st.occ[static_cast<std::size_t>(s)] == kUndec)
      if (!mark_occ(st, s, dirty)) return false;
    if (st.val[static_cast<std::size_t>(s)] >= 0) return false;
    st.val[static_cast<std::size_t>(s)] = static_cast<signed char>(v);
    if (!pool_mode) {
      --st.remaining[static_cast<std::size_t>(v)];
      --st.remaining_total;
    }
    --st.valueless_occ;
    dirty.push_back(s);
    return true;
  }

  bool propagate(State& st, std::vector<int> dirty) {
    while (!dirty.empty()) {
      int u = dirty.back();
      dirty.pop_back();
      auto uu = static_cast<std::size_t>(u);
      if (b.kind[uu] == HexiomKind::Slot && st.occ[uu] != kOcc) continue;
      int n = st.val[uu];
      if (n < 0) continue;  // occupied slot without a value yet
      int placed = st.occ_adj[uu];
      int open = st.undec_adj[uu];
      if (placed > n || placed + open < n) return false;
      if (open == 0) continue;
      if (placed == n) {
        for (int s2 : adj_slots[uu])
          if (st.occ[static_cast<std::size_t>(s2)] == kUndec)
            if (!mark_empty(st, s2, dirty)) return false;
      } else if (placed + open == n) {
        for (int s2 : adj_slots[uu])
          if (st.occ[static_cast<std::size_t>(s2)] == kUndec)
            if (!mark_occ(st, s2, dirty)) return false;
      }
    }
    // Hand budget: every remaining piece needs a slot; every valueless
    // occupied slot needs a piece.
    if (!pool_mode) {
      if (st.remaining_total > st.undecided_slots + st.valueless_occ) return false;
      if (st.valueless_occ > st.remaining_total) return false;
    }
    return true;
  }

  HexiomPlacement placement_of(const State& st) const {
    HexiomPlacement p;
    for (int s : slots)
      if (st.occ[static_cast<std::size_t>(s)] == kOcc)
        p[b.grid.coord_at(static_cast<std::size_t>(s))] =
            st.val[static_cast<std::size_t>(s)];
    return p;
  }

  bool dfs(State& st) {
    // Value-less occupied slots take priority.
    int target = -1;
    bool value_branch = false;
    for (int s : slots)
      if (st.occ[static_cast<std::size_t>(s)] == kOcc &&
          st.val[static_cast<std::size_t>(s)] < 0) {
        target = s;
        value_branch = true;
        break;
      }
    if (target < 0)
      for (int s : slots)
        if (st.occ[static_cast<std::size_t>(s)] == kUndec) {
          target = s;
          break;
        }
    if (target < 0) {
      if (!pool_mode && st.remaining_total != 0) return false;
      auto p = placement_of(st);
      if (pool_mode) {
        HexiomBoard adjusted = b;
        adjusted.hand.clear();
        for (auto& [c, num] : p) {
          (void)c;
          adjusted.hand.push_back(num);
        }
        if (!verify_hexiom(adjusted, p).ok) return false;
      } else {
        if (!verify_hexiom(b, p).ok) return false;
      }
      result.count += 1;
      if (!result.solution) result.solution = p;
      if (collect) collect->push_back(p);
      return mode == SolveMode::First;
    }
    for (int v = 0; v <= 6; ++v) {
      if (!pool_mode && st.remaining[static_cast<std::size_t>(v)] <= 0) continue;
      State copy = st;
      std::vector<int> dirty;
      if (!assign_value(copy, target, v, dirty)) continue;
      if (!propagate(copy, std::move(dirty))) continue;
      if (dfs(copy)) return true;
    }
    if (!value_branch) {
      State copy = st;
      std::vector<int> dirty;
      if (mark_empty(copy, target, dirty) && propagate(copy, std::move(dirty)))
        if (dfs(copy)) return true;
    }
    return false;
  }

  void run() {
    State st;
    st.occ.assign(b.grid.cell_count(), kEmpty);
    st.val.assign(b.grid.cell_count(), -1);
    st.occ_adj.assign(b.grid.cell_count(), 0);
    st.undec_adj.assign(b.grid.cell_count(), 0);
    for (int s : slots) st.occ[static_cast<std::size_t>(s)] = kUndec;
    st.undecided_slots = static_cast<int>(slots.size());
    for (int h : b.hand) {
      ++st.remaining[static_cast<std::size_t>(h)];
      ++st.remaining_total;
    }
    std::vector<int> dirty;
    for (std::size_t i = 0; i < b.kind.size(); ++i) {
      if (b.kind[i] == HexiomKind::Fixed) {
        st.val[i] = b.fixed_number[i];
        dirty.push_back(static_cast<int>(i));
      }
    }
    for (std::size_t i = 0; i < b.kind.size(); ++i) {
      int cnt = 0;
      for (int s2 : adj_slots[i])
        if (st.occ[static_cast<std::size_t>(s2)] == kUndec) ++cnt;
      st.undec_adj[i] = static_cast<signed char>(cnt);
      int occ = 0;
      for (int t : adj_numbered[i])
        if (b.kind[static_cast<std::size_t>(t)] == HexiomKind::Fixed) ++occ;
      st.occ_adj[i] = static_cast<signed char>(occ);
    }
    if (!propagate(st, std::move(dirty))) return;
    dfs(st);
  }
};

}  // namespace

HexiomSolveResult solve_hexiom(const HexiomBoard& b, SolveMode mode,
                               std::size_t guard_cells) {
  b.validate();
  HXSolver solver(b, mode);
  if (solver.slots.size() > guard_cells)
    throw std::runtime_error("solve_hexiom size guard exceeded");
  solver.run();
  return solver.result;
}

std::vector<HexiomPlacement> enumerate_hexiom_pool(const HexiomBoard& b,
                                                   std::size_t limit) {
  b.validate();
  HXSolver solver(b, SolveMode::CountAll);
  solver.pool_mode = true;
  std::vector<HexiomPlacement> out;
  solver.collect = &out;
  solver.run();
  if (out.size() > limit) throw std::runtime_error("enumeration limit exceeded");
  return out;
}

}  // namespace gf

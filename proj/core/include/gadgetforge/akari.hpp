#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gadgetforge/grid.hpp"

namespace gf {

enum class AkariCellKind : std::uint8_t { Empty, Obstacle, Clue };

struct AkariBoard {
  GridSpec grid;
  std::vector<AkariCellKind> kind;  // grid.cell_count() entries
  std::vector<std::int8_t> clue;    // valid where kind == Clue

  static AkariBoard filled(const GridSpec& g, AkariCellKind fill);
  AkariCellKind at(Coord c) const { return kind[grid.index(c)]; }
  void set(Coord c, AkariCellKind k, int clue_value = -1);
  void validate() const;  // clue values bounded by cell degree; nonempty
};

using LampSet = std::set<Coord>;

struct AkariViolation {
  enum class Rule { LampPlacement, ClueCount, MutualLight, Unlit };
  Rule rule;
  Coord where;
};

struct AkariVerdict {
  bool ok = false;
  std::vector<AkariViolation> violations;
};

// Checks the three rule families: every Clue(n) has exactly n edge-adjacent
// lamps, no two lamps illuminate each other, every empty cell is lit.
// Lamps on non-empty cells are reported as LampPlacement violations.
AkariVerdict verify_akari(const AkariBoard& b, const LampSet& lamps);

enum class SolveMode { First, CountAll };

struct AkariSolveResult {
  std::optional<LampSet> solution;  // first solution found (if any)
  std::uint64_t count = 0;          // exact when mode == CountAll
};

// Propagation + backtracking solver; CountAll counts exactly. Throws when
// the number of empty cells exceeds the guard.
AkariSolveResult solve_akari(const AkariBoard& b, SolveMode mode,
                             std::size_t guard_empty_cells = 50000);

// Every solution, in deterministic search order (for gadget enumeration
// and small fixtures).
std::vector<LampSet> enumerate_akari_solutions(const AkariBoard& b,
                                               std::size_t limit = 100000);

}  // namespace gf

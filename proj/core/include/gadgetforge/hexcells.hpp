#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "gadgetforge/akari.hpp"  // SolveMode
#include "gadgetforge/grid.hpp"

namespace gf {

enum class HexCellsKind : std::uint8_t { Unrevealed, Clue, Wall };

// HexCells-Consistency board: revealed clue cells constrain adjacent bombs;
// the total number of bombs is fixed and known.
struct HexCellsBoard {
  GridSpec grid;  // kind == Hex
  std::vector<HexCellsKind> kind;
  std::vector<std::int8_t> clue;  // valid where kind == Clue
  int total_bombs = 0;

  static HexCellsBoard filled(const GridSpec& g, HexCellsKind fill);
  HexCellsKind at(Coord c) const { return kind[grid.index(c)]; }
  void set(Coord c, HexCellsKind k, int clue_value = -1);
  void validate() const;
};

struct HexCellsVerdict {
  bool ok = false;
  std::vector<Coord> bad_clues;     // clue cells with wrong bomb counts
  std::vector<Coord> bad_bombs;     // bombs on non-unrevealed cells
  bool bomb_total_ok = true;
};

HexCellsVerdict verify_hexcells(const HexCellsBoard& b, const std::set<Coord>& bombs);

struct HexCellsSolveResult {
  std::optional<std::set<Coord>> solution;
  std::uint64_t count = 0;
};

HexCellsSolveResult solve_hexcells(const HexCellsBoard& b, SolveMode mode,
                                   std::size_t guard_cells = 50000);

// Every clue-consistent bomb placement; when ignore_total is set the fixed
// bomb budget is not enforced (gadget enumeration works per-footprint).
std::vector<std::set<Coord>> enumerate_hexcells_solutions(
    const HexCellsBoard& b, bool ignore_total, std::size_t limit = 100000);

}  // namespace gf

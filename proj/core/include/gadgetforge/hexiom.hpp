#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "gadgetforge/akari.hpp"  // SolveMode
#include "gadgetforge/grid.hpp"

namespace gf {

enum class HexiomKind : std::uint8_t { Slot, Fixed, Wall };

// Hexiom board: fixed numbered pieces plus a hand of movable numbered
// pieces to place on the empty slots. Every numbered cell (fixed or
// placed) must have exactly its number of numbered neighbors; walls and
// empty slots do not count.
struct HexiomBoard {
  GridSpec grid;  // kind == Hex
  std::vector<HexiomKind> kind;
  std::vector<std::int8_t> fixed_number;  // valid where kind == Fixed
  std::vector<int> hand;                  // multiset of piece numbers (0..6)

  static HexiomBoard filled(const GridSpec& g, HexiomKind fill);
  HexiomKind at(Coord c) const { return kind[grid.index(c)]; }
  void set(Coord c, HexiomKind k, int number = -1);
  void validate() const;
};

using HexiomPlacement = std::map<Coord, int>;  // slot -> piece number

struct HexiomVerdict {
  bool ok = false;
  std::vector<Coord> bad_cells;  // numbered cells with wrong neighbor counts
  bool hand_ok = true;           // placement uses exactly the hand multiset
  bool slots_ok = true;          // pieces only on slots, one each
};

HexiomVerdict verify_hexiom(const HexiomBoard& b, const HexiomPlacement& p);

// Sum of all numbers over fixed pieces and hand; any valid complete
// placement must make the global numbered-cell sum even (handshake).
struct HexiomParity {
  long long total = 0;
  bool even = true;
};
HexiomParity hexiom_parity_sum(const HexiomBoard& b);

struct HexiomSolveResult {
  std::optional<HexiomPlacement> solution;
  std::uint64_t count = 0;
};

HexiomSolveResult solve_hexiom(const HexiomBoard& b, SolveMode mode,
                               std::size_t guard_cells = 20000);

// Every rule-valid filling with pieces drawn from an unlimited pool (the
// hand is ignored); used by gadget-footprint enumeration.
std::vector<HexiomPlacement> enumerate_hexiom_pool(const HexiomBoard& b,
                                                   std::size_t limit = 100000);

}  // namespace gf

#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "gadgetforge/grid.hpp"

namespace gf {

enum class Target { AkariSquare, AkariHex, AkariTri, HexCells, Hexiom };

const char* target_name(Target t);
Target target_from_name(const std::string& name);
GridKind target_grid(Target t);

// Cell contents a template stamps onto a board. The three games share the
// same alphabet: a free cell (lamp/bomb/piece location), a blocker, and a
// numeric constraint (clue / revealed count / fixed piece).
inline constexpr int kFreeCell = -2;
inline constexpr int kBlockCell = -1;  // values >= 0 are constraint numbers

// How a port couples to its neighbor template.
//  - PairCell (Akari targets): `cell` is this template's boundary corridor
//    cell; the neighbor's port cell abuts at cell+dir, the two forming a
//    two-cell corridor. Signal true <=> the lamp sits at the upstream end.
//  - ChainCell (HexCells/Hexiom input): `cell` is this template's first
//    free chain cell; the upstream template's trailing coupler clue sits
//    at cell+dir. Signal true <=> bomb/piece on the first-of-pair cell.
//  - ChainExpect (HexCells/Hexiom output): `cell` is the *external*
//    position where the downstream template's first chain cell must sit;
//    dir points onward.
//  - ChainJunction (HexCells/Hexiom input via an upstream coupler that
//    also watches this template's slack cells): `cell` is the external
//    expected position of the upstream trailing coupler; dir points toward
//    the upstream body.
enum class PortFlavor { PairCell, ChainCell, ChainExpect, ChainJunction };

struct GadgetPort {
  std::string name;
  Coord cell;
  Coord dir;
  bool is_input = true;
  PortFlavor flavor = PortFlavor::PairCell;
};

struct GadgetTemplate {
  Target target = Target::AkariSquare;
  std::string name;
  std::map<Coord, int> cells;
  std::vector<GadgetPort> ports;
  // behavior[p] = set of valid output patterns when the inputs are clamped
  // to pattern p (bit k = k-th input port). Empty set = no completion.
  std::vector<std::set<unsigned>> behavior;
  // Hexiom balance entry: numbers on fixed cells / movable pieces added to
  // the hand.
  std::vector<int> balance_fixed;
  std::vector<int> balance_free;

  int num_inputs() const;
  int num_outputs() const;
  const GadgetPort& input(int k) const;
  const GadgetPort& output(int k) const;
};

// Catalog of templates the reduction needs for a target; names are stable.
const std::vector<GadgetTemplate>& catalog(Target target);
const GadgetTemplate& find_template(Target target, const std::string& name);

// Double-NOT composite: identity behavior, length 4 against the wire's
// period 3, shifting chain alignment by one cell per application.
GadgetTemplate parity_shift_pair(Target target);  // HexCells or Hexiom

// Exhaustive enumeration of rule-valid completions with the inputs clamped
// per the signal convention and the boundary sealed. Hexiom runs with an
// unlimited piece pool; the hand accounting is the compiler's job.
struct GadgetEnumResult {
  std::vector<unsigned> outputs;  // one entry per completion
  std::set<unsigned> output_set;
  std::size_t completions() const { return outputs.size(); }
  // Pieces used per completion (Hexiom only), sorted.
  std::vector<std::vector<int>> used_pieces;
};
GadgetEnumResult enumerate_gadget(const GadgetTemplate& t, unsigned input_bits);

// Grid symmetries. Square: rot in 0..3 (90-degree steps) and mirror.
// Hex: rot in 0..5 (60-degree steps) and mirror. Tri: rot in {0, 1}
// (identity / 180 degrees) and mirror; half of the tri transforms flip
// cell orientation, which the affine form handles.
struct GridTransform {
  int rot = 0;
  bool mirror = false;
};

Coord transform_cell(GridKind kind, const GridTransform& tr, Coord c);
Coord transform_dir(GridKind kind, const GridTransform& tr, Coord d);
GadgetTemplate transform_template(const GadgetTemplate& t, const GridTransform& tr);

// JSON dump of a catalog (documentation + golden tests).
std::string catalog_json(Target target);

}  // namespace gf

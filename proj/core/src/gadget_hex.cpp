#include "gadgetforge/gadget.hpp"

// Hexagonal Akari catalog, axial coordinates, chains flowing NW (-r).
// The NOT inverts through a 2-clue flanked by two side cells; the negated
// fan-out splits through a center 1-clue; the OR reads both inputs at a
// shared below-cell next to its 2-clue.

namespace gf {

namespace {

constexpr int F = kFreeCell;

std::set<unsigned> S(std::initializer_list<unsigned> v) { return {v}; }

GadgetTemplate base(const std::string& name) {
  GadgetTemplate t;
  t.target = Target::AkariHex;
  t.name = name;
  return t;
}

GadgetTemplate make_select() {
  auto t = base("SELECT");
  t.cells = {{{0, 0}, F}};
  t.ports = {{"out", {0, 0}, {0, -1}, false, PortFlavor::PairCell}};
  t.behavior = {S({0u, 1u})};
  return t;
}

GadgetTemplate make_wire() {
  auto t = base("WIRE");
  t.cells = {{{0, 0}, F}, {{0, -1}, 1}, {{0, -2}, F}};
  t.ports = {{"in", {0, 0}, {0, 1}, true, PortFlavor::PairCell},
             {"out", {0, -2}, {0, -1}, false, PortFlavor::PairCell}};
  t.behavior = {S({0u}), S({1u})};
  return t;
}

GadgetTemplate make_not() {
  // 2-clue between the input and output cells; two side cells next to the
  // 2-clue take the lamps when the input arrives lit.
  auto t = base("NOT");
  t.cells = {{{0, 1}, F},   // input cell (below)
             {{0, 0}, 2},   // the 2-clue
             {{1, 0}, F},   // east side cell
             {{-1, 1}, F},  // southwest side cell
             {{0, -1}, F}}; // output cell (above)
  t.ports = {{"in", {0, 1}, {0, 1}, true, PortFlavor::PairCell},
             {"out", {0, -1}, {0, -1}, false, PortFlavor::PairCell}};
  t.behavior = {S({1u}), S({0u})};
  return t;
}

GadgetTemplate make_nfanout() {
  // Center 1-clue; a lamp above it seals both side 1-clues (false
  // outputs), a lamp on the input cell pushes lamps onto both output
  // corridors instead.
  auto t = base("NFANOUT");
  t.cells = {{{0, 1}, F},    // input cell
             {{0, 0}, 1},    // center 1-clue
             {{0, -1}, F},   // cell above the center
             {{-1, 0}, 1},   // west side 1-clue
             {{1, -1}, 1},   // northeast side 1-clue
             {{-1, -1}, F},  // west output cell
             {{1, -2}, F}};  // northeast output cell
  t.ports = {{"in", {0, 1}, {0, 1}, true, PortFlavor::PairCell},
             {"out1", {-1, -1}, {0, -1}, false, PortFlavor::PairCell},
             {"out2", {1, -2}, {0, -1}, false, PortFlavor::PairCell}};
  t.behavior = {S({3u}), S({0u})};
  return t;
}

GadgetTemplate make_or() {
  // Inputs arrive on two different axes; the below-cell sees both input
  // cells and fills the 2-clue exactly when both arrive dark.
  auto t = base("OR");
  t.cells = {{{0, 0}, 2},    // the 2-clue
             {{-1, 1}, F},   // input 1 cell (southwest)
             {{1, 0}, F},    // input 2 cell (east)
             {{0, 1}, F},    // below-cell seeing both inputs
             {{0, -1}, F}};  // output cell
  t.ports = {{"in1", {-1, 1}, {-1, 1}, true, PortFlavor::PairCell},
             {"in2", {1, 0}, {1, 0}, true, PortFlavor::PairCell},
             {"out", {0, -1}, {0, -1}, false, PortFlavor::PairCell}};
  t.behavior = {S({0u}), S({1u}), S({1u}), S({1u})};
  return t;
}

GadgetTemplate make_turn60() {
  // NW inflow turning to NE outflow.
  auto t = base("TURN60");
  t.cells = {{{0, 0}, F},  {{0, -1}, 1}, {{0, -2}, F},
             {{1, -3}, F}, {{2, -4}, 1}, {{3, -5}, F}};
  t.ports = {{"in", {0, 0}, {0, 1}, true, PortFlavor::PairCell},
             {"out", {3, -5}, {1, -1}, false, PortFlavor::PairCell}};
  t.behavior = {S({0u}), S({1u})};
  return t;
}

GadgetTemplate make_turn120() {
  // NW inflow turning to E outflow.
  auto t = base("TURN120");
  t.cells = {{{0, 0}, F},  {{0, -1}, 1}, {{0, -2}, F},
             {{1, -2}, F}, {{2, -2}, 1}, {{3, -2}, F}};
  t.ports = {{"in", {0, 0}, {0, 1}, true, PortFlavor::PairCell},
             {"out", {3, -2}, {1, 0}, false, PortFlavor::PairCell}};
  t.behavior = {S({0u}), S({1u})};
  return t;
}

GadgetTemplate make_cap() {
  auto t = base("CAP");
  t.cells = {{{0, 0}, F}, {{0, -1}, 0}};
  t.ports = {{"in", {0, 0}, {0, 1}, true, PortFlavor::PairCell}};
  t.behavior = {{}, S({0u})};
  return t;
}

GadgetTemplate make_term() {
  auto t = base("TERM");
  t.cells = {{{0, 0}, F}};
  t.ports = {{"in", {0, 0}, {0, 1}, true, PortFlavor::PairCell}};
  t.behavior = {S({0u}), S({0u})};
  return t;
}

}  // namespace

const std::vector<GadgetTemplate>& catalog_hex() {
  static const std::vector<GadgetTemplate> cat = {
      make_select(), make_wire(),   make_turn60(), make_turn120(),
      make_not(),    make_nfanout(), make_or(),    make_cap(),
      make_term()};
  return cat;
}

}  // namespace gf

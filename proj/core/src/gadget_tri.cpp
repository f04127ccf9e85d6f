#include "gadgetforge/gadget.hpp"

// Triangular Akari catalog. Corridors run along rows; the vertical column
// is the third sight line. Templates are parity-locked: anchors must have
// an even coordinate sum so each cell keeps its orientation.

namespace gf {

namespace {

constexpr int F = kFreeCell;

std::set<unsigned> S(std::initializer_list<unsigned> v) { return {v}; }

GadgetTemplate base(const std::string& name) {
  GadgetTemplate t;
  t.target = Target::AkariTri;
  t.name = name;
  return t;
}

GadgetTemplate make_select() {
  auto t = base("SELECT");
  t.cells = {{{0, 0}, F}};
  t.ports = {{"out", {0, 0}, {1, 0}, false, PortFlavor::PairCell}};
  t.behavior = {S({0u, 1u})};
  return t;
}

GadgetTemplate make_wire() {
  auto t = base("WIRE");
  t.cells = {{{0, 0}, F}, {{1, 0}, 1}, {{2, 0}, F}};
  t.ports = {{"in", {0, 0}, {-1, 0}, true, PortFlavor::PairCell},
             {"out", {2, 0}, {1, 0}, false, PortFlavor::PairCell}};
  t.behavior = {S({0u}), S({1u})};
  return t;
}

GadgetTemplate make_not() {
  // Two 1-clues around a middle cell whose window hangs below it.
  auto t = base("NOT");
  t.cells = {{{0, 0}, F}, {{1, 0}, 1}, {{2, 0}, F},
             {{2, -1}, F},  // window below the middle (up) cell
             {{3, 0}, 1},  {{4, 0}, F}};
  t.ports = {{"in", {0, 0}, {-1, 0}, true, PortFlavor::PairCell},
             {"out", {4, 0}, {1, 0}, false, PortFlavor::PairCell}};
  t.behavior = {S({1u}), S({0u})};
  return t;
}

GadgetTemplate make_turn() {
  // East inflow dropping one row and reversing to west outflow.
  auto t = base("TURN");
  t.cells = {{{0, 0}, F},   {{1, 0}, 1}, {{2, 0}, F},
             {{2, -1}, F},  // column pair below the corner cell
             {{1, -1}, 1},  {{0, -1}, F}};
  t.ports = {{"in", {0, 0}, {-1, 0}, true, PortFlavor::PairCell},
             {"out", {0, -1}, {-1, 0}, false, PortFlavor::PairCell}};
  t.behavior = {S({0u}), S({1u})};
  return t;
}

GadgetTemplate make_double_turn() {
  // East inflow dropping one row and continuing east: two turns composed.
  auto t = base("DOUBLE_TURN");
  t.cells = {{{0, 0}, F},  {{1, 0}, 1}, {{2, 0}, F},
             {{2, -1}, F}, {{3, -1}, 1}, {{4, -1}, F}};
  t.ports = {{"in", {0, 0}, {-1, 0}, true, PortFlavor::PairCell},
             {"out", {4, -1}, {1, 0}, false, PortFlavor::PairCell}};
  t.behavior = {S({0u}), S({1u})};
  return t;
}

GadgetTemplate make_fanout() {
  // One junction cell relays the input to a west branch and an east
  // branch, both one row down.
  auto t = base("FANOUT");
  t.cells = {{{0, 0}, F},   // input cell
             {{1, 0}, 1},   // input coupler
             {{2, 0}, F},   // junction (up cell)
             {{2, -1}, F},  // junction's column mate
             {{1, -1}, 1},  // west branch coupler
             {{0, -1}, F},  // west output cell
             {{3, 0}, 1},   // east branch coupler
             {{4, 0}, F},   // east branch relay (up cell)
             {{4, -1}, F}}; // east output cell (column mate of the relay)
  t.ports = {{"in", {0, 0}, {-1, 0}, true, PortFlavor::PairCell},
             {"out1", {0, -1}, {-1, 0}, false, PortFlavor::PairCell},
             {"out2", {4, -1}, {1, 0}, false, PortFlavor::PairCell}};
  t.behavior = {S({0u}), S({3u})};
  return t;
}

GadgetTemplate make_or() {
  // Inputs arrive from the west on two rows; the reader cell sees one
  // input indicator along its row and the other down its column.
  auto t = base("OR");
  t.cells = {{{-1, 2}, F},  // i1
             {{0, 2}, 1},   // coupler 1
             {{1, 2}, F},   // u1
             {{1, 3}, F},   // u1's window (column above)
             {{2, 2}, F},   // reader
             {{2, 1}, F},   // u2 (below the reader)
             {{3, 1}, F},   // u2's window (row east)
             {{1, 1}, 1},   // coupler 2 (reads its south cell)
             {{1, 0}, F},   // i2
             {{3, 2}, 1},   // export coupler
             {{4, 2}, F}};  // output cell
  t.ports = {{"in1", {-1, 2}, {-1, 0}, true, PortFlavor::PairCell},
             {"in2", {1, 0}, {-1, 0}, true, PortFlavor::PairCell},
             {"out", {4, 2}, {1, 0}, false, PortFlavor::PairCell}};
  t.behavior = {S({0u}), S({1u}), S({1u}), S({1u})};
  return t;
}

GadgetTemplate make_cap() {
  auto t = base("CAP");
  t.cells = {{{0, 0}, F}, {{1, 0}, 0}};
  t.ports = {{"in", {0, 0}, {-1, 0}, true, PortFlavor::PairCell}};
  t.behavior = {{}, S({0u})};
  return t;
}

GadgetTemplate make_term() {
  auto t = base("TERM");
  t.cells = {{{0, 0}, F}};
  t.ports = {{"in", {0, 0}, {-1, 0}, true, PortFlavor::PairCell}};
  t.behavior = {S({0u}), S({0u})};
  return t;
}

}  // namespace

const std::vector<GadgetTemplate>& catalog_tri() {
  static const std::vector<GadgetTemplate> cat = {
      make_select(), make_wire(), make_turn(), make_double_turn(),
      make_not(),    make_fanout(), make_or(), make_cap(), make_term()};
  return cat;
}

}  // namespace gf

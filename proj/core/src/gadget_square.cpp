#include "gadgetforge/gadget.hpp"

// Square Akari catalog. Signals ride two-cell boundary corridors shared by
// adjacent gadgets: the lamp at the upstream end is a true signal (forward
// illumination), at the downstream end false. Footprints reconstructed
// against the rule set; the enumeration suite is their contract.

namespace gf {

namespace {

constexpr int F = kFreeCell;

std::set<unsigned> S(std::initializer_list<unsigned> v) { return {v}; }

GadgetTemplate base(const std::string& name) {
  GadgetTemplate t;
  t.target = Target::AkariSquare;
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
  auto t = base("NOT");
  t.cells = {{{0, 0}, F}, {{1, 0}, 1}, {{2, 0}, F},
             {{2, 1}, F},  // window over the middle cell
             {{3, 0}, 1},  {{4, 0}, F}};
  t.ports = {{"in", {0, 0}, {-1, 0}, true, PortFlavor::PairCell},
             {"out", {4, 0}, {1, 0}, false, PortFlavor::PairCell}};
  t.behavior = {S({1u}), S({0u})};
  return t;
}

GadgetTemplate make_turn_left() {
  // West inflow, north outflow.
  auto t = base("TURN_L");
  t.cells = {{{0, 0}, F}, {{1, 0}, 1}, {{2, 0}, F},
             {{2, 1}, F}, {{2, 2}, 1}, {{2, 3}, F}};
  t.ports = {{"in", {0, 0}, {-1, 0}, true, PortFlavor::PairCell},
             {"out", {2, 3}, {0, 1}, false, PortFlavor::PairCell}};
  t.behavior = {S({0u}), S({1u})};
  return t;
}

GadgetTemplate make_turn_right() {
  // West inflow, south outflow.
  auto t = base("TURN_R");
  t.cells = {{{0, 0}, F},  {{1, 0}, 1},  {{2, 0}, F},
             {{2, -1}, F}, {{2, -2}, 1}, {{2, -3}, F}};
  t.ports = {{"in", {0, 0}, {-1, 0}, true, PortFlavor::PairCell},
             {"out", {2, -3}, {0, -1}, false, PortFlavor::PairCell}};
  t.behavior = {S({0u}), S({1u})};
  return t;
}

GadgetTemplate make_fanout() {
  // West inflow; outputs east and north. The 2x2 block holds one of two
  // diagonal lamp states, relaying the input to both branches.
  auto t = base("FANOUT");
  t.cells = {{{0, 0}, F}, {{1, 0}, 1}, {{2, 0}, F}, {{3, 0}, F},
             {{2, 1}, F}, {{3, 1}, F}, {{4, 0}, 1}, {{5, 0}, F},
             {{2, 2}, 1}, {{2, 3}, F}};
  t.ports = {{"in", {0, 0}, {-1, 0}, true, PortFlavor::PairCell},
             {"out1", {5, 0}, {1, 0}, false, PortFlavor::PairCell},
             {"out2", {2, 3}, {0, 1}, false, PortFlavor::PairCell}};
  t.behavior = {S({0u}), S({3u})};
  return t;
}

GadgetTemplate make_or() {
  // Inputs west and east, output south. Two 2-clues share the middle cell;
  // the witness column above settles the single-true cases.
  auto t = base("OR");
  t.cells = {{{0, 0}, F},          // i1
             {{1, 0}, 2},          // left 2-clue
             {{2, 0}, F},          // m, also the output port cell
             {{3, 0}, 2},          // right 2-clue
             {{4, 0}, F},          // i2
             {{1, 1}, F},          // t1
             {{2, 1}, kBlockCell}, // blocker splitting the t-row
             {{3, 1}, F},          // t2
             {{1, 2}, F},          // t1'
             {{2, 2}, 1},          // witness 1-clue
             {{3, 2}, F},          // t2'
             {{2, 3}, F},          // gamma
             {{2, 4}, F}};         // top cell
  t.ports = {{"in1", {0, 0}, {-1, 0}, true, PortFlavor::PairCell},
             {"in2", {4, 0}, {1, 0}, true, PortFlavor::PairCell},
             {"out", {2, 0}, {0, -1}, false, PortFlavor::PairCell}};
  t.behavior = {S({0u}), S({1u}), S({1u}), S({1u})};
  return t;
}

GadgetTemplate make_cap() {
  // Forces the incoming signal true: the 0-clue forbids a lamp here, so
  // the upstream corridor must be lit from its own side.
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

const std::vector<GadgetTemplate>& catalog_square() {
  static const std::vector<GadgetTemplate> cat = {
      make_select(), make_wire(),   make_turn_left(), make_turn_right(),
      make_not(),    make_fanout(), make_or(),        make_cap(),
      make_term()};
  return cat;
}

}  // namespace gf

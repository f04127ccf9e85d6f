#include "gadgetforge/gadget.hpp"

#include <stdexcept>

// HexCells and Hexiom share one gadget geometry: chains of two-cell
// segments flowing NW, a side 1-clue disciplining each segment and a
// trailing coupler clue joining segments. A bomb/piece on the first
// segment cell is a true signal. Hexiom balance entries follow each
// template.

namespace gf {

namespace {

constexpr int F = kFreeCell;

std::set<unsigned> S(std::initializer_list<unsigned> v) { return {v}; }

GadgetTemplate base(Target target, const std::string& name) {
  GadgetTemplate t;
  t.target = target;
  t.name = name;
  return t;
}

// SELECT: free bottom pair, side clue, trailing coupler.
GadgetTemplate make_select(Target tg) {
  auto t = base(tg, "SELECT");
  t.cells = {{{0, 0}, F}, {{0, -1}, F}, {{1, -1}, 1}, {{0, -2}, 1}};
  t.ports = {{"out", {0, -3}, {0, -1}, false, PortFlavor::ChainExpect}};
  t.behavior = {S({0u, 1u})};
  t.balance_fixed = {1, 1};
  t.balance_free = {1, 2};
  return t;
}

GadgetTemplate make_wire(Target tg) {
  auto t = base(tg, "WIRE");
  t.cells = {{{0, 0}, F}, {{0, -1}, F}, {{1, -1}, 1}, {{0, -2}, 1}};
  t.ports = {{"in", {0, 0}, {0, 1}, true, PortFlavor::ChainCell},
             {"out", {0, -3}, {0, -1}, false, PortFlavor::ChainExpect}};
  t.behavior = {S({0u}), S({1u})};
  t.balance_fixed = {1, 1};
  t.balance_free = {2};
  return t;
}

// TURN: a wire segment whose second cell bends onto another axis.
GadgetTemplate make_turn(Target tg) {
  auto t = base(tg, "TURN");
  // In from SE, out toward NE: second cell at the NE neighbor.
  t.cells = {{{0, 0}, F}, {{1, -1}, F}, {{1, 0}, 1}, {{2, -2}, 1}};
  t.ports = {{"in", {0, 0}, {0, 1}, true, PortFlavor::ChainCell},
             {"out", {3, -3}, {1, -1}, false, PortFlavor::ChainExpect}};
  t.behavior = {S({0u}), S({1u})};
  t.balance_fixed = {1, 1};
  t.balance_free = {2};
  return t;
}

// NOT: single cell plus coupler; its length of 2 against the wire's 3 also
// makes it the parity-shift piece.
GadgetTemplate make_not(Target tg) {
  auto t = base(tg, "NOT");
  t.cells = {{{0, 0}, F}, {{0, -1}, 1}};
  t.ports = {{"in", {0, 0}, {0, 1}, true, PortFlavor::ChainCell},
             {"out", {0, -2}, {0, -1}, false, PortFlavor::ChainExpect}};
  t.behavior = {S({1u}), S({0u})};
  t.balance_fixed = {1};
  t.balance_free = {2};
  return t;
}

// Negated FAN-OUT: center cell with two outgoing couplers.
GadgetTemplate make_nfanout(Target tg) {
  auto t = base(tg, "NFANOUT");
  t.cells = {{{0, 0}, F}, {{-1, 0}, 1}, {{1, -1}, 1}};
  t.ports = {{"in", {0, 0}, {0, 1}, true, PortFlavor::ChainCell},
             {"out1", {-2, 0}, {-1, 0}, false, PortFlavor::ChainExpect},
             {"out2", {2, -2}, {1, -1}, false, PortFlavor::ChainExpect}};
  t.behavior = {S({3u}), S({0u})};
  t.balance_fixed = {1, 1};
  t.balance_free = {3};
  return t;
}

// NOR: center cell plus two side slack cells; the inputs' trailing
// couplers land adjacent to the center and one slack cell each.
GadgetTemplate make_nor(Target tg) {
  auto t = base(tg, "NOR");
  t.cells = {{{0, 0}, F},    // center
             {{0, -1}, F},   // west-input slack
             {{1, 0}, F},    // southeast-input slack
             {{1, -1}, 1}};  // output coupler
  t.ports = {{"in1", {-1, 0}, {-1, 0}, true, PortFlavor::ChainJunction},
             {"in2", {0, 1}, {0, 1}, true, PortFlavor::ChainJunction},
             {"out", {2, -2}, {1, -1}, false, PortFlavor::ChainExpect}};
  t.behavior = {S({1u}), S({0u}), S({0u}), S({0u})};
  t.balance_fixed = {1};
  t.balance_free = {2, 3};
  return t;
}

// CAP: the watcher clue forces a bomb/piece onto this cell, so the
// upstream coupler's other cell stays empty and the incoming chain value
// is pinned true.
GadgetTemplate make_cap(Target tg) {
  auto t = base(tg, "CAP");
  t.cells = {{{0, 0}, F}, {{0, -1}, 1}};
  t.ports = {{"in", {0, 0}, {0, 1}, true, PortFlavor::ChainCell}};
  t.behavior = {{}, S({0u})};
  t.balance_fixed = {1};
  t.balance_free = {2};
  return t;
}

GadgetTemplate make_term(Target tg) {
  auto t = base(tg, "TERM");
  t.cells = {{{0, 0}, F}};
  t.ports = {{"in", {0, 0}, {0, 1}, true, PortFlavor::ChainCell}};
  t.behavior = {S({0u}), S({0u})};
  t.balance_fixed = {};
  t.balance_free = {1};
  return t;
}

// Hexiom-only excess machinery.

GadgetTemplate make_two_excess() {
  auto t = base(Target::Hexiom, "2-EXCESS");
  t.cells = {{{0, 2}, F},   // top slack slot
             {{0, 1}, 1},   // upper fixed 1
             {{0, 0}, F},   // middle slot (takes the spare 2-cell)
             {{0, -1}, 1},  // lower fixed 1
             {{0, -2}, F},  // bottom slack slot
             {{3, 0}, F},   // isolated pair, first
             {{4, -1}, F}}; // isolated pair, second
  t.behavior = {S({0u})};  // no ports; completions exist
  t.balance_fixed = {1, 1};
  t.balance_free = {1, 1};
  return t;
}

GadgetTemplate make_three_or_21() {
  auto t = base(Target::Hexiom, "3-OR-21");
  t.cells = {{{0, 0}, F},    // center slot
             {{-1, 0}, 1},   // west fixed 1
             {{0, 1}, 1},    // southeast fixed 1
             {{1, -1}, 1},   // northeast fixed 1
             {{0, -1}, F},   // upper slot (2-cell position)
             {{0, 2}, F}};   // lower slot (1-cell position)
  t.behavior = {S({0u})};
  t.balance_fixed = {1, 1, 1};
  t.balance_free = {2, 1};
  return t;
}

GadgetTemplate make_pair_dump() {
  auto t = base(Target::Hexiom, "PAIR_DUMP");
  t.cells = {{{0, 0}, F}, {{1, -1}, F}};
  t.behavior = {S({0u})};
  t.balance_fixed = {};
  t.balance_free = {};
  return t;
}

std::vector<GadgetTemplate> build(Target tg) {
  std::vector<GadgetTemplate> cat = {
      make_select(tg), make_wire(tg), make_turn(tg),   make_not(tg),
      make_nfanout(tg), make_nor(tg), make_cap(tg),    make_term(tg)};
  if (tg == Target::Hexiom) {
    cat.push_back(make_two_excess());
    cat.push_back(make_three_or_21());
    cat.push_back(make_pair_dump());
  }
  return cat;
}

}  // namespace

const std::vector<GadgetTemplate>& catalog_hexcells() {
  static const std::vector<GadgetTemplate> cat = build(Target::HexCells);
  return cat;
}

const std::vector<GadgetTemplate>& catalog_hexiom() {
  static const std::vector<GadgetTemplate> cat = build(Target::Hexiom);
  return cat;
}

GadgetTemplate parity_shift_pair(Target target) {
  if (target != Target::HexCells && target != Target::Hexiom)
    throw std::runtime_error("parity shift pair is a chain-target composite");
  auto t = base(target, "PARITY_PAIR");
  t.cells = {{{0, 0}, F}, {{0, -1}, 1}, {{0, -2}, F}, {{0, -3}, 1}};
  t.ports = {{"in", {0, 0}, {0, 1}, true, PortFlavor::ChainCell},
             {"out", {0, -4}, {0, -1}, false, PortFlavor::ChainExpect}};
  t.behavior = {S({0u}), S({1u})};
  t.balance_fixed = {1, 1};
  t.balance_free = {2, 2};
  return t;
}

}  // namespace gf

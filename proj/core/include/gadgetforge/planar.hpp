#pragma once

#include <vector>

#include "gadgetforge/circuit.hpp"

namespace gf {

// Layered planar embedding built by a line machine: live wires form an
// ordered list of vertical lanes; gates consume adjacent lanes; whenever a
// gate needs non-adjacent operands, adjacent lanes are swapped through a
// three-XOR crossover block.
struct PlanStep {
  enum class Kind { Gate, Fanout, Cross, Output };
  Kind kind;
  int row = 0;              // step row, bottom (0) to top
  int pos = 0;              // leftmost affected lane
  std::vector<int> gates;   // emitted gate ids (6 for Cross: 2 fanouts, xor,
                            // fanout, 2 xors)
  std::vector<Wire> lines_before;
  std::vector<Wire> lines_after;
};

struct PlanarBox {
  int row = 0;
  int col_lo = 0, col_hi = 0;
};

struct PlanarSeg {
  // Wire segment from (col0,row0) to (col1,row1); row1 = row0 + 1.
  int col0 = 0, row0 = 0;
  int col1 = 0, row1 = 0;
};

struct PlanarCircuit {
  Circuit circuit;               // rewritten circuit including crossover gates
  std::vector<PlanStep> steps;
  std::vector<PlanarBox> boxes;  // one per step
  std::vector<PlanarSeg> segments;
  int crossovers = 0;
  int xor_gates_added = 0;
};

// Plans a layered left-to-right embedding; every lane swap inserts exactly
// three XOR gates (plus explicit fanouts); function is preserved.
PlanarCircuit planarize(const Circuit& c);

// Sweeps all routed segments and boxes; returns the number of improper
// intersections (0 for a valid embedding).
int count_crossings(const PlanarCircuit& pc);

}  // namespace gf

#include "gadgetforge/planar.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gf {

namespace {

// Live lane: which wire of the source circuit it carries, and the wire of
// the rewritten circuit realizing it (crossovers replace the latter).
struct Lane {
  std::pair<int, int> orig;  // (gate, port) in the source circuit
  Wire cur;                  // wire in the output circuit
};

struct LineMachine {
  PlanarCircuit out;
  std::vector<Lane> lanes;
  int row = 0;

  int emit_gate(GateKind kind, const std::string& name, int input_index,
                std::vector<Wire> ins) {
    out.circuit.gates.push_back({kind, name, input_index, std::move(ins)});
    return static_cast<int>(out.circuit.gates.size()) - 1;
  }

  int find_orig(std::pair<int, int> orig) const {
    for (std::size_t i = 0; i < lanes.size(); ++i)
      if (lanes[i].orig == orig) return static_cast<int>(i);
    throw std::runtime_error("wire not live in line machine");
  }

  std::vector<Wire> snapshot() const {
    std::vector<Wire> v;
    v.reserve(lanes.size());
    for (const Lane& l : lanes) v.push_back(l.cur);
    return v;
  }

  void record(PlanStep::Kind kind, int pos, int width, std::vector<int> gates,
              const std::vector<Wire>& before,
              const std::vector<int>& lane_shift) {
    PlanStep st;
    st.kind = kind;
    st.row = row;
    st.pos = pos;
    st.gates = std::move(gates);
    st.lines_before = before;
    st.lines_after = snapshot();
    out.boxes.push_back({row, pos, pos + width - 1});
    for (std::size_t i = 0; i < lane_shift.size(); ++i) {
      if (lane_shift[i] < 0) continue;  // consumed by the step
      out.segments.push_back({static_cast<int>(i), row, lane_shift[i], row + 1});
    }
    out.steps.push_back(std::move(st));
    ++row;
  }

  // Swaps adjacent lanes p, p+1 through a crossover block: three XOR gates
  // plus the fanouts feeding them.
  void cross(int p) {
    std::vector<Wire> before = snapshot();
    Lane a = lanes[static_cast<std::size_t>(p)];
    Lane b = lanes[static_cast<std::size_t>(p) + 1];
    int fa = emit_gate(GateKind::Fanout, "", -1, {a.cur});
    int fb = emit_gate(GateKind::Fanout, "", -1, {b.cur});
    int n1 = emit_gate(GateKind::Xor, "", -1, {{fa, 0}, {fb, 0}});
    int fn = emit_gate(GateKind::Fanout, "", -1, {{n1, 0}});
    int l = emit_gate(GateKind::Xor, "", -1, {{fn, 0}, {fa, 1}});  // carries b
    int r = emit_gate(GateKind::Xor, "", -1, {{fn, 1}, {fb, 1}});  // carries a
    lanes[static_cast<std::size_t>(p)] = {b.orig, {l, 0}};
    lanes[static_cast<std::size_t>(p) + 1] = {a.orig, {r, 0}};
    out.crossovers += 1;
    out.xor_gates_added += 3;
    std::vector<int> shift(before.size());
    for (std::size_t i = 0; i < before.size(); ++i)
      shift[i] = (static_cast<int>(i) == p || static_cast<int>(i) == p + 1)
                     ? -1
                     : static_cast<int>(i);
    record(PlanStep::Kind::Cross, p, 2, {fa, fb, n1, fn, l, r}, before, shift);
  }

  void move_lane(int from, int to) {
    while (from > to) {
      cross(from - 1);
      --from;
    }
    while (from < to) {
      cross(from);
      ++from;
    }
  }
};

}  // namespace

PlanarCircuit planarize(const Circuit& c) {
  c.validate();
  LineMachine m;
  m.out.circuit.input_names = c.input_names;

  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    if (c.gates[i].kind != GateKind::Input) continue;
    int g = m.emit_gate(GateKind::Input, c.gates[i].name,
                        c.gates[i].input_index, {});
    m.lanes.push_back({{static_cast<int>(i), 0}, {g, 0}});
  }

  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    int gi = static_cast<int>(i);
    switch (g.kind) {
      case GateKind::Input:
        continue;
      case GateKind::Fanout: {
        int p = m.find_orig({g.inputs[0].gate, g.inputs[0].port});
        std::vector<Wire> before = m.snapshot();
        int ng = m.emit_gate(GateKind::Fanout, "", -1,
                             {m.lanes[static_cast<std::size_t>(p)].cur});
        m.lanes[static_cast<std::size_t>(p)] = {{gi, 0}, {ng, 0}};
        m.lanes.insert(m.lanes.begin() + p + 1, Lane{{gi, 1}, {ng, 1}});
        std::vector<int> shift(before.size());
        for (std::size_t k = 0; k < before.size(); ++k)
          shift[k] = static_cast<int>(k) == p
                         ? -1
                         : static_cast<int>(k) + (static_cast<int>(k) > p ? 1 : 0);
        m.record(PlanStep::Kind::Fanout, p, 1, {ng}, before, shift);
        break;
      }
      case GateKind::Output: {
        int p = m.find_orig({g.inputs[0].gate, g.inputs[0].port});
        std::vector<Wire> before = m.snapshot();
        int ng = m.emit_gate(GateKind::Output, "", -1,
                             {m.lanes[static_cast<std::size_t>(p)].cur});
        m.out.circuit.output_gate = ng;
        m.lanes.erase(m.lanes.begin() + p);
        std::vector<int> shift(before.size());
        for (std::size_t k = 0; k < before.size(); ++k)
          shift[k] = static_cast<int>(k) == p
                         ? -1
                         : static_cast<int>(k) - (static_cast<int>(k) > p ? 1 : 0);
        m.record(PlanStep::Kind::Output, p, 1, {ng}, before, shift);
        break;
      }
      default: {
        if (g.inputs.size() == 1) {
          int p = m.find_orig({g.inputs[0].gate, g.inputs[0].port});
          std::vector<Wire> before = m.snapshot();
          int ng = m.emit_gate(g.kind, "", -1,
                               {m.lanes[static_cast<std::size_t>(p)].cur});
          m.lanes[static_cast<std::size_t>(p)] = {{gi, 0}, {ng, 0}};
          std::vector<int> shift(before.size());
          for (std::size_t k = 0; k < before.size(); ++k)
            shift[k] = static_cast<int>(k) == p ? -1 : static_cast<int>(k);
          m.record(PlanStep::Kind::Gate, p, 1, {ng}, before, shift);
          break;
        }
        std::pair<int, int> oa{g.inputs[0].gate, g.inputs[0].port};
        std::pair<int, int> ob{g.inputs[1].gate, g.inputs[1].port};
        int pa = m.find_orig(oa);
        int pb = m.find_orig(ob);
        if (pb > pa + 1) {
          m.move_lane(pb, pa + 1);
        } else if (pb < pa - 1) {
          m.move_lane(pb, pa - 1);
        }
        pa = m.find_orig(oa);
        pb = m.find_orig(ob);
        int lo = std::min(pa, pb);
        std::vector<Wire> before = m.snapshot();
        Wire wa = m.lanes[static_cast<std::size_t>(pa)].cur;
        Wire wb = m.lanes[static_cast<std::size_t>(pb)].cur;
        int ng = m.emit_gate(g.kind, "", -1, {wa, wb});
        m.lanes.erase(m.lanes.begin() + std::max(pa, pb));
        m.lanes[static_cast<std::size_t>(lo)] = {{gi, 0}, {ng, 0}};
        std::vector<int> shift(before.size());
        for (std::size_t k = 0; k < before.size(); ++k) {
          int kk = static_cast<int>(k);
          if (kk == pa || kk == pb)
            shift[k] = -1;
          else
            shift[k] = kk - (kk > std::max(pa, pb) ? 1 : 0);
        }
        m.record(PlanStep::Kind::Gate, lo, 2, {ng}, before, shift);
        break;
      }
    }
  }
  if (m.out.circuit.output_gate < 0)
    throw std::runtime_error("planarize: source circuit had no output");
  m.out.circuit.validate();
  return m.out;
}

namespace {

bool segs_cross(const PlanarSeg& a, const PlanarSeg& b) {
  if (a.row0 != b.row0) return false;  // segments live between step rows
  // Both go from row r to r+1: x(t) = col0 + t*(col1-col0), t in [0,1].
  // Proper crossing iff orders differ at the two ends.
  int d0 = a.col0 - b.col0;
  int d1 = a.col1 - b.col1;
  if (d0 == 0 && d1 == 0) return true;  // overlap
  return (d0 < 0 && d1 > 0) || (d0 > 0 && d1 < 0);
}

}  // namespace

int count_crossings(const PlanarCircuit& pc) {
  int n = 0;
  for (std::size_t i = 0; i < pc.segments.size(); ++i)
    for (std::size_t j = i + 1; j < pc.segments.size(); ++j)
      if (segs_cross(pc.segments[i], pc.segments[j])) ++n;
  // A segment passing through a box it does not terminate on would also be
  // an intersection; segments are emitted only for untouched lanes whose
  // columns lie outside the step's box, so check that too.
  for (const PlanarSeg& s : pc.segments) {
    for (const PlanarBox& b : pc.boxes) {
      if (b.row != s.row0) continue;
      if (s.col0 >= b.col_lo && s.col0 <= b.col_hi) ++n;
    }
  }
  return n;
}

}  // namespace gf

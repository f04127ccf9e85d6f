#include "gadgetforge/circuit.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

namespace gf {

const char* gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::Input: return "INPUT";
    case GateKind::Not: return "NOT";
    case GateKind::And: return "AND";
    case GateKind::Or: return "OR";
    case GateKind::Xor: return "XOR";
    case GateKind::Nand: return "NAND";
    case GateKind::Nor: return "NOR";
    case GateKind::Fanout: return "FANOUT";
    case GateKind::Output: return "OUTPUT";
  }
  return "?";
}

namespace {

int gate_arity(GateKind k) {
  switch (k) {
    case GateKind::Input: return 0;
    case GateKind::Not:
    case GateKind::Fanout:
    case GateKind::Output: return 1;
    default: return 2;
  }
}

int gate_out_ports(GateKind k) {
  if (k == GateKind::Output) return 0;
  if (k == GateKind::Fanout) return 2;
  return 1;
}

}  // namespace

void Circuit::validate() const {
  if (output_gate < 0 || output_gate >= static_cast<int>(gates.size()))
    throw std::runtime_error("missing OUTPUT gate");
  if (gates[static_cast<std::size_t>(output_gate)].kind != GateKind::Output)
    throw std::runtime_error("output_gate is not an OUTPUT");
  std::map<std::pair<int, int>, int> consumers;
  int output_count = 0;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    if (g.kind == GateKind::Input) {
      if (g.input_index < 0 ||
          g.input_index >= static_cast<int>(input_names.size()))
        throw std::runtime_error("INPUT gate with bad input_index");
    }
    if (g.kind == GateKind::Output) ++output_count;
    if (static_cast<int>(g.inputs.size()) != gate_arity(g.kind))
      throw std::runtime_error("bad gate arity");
    for (const Wire& w : g.inputs) {
      if (w.gate < 0 || w.gate >= static_cast<int>(i))
        throw std::runtime_error("wire breaks topological order");
      const Gate& src = gates[static_cast<std::size_t>(w.gate)];
      if (w.port < 0 || w.port >= gate_out_ports(src.kind))
        throw std::runtime_error("wire references missing output port");
      ++consumers[{w.gate, w.port}];
    }
  }
  if (output_count != 1) throw std::runtime_error("exactly one OUTPUT required");
  for (std::size_t i = 0; i < gates.size(); ++i) {
    for (int p = 0; p < gate_out_ports(gates[i].kind); ++p) {
      int n = consumers.count({static_cast<int>(i), p})
                  ? consumers.at({static_cast<int>(i), p})
                  : 0;
      if (n != 1)
        throw std::runtime_error("wire fan-out must be exactly 1 (gate " +
                                 std::to_string(i) + " port " + std::to_string(p) +
                                 " has " + std::to_string(n) + ")");
    }
  }
}

std::vector<bool> Circuit::evaluate(const std::vector<bool>& assignment) const {
  if (assignment.size() != input_names.size())
    throw std::runtime_error("assignment missing a variable");
  std::vector<bool> value(gates.size(), false);
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    auto in = [&](int k) {
      return value[static_cast<std::size_t>(g.inputs[static_cast<std::size_t>(k)].gate)];
    };
    switch (g.kind) {
      case GateKind::Input:
        value[i] = assignment[static_cast<std::size_t>(g.input_index)];
        break;
      case GateKind::Not: value[i] = !in(0); break;
      case GateKind::And: value[i] = in(0) && in(1); break;
      case GateKind::Or: value[i] = in(0) || in(1); break;
      case GateKind::Xor: value[i] = in(0) != in(1); break;
      case GateKind::Nand: value[i] = !(in(0) && in(1)); break;
      case GateKind::Nor: value[i] = !(in(0) || in(1)); break;
      case GateKind::Fanout: value[i] = in(0); break;
      case GateKind::Output: value[i] = in(0); break;
    }
  }
  return value;
}

bool Circuit::output_value(const std::vector<bool>& assignment) const {
  return evaluate(assignment)[static_cast<std::size_t>(output_gate)];
}

std::vector<std::vector<bool>> Circuit::enumerate_models(int max_inputs) const {
  int n = num_inputs();
  if (n > max_inputs) throw std::runtime_error("enumerate_models size guard");
  std::vector<std::vector<bool>> models;
  for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
    std::vector<bool> a(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
      a[static_cast<std::size_t>(j)] = (mask >> (n - 1 - j)) & 1;  // input 0 major
    if (output_value(a)) models.push_back(a);
  }
  return models;
}

std::string Circuit::dump_netlist() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < gates.size(); ++i) {
    const Gate& g = gates[i];
    out << i << ' ' << gate_kind_name(g.kind);
    if (g.kind == GateKind::Input) out << ' ' << g.name;
    for (const Wire& w : g.inputs) {
      out << ' ' << w.gate;
      if (w.port) out << ':' << w.port;
    }
    out << '\n';
  }
  return out.str();
}

int CircuitBuilder::add_input(const std::string& name) {
  if (!nodes_.empty() && nodes_.back().kind != GateKind::Input)
    throw std::runtime_error("inputs must be added first");
  nodes_.push_back({GateKind::Input, name, {}});
  input_names_.push_back(name);
  return static_cast<int>(nodes_.size()) - 1;
}

int CircuitBuilder::add_gate(GateKind kind, std::vector<int> input_values) {
  if (static_cast<int>(input_values.size()) != gate_arity(kind))
    throw std::runtime_error("bad arity in builder");
  nodes_.push_back({kind, "", std::move(input_values)});
  return static_cast<int>(nodes_.size()) - 1;
}

void CircuitBuilder::set_output(int value) { output_value_ = value; }

Circuit CircuitBuilder::finalize() {
  if (output_value_ < 0) throw std::runtime_error("builder has no output");
  // Count uses per value; the output sink counts as a use.
  std::vector<int> uses(nodes_.size(), 0);
  for (const Node& n : nodes_)
    for (int v : n.inputs) ++uses[static_cast<std::size_t>(v)];
  ++uses[static_cast<std::size_t>(output_value_)];

  Circuit c;
  c.input_names = input_names_;
  // For each value, a queue of wires available to consumers. Multi-use
  // values are expanded into FANOUT chains on first demand.
  std::vector<std::vector<Wire>> avail(nodes_.size());
  std::vector<int> gate_of(nodes_.size(), -1);

  auto emit = [&](GateKind kind, const std::string& name, int input_index,
                  std::vector<Wire> ins) {
    c.gates.push_back({kind, name, input_index, std::move(ins)});
    return static_cast<int>(c.gates.size()) - 1;
  };

  std::vector<int> input_pos(nodes_.size(), -1);
  {
    int k = 0;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (nodes_[i].kind == GateKind::Input) input_pos[i] = k++;
  }

  auto take = [&](int value) -> Wire {
    auto& q = avail[static_cast<std::size_t>(value)];
    if (q.empty()) throw std::runtime_error("value over-consumed");
    Wire w = q.back();
    q.pop_back();
    return w;
  };

  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    std::vector<Wire> ins;
    for (int v : n.inputs) ins.push_back(take(v));
    int g = emit(n.kind, n.name, n.kind == GateKind::Input ? input_pos[i] : -1,
                 std::move(ins));
    gate_of[i] = g;
    int need = uses[i];
    if (need == 0 && n.kind != GateKind::Output) {
      // Dead value: cap it with an OUTPUT? Dead gates are disallowed; the
      // builder requires every value to be consumed.
      throw std::runtime_error("unconsumed value in builder");
    }
    // Build a FANOUT chain producing `need` wires from gate g.
    std::vector<Wire> wires;
    if (n.kind != GateKind::Output) {
      Wire cur{g, 0};
      while (static_cast<int>(wires.size()) + 1 < need) {
        int f = emit(GateKind::Fanout, "", -1, {cur});
        wires.push_back({f, 0});
        cur = {f, 1};
      }
      wires.push_back(cur);
    }
    // Reverse so take() pops in creation order.
    auto& q = avail[i];
    q.assign(wires.rbegin(), wires.rend());
  }
  int out_gate = emit(GateKind::Output, "", -1, {take(output_value_)});
  c.output_gate = out_gate;
  c.validate();
  return c;
}

namespace {

void lower_rec(const FormulaPtr& f, CircuitBuilder& b,
               std::map<std::string, int>& var_values, int& out) {
  switch (f->op) {
    case FormulaOp::Var:
      out = var_values.at(f->var);
      return;
    case FormulaOp::Not: {
      int a;
      lower_rec(f->kids[0], b, var_values, a);
      out = b.add_gate(GateKind::Not, {a});
      return;
    }
    default: {
      int a, c;
      lower_rec(f->kids[0], b, var_values, a);
      lower_rec(f->kids[1], b, var_values, c);
      GateKind k;
      switch (f->op) {
        case FormulaOp::And: k = GateKind::And; break;
        case FormulaOp::Or: k = GateKind::Or; break;
        case FormulaOp::Xor: k = GateKind::Xor; break;
        case FormulaOp::Imply: {
          int na = b.add_gate(GateKind::Not, {a});
          out = b.add_gate(GateKind::Or, {na, c});
          return;
        }
        default: throw std::logic_error("unreachable");
      }
      out = b.add_gate(k, {a, c});
      return;
    }
  }
}

}  // namespace

Circuit lower_formula(const FormulaPtr& f) {
  CircuitBuilder b;
  std::map<std::string, int> var_values;
  for (const auto& name : formula_vars(f)) var_values[name] = b.add_input(name);
  int out;
  lower_rec(f, b, var_values, out);
  b.set_output(out);
  return b.finalize();
}

namespace {

// Basis expansions written against the builder's multi-use values.
struct BasisRewriter {
  CircuitBuilder b;
  GateBasis basis;

  int mk_not(int a) {
    if (basis == GateBasis::Nand) return b.add_gate(GateKind::Nand, {a, a});
    return b.add_gate(GateKind::Not, {a});
  }
  int mk_or(int a, int c) {
    switch (basis) {
      case GateBasis::OrNot: return b.add_gate(GateKind::Or, {a, c});
      case GateBasis::NorNot:
        return mk_not(b.add_gate(GateKind::Nor, {a, c}));
      case GateBasis::Nand:
        return b.add_gate(GateKind::Nand, {mk_not(a), mk_not(c)});
    }
    return -1;
  }
  int mk_and(int a, int c) {
    switch (basis) {
      case GateBasis::OrNot:
        return mk_not(b.add_gate(GateKind::Or, {mk_not(a), mk_not(c)}));
      case GateBasis::NorNot:
        return b.add_gate(GateKind::Nor, {mk_not(a), mk_not(c)});
      case GateBasis::Nand:
        return mk_not(b.add_gate(GateKind::Nand, {a, c}));
    }
    return -1;
  }
  int mk_nor(int a, int c) {
    if (basis == GateBasis::NorNot) return b.add_gate(GateKind::Nor, {a, c});
    return mk_not(mk_or(a, c));
  }
  int mk_nand(int a, int c) {
    if (basis == GateBasis::Nand) return b.add_gate(GateKind::Nand, {a, c});
    return mk_not(mk_and(a, c));
  }
  int mk_xor(int a, int c) {
    if (basis == GateBasis::Nand) {
      // Classic 4-NAND XOR.
      int n1 = b.add_gate(GateKind::Nand, {a, c});
      int n2 = b.add_gate(GateKind::Nand, {a, n1});
      int n3 = b.add_gate(GateKind::Nand, {n1, c});
      return b.add_gate(GateKind::Nand, {n2, n3});
    }
    if (basis == GateBasis::NorNot) {
      // XOR = NOR(NOR(!a,!b), NOR(a,b)).
      int p = b.add_gate(GateKind::Nor, {mk_not(a), mk_not(c)});
      int q = b.add_gate(GateKind::Nor, {a, c});
      return b.add_gate(GateKind::Nor, {p, q});
    }
    // {OR,NOT}: XOR = !( (a&b) | !(a|b) ).
    int both = mk_and(a, c);
    int neither = mk_not(b.add_gate(GateKind::Or, {a, c}));
    return mk_not(b.add_gate(GateKind::Or, {both, neither}));
  }
};

}  // namespace

Circuit rewrite_basis(const Circuit& c, GateBasis basis) {
  c.validate();
  BasisRewriter rw;
  rw.basis = basis;
  std::vector<int> value(c.gates.size(), -1);
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const Gate& g = c.gates[i];
    auto in = [&](int k) {
      return value[static_cast<std::size_t>(g.inputs[static_cast<std::size_t>(k)].gate)];
    };
    int v = -1;
    switch (g.kind) {
      case GateKind::Input: v = rw.b.add_input(g.name); break;
      case GateKind::Not: v = rw.mk_not(in(0)); break;
      case GateKind::And: v = rw.mk_and(in(0), in(1)); break;
      case GateKind::Or: v = rw.mk_or(in(0), in(1)); break;
      case GateKind::Xor: v = rw.mk_xor(in(0), in(1)); break;
      case GateKind::Nand: v = rw.mk_nand(in(0), in(1)); break;
      case GateKind::Nor: v = rw.mk_nor(in(0), in(1)); break;
      case GateKind::Fanout: v = in(0); break;  // sharing re-materialized by builder
      case GateKind::Output:
        rw.b.set_output(in(0));
        v = in(0);
        break;
    }
    value[i] = v;
  }
  return rw.b.finalize();
}

bool circuit_uses_only(const Circuit& c, GateBasis basis, bool allow_xor) {
  for (const Gate& g : c.gates) {
    switch (g.kind) {
      case GateKind::Input:
      case GateKind::Fanout:
      case GateKind::Output:
        continue;
      case GateKind::Xor:
        if (allow_xor) continue;
        return false;
      case GateKind::Not:
        if (basis == GateBasis::OrNot || basis == GateBasis::NorNot) continue;
        return false;
      case GateKind::Or:
        if (basis == GateBasis::OrNot) continue;
        return false;
      case GateKind::Nor:
        if (basis == GateBasis::NorNot) continue;
        return false;
      case GateKind::Nand:
        if (basis == GateBasis::Nand) continue;
        return false;
      default:
        return false;
    }
  }
  return true;
}

}  // namespace gf

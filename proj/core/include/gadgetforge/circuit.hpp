#pragma once

#include <string>
#include <vector>

#include "gadgetforge/formula.hpp"

namespace gf {

enum class GateKind { Input, Not, And, Or, Xor, Nand, Nor, Fanout, Output };

const char* gate_kind_name(GateKind k);

// A wire is one output port of a gate. Every gate has one output port
// except FANOUT, which has two. Every wire feeds exactly one input port;
// sharing is explicit via FANOUT gates.
struct Wire {
  int gate = -1;
  int port = 0;
  bool operator==(const Wire&) const = default;
};

struct Gate {
  GateKind kind = GateKind::Input;
  std::string name;          // variable name for Input gates
  int input_index = -1;      // position in input_names for Input gates
  std::vector<Wire> inputs;
};

struct Circuit {
  std::vector<std::string> input_names;  // gate i, i < input_names.size()
  std::vector<Gate> gates;               // topologically ordered
  int output_gate = -1;

  int num_inputs() const { return static_cast<int>(input_names.size()); }
  void validate() const;

  // Value of every gate's output under the assignment (FANOUT ports share
  // their input's value). assignment.size() == num_inputs().
  std::vector<bool> evaluate(const std::vector<bool>& assignment) const;
  bool output_value(const std::vector<bool>& assignment) const;

  // All satisfying assignments, lexicographic (input 0 most significant,
  // false < true). Guarded to ~20 inputs.
  std::vector<std::vector<bool>> enumerate_models(int max_inputs = 20) const;

  std::string dump_netlist() const;
};

enum class GateBasis { OrNot, NorNot, Nand };

// Lowers a formula tree: gate count O(|f|); variables used k times pass
// through a chain of k-1 FANOUT gates.
Circuit lower_formula(const FormulaPtr& f);

// Rewrites to the basis (+ FANOUT); function preserved.
Circuit rewrite_basis(const Circuit& c, GateBasis basis);

bool circuit_uses_only(const Circuit& c, GateBasis basis, bool allow_xor = false);

// Builder used by lowering, rewriting and planarization. Values may be
// used any number of times; finalize() materializes FANOUT chains so that
// every wire feeds exactly one port.
class CircuitBuilder {
 public:
  int add_input(const std::string& name);
  int add_gate(GateKind kind, std::vector<int> input_values);
  void set_output(int value);
  Circuit finalize();

 private:
  struct Node {
    GateKind kind;
    std::string name;
    std::vector<int> inputs;  // value ids
  };
  std::vector<Node> nodes_;
  std::vector<std::string> input_names_;
  int output_value_ = -1;
};

}  // namespace gf

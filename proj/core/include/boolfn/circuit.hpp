/// @file  circuit.hpp
/// @brief Exact combinational circuit synthesis by exhaustive enumeration.
///
/// Candidates are Leaf-DAGs: ordered binary trees whose internal nodes
/// come from a gate library and whose leaves are occurrence slots, each
/// slot bound to one primary input (a variable column, constant 0 or
/// constant 1).  Candidates are enumerated in a fixed canonical order by
/// increasing leaf count and evaluated wholesale with one bitvector fold
/// per candidate; the first hit is therefore leaf-minimal.

#pragma once

#include <memory>
#include <optional>
#include <string>
#include <type_traits>
#include <vector>

#include "boolfn/bitvec.hpp"

namespace boolfn {

/// Immutable circuit expression tree.  Leaves carry either occurrence
/// indices (while searching) or decoded input indices (after synthesis);
/// internal nodes carry a gate opcode.  Copies share structure.
class CircuitTree {
 public:
  static CircuitTree leaf(int index);
  static CircuitTree gate(OpCode op, CircuitTree left, CircuitTree right);

  bool is_leaf() const;
  int leaf_index() const;
  OpCode op() const;
  CircuitTree left() const;
  CircuitTree right() const;

  friend bool operator==(const CircuitTree& a, const CircuitTree& b);

 private:
  struct Node;
  explicit CircuitTree(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// Structural fold: leaf_fn on leaf indices, gate_fn on (op, left, right)
/// results.  Drives evaluation, decoding, sizing and printing.
template <class GateFn, class LeafFn>
auto fold_circuit(const CircuitTree& t, const GateFn& gate_fn,
                  const LeafFn& leaf_fn) -> std::invoke_result_t<LeafFn, int> {
  if (t.is_leaf()) return leaf_fn(t.leaf_index());
  return gate_fn(t.op(), fold_circuit(t.left(), gate_fn, leaf_fn),
                 fold_circuit(t.right(), gate_fn, leaf_fn));
}

int leaf_count(const CircuitTree& t);
/// Internal node count; always leaf_count - 1 on well-formed trees.
int gate_count(const CircuitTree& t);

/// Occurrence index -> bound input value.
using VarMap = std::vector<Nat>;

/// Nonempty list of gate opcodes available to the synthesizer.
using GateLibrary = std::vector<OpCode>;

inline const GateLibrary mixops{OpCode::Nand, OpCode::Impl};
inline const GateLibrary symops{OpCode::Nand, OpCode::Nor};
inline const GateLibrary asymops{OpCode::Impl, OpCode::Less};

/// One enumerated candidate: an occurrence-indexed tree, the binding of
/// its occurrences to input values, and the evaluated truth table.
struct Candidate {
  CircuitTree tree;
  VarMap varmap;
  Nat value;
};

/// Input k as a truth table: variables for k < nvars, constant 1 for
/// k = nvars, constant 0 for k = nvars + 1.  mask must be all_ones(nvars).
Nat input_value(const Nat& mask, int nvars, int k);

/// All primary inputs, in the fixed order [0, all-ones, x_0, ..., x_{n-1}].
/// The order is part of the enumeration contract.
std::vector<Nat> input_values(int nvars);

/// Inverse of input_value: recovers the input index from its table.
/// Throws std::invalid_argument if v encodes no input.
int decode_input(int nvars, const Nat& v);

/// All |us|^n length-n assignments over us.  Position 0 varies fastest,
/// cycling through us in its given order.
std::vector<std::vector<Nat>> bindings(int n, const std::vector<Nat>& us);

/// bindings, materialized as occurrence->value maps (order preserved).
std::vector<VarMap> var_maps(int occurrences, const std::vector<Nat>& values);

/// All trees with the given leaf count, leaves indexed in-order from 0,
/// internal nodes labeled from lib.  Canonical order: left-subtree leaf
/// count ascending, then left subtree, then right subtree, then the op
/// label varying fastest.
std::vector<CircuitTree> gate_trees(const GateLibrary& lib, int leaves);

/// Fold-evaluates an occurrence-indexed tree under a binding.
Nat eval_circuit(const Nat& mask, const CircuitTree& t, const VarMap& varmap);

/// Lazily enumerates candidates in canonical order: leaf count ascending,
/// then bindings, then trees (fastest).  Nothing is materialized beyond
/// the trees of the current leaf count.
class CandidateStream {
 public:
  CandidateStream(GateLibrary lib, int nvars, Nat max_leaves);

  /// Next candidate, or nullopt once the leaf budget is exhausted.
  std::optional<Candidate> next();

 private:
  bool start_block(int leaves);
  bool advance_binding();

  GateLibrary lib_;
  int nvars_;
  Nat max_leaves_;
  Nat mask_;
  std::vector<Nat> inputs_;
  int leaves_ = 0;
  std::vector<CircuitTree> trees_;
  std::size_t tree_index_ = 0;
  std::vector<std::size_t> digits_;
  VarMap varmap_;
};

/// First candidate in canonical order whose value equals target; the
/// first match has minimal leaf count.  Throws std::runtime_error when
/// the budget runs out, std::out_of_range when target exceeds the mask.
Candidate first_match(const GateLibrary& lib, int nvars, const Nat& max_leaves,
                      const Nat& target);

/// Rewrites occurrence indices into decoded input indices via the
/// candidate's binding; gate structure is unchanged.
CircuitTree decode_candidate(int nvars, const Candidate& c);

/// Renders a decoded tree: "x0", "x1", ... for variables, "1"/"0" for
/// constants, opname(left,right) for gates.  No whitespace.
std::string format_tree(int nvars, const CircuitTree& t);

/// Minimal circuit for the target truth table, decoded.  The leaf budget
/// is all_ones(nvars), which first-match order never comes close to.
CircuitTree synthesize(const GateLibrary& lib, int nvars, const Nat& target);

/// "target:circuit" line, e.g. "6:xor(x0,x1)".
std::string synth_line(const GateLibrary& lib, int nvars, const Nat& target);

/// synth_line for every truth table of nvars variables, in order.
std::vector<std::string> synth_all(const GateLibrary& lib, int nvars);

}  // namespace boolfn

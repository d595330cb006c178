#include "boolfn/circuit.hpp"

#include <map>
#include <stdexcept>
#include <utility>

namespace boolfn {

struct CircuitTree::Node {
  int leaf_index;  // kGateNode marks an internal node
  OpCode op;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
};

namespace {

constexpr int kGateNode = -1;

}  // namespace

CircuitTree::CircuitTree(std::shared_ptr<const Node> node)
    : node_(std::move(node)) {}

CircuitTree CircuitTree::leaf(int index) {
  if (index < 0) throw std::invalid_argument("CircuitTree: negative leaf index");
  return CircuitTree(std::make_shared<const Node>(
      Node{index, OpCode::Nand, nullptr, nullptr}));
}

CircuitTree CircuitTree::gate(OpCode op, CircuitTree left, CircuitTree right) {
  return CircuitTree(std::make_shared<const Node>(
      Node{kGateNode, op, std::move(left.node_), std::move(right.node_)}));
}

bool CircuitTree::is_leaf() const { return node_->leaf_index != kGateNode; }

int CircuitTree::leaf_index() const { return node_->leaf_index; }

OpCode CircuitTree::op() const { return node_->op; }

CircuitTree CircuitTree::left() const { return CircuitTree(node_->left); }

CircuitTree CircuitTree::right() const { return CircuitTree(node_->right); }

bool operator==(const CircuitTree& a, const CircuitTree& b) {
  if (a.node_ == b.node_) return true;
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.leaf_index() == b.leaf_index();
  return a.op() == b.op() && a.left() == b.left() && a.right() == b.right();
}

int leaf_count(const CircuitTree& t) {
  return fold_circuit(
      t, [](OpCode, int l, int r) { return l + r; }, [](int) { return 1; });
}

int gate_count(const CircuitTree& t) {
  return fold_circuit(
      t, [](OpCode, int l, int r) { return 1 + l + r; },
      [](int) { return 0; });
}

Nat input_value(const Nat& mask, int nvars, int k) {
  if (k == nvars) return mask;
  if (k == nvars + 1) return Nat(0);
  if (k < 0 || k > nvars + 1)
    throw std::invalid_argument("input_value: index out of range");
  return var_bits(mask, nvars, k);
}

std::vector<Nat> input_values(int nvars) {
  Nat mask = all_ones(nvars);
  std::vector<Nat> out;
  out.reserve(static_cast<std::size_t>(nvars) + 2);
  out.emplace_back(0);
  out.push_back(mask);
  for (int k = 0; k < nvars; ++k) out.push_back(var_bits(mask, nvars, k));
  return out;
}

int decode_input(int nvars, const Nat& v) {
  Nat mask = all_ones(nvars);
  if (v == mask) return nvars;
  if (sgn(v) == 0) return nvars + 1;
  for (int k = 0; k < nvars; ++k)
    if (var_bits(mask, nvars, k) == v) return k;
  throw std::invalid_argument("decode_input: " + v.get_str() +
                              " is not an input value");
}

std::vector<std::vector<Nat>> bindings(int n, const std::vector<Nat>& us) {
  if (n < 0) throw std::invalid_argument("bindings: negative length");
  if (us.empty()) throw std::invalid_argument("bindings: empty value set");
  std::vector<std::vector<Nat>> out;
  std::vector<std::size_t> digits(static_cast<std::size_t>(n), 0);
  std::vector<Nat> current(static_cast<std::size_t>(n), us[0]);
  while (true) {
    out.push_back(current);
    int p = 0;
    for (; p < n; ++p) {
      auto& d = digits[static_cast<std::size_t>(p)];
      if (++d < us.size()) {
        current[static_cast<std::size_t>(p)] = us[d];
        break;
      }
      d = 0;
      current[static_cast<std::size_t>(p)] = us[0];
    }
    if (p == n) break;
  }
  return out;
}

std::vector<VarMap> var_maps(int occurrences, const std::vector<Nat>& values) {
  if (occurrences < 1)
    throw std::invalid_argument("var_maps: need at least one occurrence");
  return bindings(occurrences, values);
}

namespace {

using TreeList = std::vector<CircuitTree>;

// Trees with n leaves indexed from base upward.  Memoized per (n, base);
// std::map keeps references stable across recursive inserts.
const TreeList& unfold_trees(const GateLibrary& lib, int n, int base,
                             std::map<std::pair<int, int>, TreeList>& memo) {
  auto key = std::make_pair(n, base);
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  TreeList out;
  if (n == 1) {
    out.push_back(CircuitTree::leaf(base));
  } else {
    for (int i = 1; i < n; ++i) {
      const TreeList& lefts = unfold_trees(lib, i, base, memo);
      const TreeList& rights = unfold_trees(lib, n - i, base + i, memo);
      for (const CircuitTree& l : lefts)
        for (const CircuitTree& r : rights)
          for (OpCode op : lib) out.push_back(CircuitTree::gate(op, l, r));
    }
  }
  return memo.emplace(key, std::move(out)).first->second;
}

void check_library(const GateLibrary& lib) {
  if (lib.empty()) throw std::invalid_argument("gate library must be nonempty");
  for (OpCode op : lib) op_from_code(static_cast<int>(op));
}

}  // namespace

std::vector<CircuitTree> gate_trees(const GateLibrary& lib, int leaves) {
  check_library(lib);
  if (leaves < 1)
    throw std::invalid_argument("gate_trees: need at least one leaf");
  std::map<std::pair<int, int>, TreeList> memo;
  return unfold_trees(lib, leaves, 0, memo);
}

Nat eval_circuit(const Nat& mask, const CircuitTree& t, const VarMap& varmap) {
  if (t.is_leaf()) return varmap.at(static_cast<std::size_t>(t.leaf_index()));
  Nat l = eval_circuit(mask, t.left(), varmap);
  Nat r = eval_circuit(mask, t.right(), varmap);
  Nat out;
  apply_op(out, mask, t.op(), l, r);
  return out;
}

CandidateStream::CandidateStream(GateLibrary lib, int nvars, Nat max_leaves)
    : lib_(std::move(lib)),
      nvars_(nvars),
      max_leaves_(std::move(max_leaves)),
      mask_(all_ones(nvars)),
      inputs_(input_values(nvars)) {
  check_library(lib_);
  if (nvars_ < 1)
    throw std::invalid_argument("CandidateStream: need at least one variable");
  start_block(1);
}

bool CandidateStream::start_block(int leaves) {
  if (max_leaves_ < leaves) return false;
  leaves_ = leaves;
  std::map<std::pair<int, int>, TreeList> memo;
  trees_ = unfold_trees(lib_, leaves, 0, memo);
  tree_index_ = 0;
  digits_.assign(static_cast<std::size_t>(leaves), 0);
  varmap_.assign(static_cast<std::size_t>(leaves), inputs_[0]);
  return true;
}

bool CandidateStream::advance_binding() {
  for (std::size_t p = 0; p < digits_.size(); ++p) {
    if (++digits_[p] < inputs_.size()) {
      varmap_[p] = inputs_[digits_[p]];
      return true;
    }
    digits_[p] = 0;
    varmap_[p] = inputs_[0];
  }
  return false;
}

std::optional<Candidate> CandidateStream::next() {
  if (leaves_ == 0) return std::nullopt;
  while (true) {
    if (tree_index_ < trees_.size()) {
      const CircuitTree& tree = trees_[tree_index_++];
      return Candidate{tree, varmap_, eval_circuit(mask_, tree, varmap_)};
    }
    tree_index_ = 0;
    if (!advance_binding() && !start_block(leaves_ + 1)) {
      leaves_ = 0;
      return std::nullopt;
    }
  }
}

Candidate first_match(const GateLibrary& lib, int nvars, const Nat& max_leaves,
                      const Nat& target) {
  Nat mask = all_ones(nvars);
  if (sgn(target) < 0 || target > mask)
    throw std::out_of_range("first_match: truth table " + target.get_str() +
                            " should be < 2^2^" + std::to_string(nvars));
  CandidateStream stream(lib, nvars, max_leaves);
  while (auto c = stream.next())
    if (c->value == target) return std::move(*c);
  throw std::runtime_error("no circuit within " + max_leaves.get_str() +
                           " leaves");
}

CircuitTree decode_candidate(int nvars, const Candidate& c) {
  return fold_circuit(
      c.tree,
      [](OpCode op, CircuitTree l, CircuitTree r) {
        return CircuitTree::gate(op, std::move(l), std::move(r));
      },
      [&](int occurrence) {
        return CircuitTree::leaf(decode_input(
            nvars, c.varmap.at(static_cast<std::size_t>(occurrence))));
      });
}

std::string format_tree(int nvars, const CircuitTree& t) {
  return fold_circuit(
      t,
      [](OpCode op, std::string l, std::string r) {
        return op_name(op) + "(" + std::move(l) + "," + std::move(r) + ")";
      },
      [nvars](int index) {
        if (index < nvars) return "x" + std::to_string(index);
        return std::to_string(nvars + 1 - index);
      });
}

CircuitTree synthesize(const GateLibrary& lib, int nvars, const Nat& target) {
  return decode_candidate(nvars,
                          first_match(lib, nvars, all_ones(nvars), target));
}

std::string synth_line(const GateLibrary& lib, int nvars, const Nat& target) {
  return target.get_str() + ":" + format_tree(nvars, synthesize(lib, nvars, target));
}

std::vector<std::string> synth_all(const GateLibrary& lib, int nvars) {
  std::vector<std::string> out;
  Nat mask = all_ones(nvars);
  for (Nat tt = 0; tt <= mask; ++tt) out.push_back(synth_line(lib, nvars, tt));
  return out;
}

}  // namespace boolfn

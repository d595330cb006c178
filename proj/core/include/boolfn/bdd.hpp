/// @file  bdd.hpp
/// @brief Decision trees built from truth tables by recursive unpairing.
///
/// A truth table of 2^n bits splits, via deinterleave, into the two
/// cofactor tables of its topmost variable.  Applying the split
/// recursively yields a complete depth-n decision tree; interleaving on
/// the way back up restores the number.  Boolean evaluation of the same
/// tree (reduced or not) restores it as well, which is what makes the
/// encoding usable for ranking.

#pragma once

#include <cstddef>
#include <memory>

#include "boolfn/bitvec.hpp"

namespace boolfn {

/// Immutable binary decision tree: constants at the leaves, level-labeled
/// decision nodes inside.  Levels are stored explicitly so reduced trees
/// remain evaluable.  Copies share structure.
class DecisionTree {
 public:
  static DecisionTree constant(Nat value);
  static DecisionTree decide(int level, DecisionTree if_one,
                             DecisionTree if_zero);

  bool is_const() const;
  /// Leaf payload; only valid when is_const().
  const Nat& value() const;
  /// Variable index tested at this node; only valid on decision nodes.
  int level() const;
  /// Branch taken when the tested variable is 1.
  DecisionTree if_one() const;
  /// Branch taken when the tested variable is 0.
  DecisionTree if_zero() const;

  std::size_t node_count() const;

  /// Structural equality (recursive; shared subtrees compare in O(1)).
  friend bool operator==(const DecisionTree& a, const DecisionTree& b);

 private:
  struct Node;
  explicit DecisionTree(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

/// Decision tree plus its variable count.  The count is essential data:
/// reduction can erase every decision node, and ranking needs the block
/// the function belongs to.
struct Bdd {
  int nvars;
  DecisionTree root;
};

bool operator==(const Bdd& a, const Bdd& b);

/// Complete depth-nvars decision tree of the truth table tt, built by
/// recursive deinterleaving.  The first unpairing component populates the
/// 1-branch.  Throws std::out_of_range unless tt < 2^(2^nvars).
Bdd plain_bdd(int nvars, const Nat& tt);

/// Collapses every decision node whose reduced branches are equal.
Bdd reduce(const Bdd& b);

/// reduce(plain_bdd(nvars, tt)).
Bdd reduced_bdd(int nvars, const Nat& tt);

/// Structural inverse of plain_bdd: folds the tree back into a number by
/// interleaving at every decision node.  Only complete (plain) trees give
/// back the original truth table.
Nat plain_bdd_to_nat(const Bdd& b);

/// Boolean evaluation: the truth table of the function the tree denotes.
/// Acts as a left inverse of both plain_bdd and reduced_bdd.
Nat eval_bdd(const Bdd& b);

}  // namespace boolfn

/// @file  mtbdd.hpp
/// @brief Multi-terminal decision trees: leaves carry m-bit values.
///
/// Encodes a natural number tt < (2^m)^(2^n) as a complete n-level
/// decision tree whose 2^n leaves lie in [0..2^m-1], by the same
/// recursive deinterleaving that builds plain BDDs.  A BDD is the m = 1
/// special case.

#pragma once

#include "boolfn/bdd.hpp"

namespace boolfn {

/// n-input, m-output boolean function as a complete decision tree.
struct Mtbdd {
  int value_bits;  // m: leaf width in bits
  int nvars;       // n: tree depth
  DecisionTree root;
};

bool operator==(const Mtbdd& a, const Mtbdd& b);

/// Encodes tt as an n-level tree with leaves < 2^value_bits.
/// Throws std::out_of_range unless tt < (2^value_bits)^(2^nvars).
Mtbdd to_mtbdd(int value_bits, int nvars, const Nat& tt);

/// Decodes the tree back into a natural number, enforcing the leaf range
/// and completeness along the walk.
Nat from_mtbdd(const Mtbdd& x);

}  // namespace boolfn

/// @file  ranking.hpp
/// @brief Bijection between natural numbers and the set of all BDDs.
///
/// Boolean functions are laid out in blocks by variable count: ranks
/// [block_start(k), block_start(k+1)) hold the 2^(2^k) functions of k
/// variables.  Unranking locates the block and decodes the offset as a
/// truth table; ranking adds the block base back.

#pragma once

#include <utility>

#include "boolfn/bdd.hpp"

namespace boolfn {

/// Rank at which the k-variable block begins: 0, 2, 6, 22, 278, ...
/// (cumulative count of boolean functions with fewer than k variables).
Nat block_start(int k);

/// Splits a rank into (variable count, offset within that block).
/// The offset always satisfies offset < 2^(2^k).
std::pair<int, Nat> split_rank(const Nat& n);

/// Rank -> plain (complete) BDD.
Bdd unrank_plain_bdd(const Nat& n);

/// Rank -> reduced BDD.
Bdd unrank_bdd(const Nat& n);

/// Plain BDD -> rank, via the structural pairing fold.  Only valid on
/// complete trees.
Nat rank_plain_bdd(const Bdd& b);

/// BDD -> rank, via boolean evaluation.  Valid on plain and reduced
/// trees alike.
Nat rank_bdd(const Bdd& b);

/// Generates the stream of all BDDs in rank order, one per call.
class BddStream {
 public:
  /// plain selects complete trees; otherwise reduced ones.
  explicit BddStream(bool plain = false) : plain_(plain), next_rank_(0) {}

  Bdd next();

 private:
  bool plain_;
  Nat next_rank_;
};

}  // namespace boolfn

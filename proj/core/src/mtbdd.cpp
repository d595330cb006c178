#include "boolfn/mtbdd.hpp"

#include <stdexcept>
#include <utility>

#include "boolfn/pairing.hpp"

namespace boolfn {

bool operator==(const Mtbdd& a, const Mtbdd& b) {
  return a.value_bits == b.value_bits && a.nvars == b.nvars && a.root == b.root;
}

namespace {

DecisionTree unfold_mt(const Nat& leaf_limit, int depth, const Nat& tt) {
  if (depth < 1) {
    if (tt >= leaf_limit)
      throw std::out_of_range("to_mtbdd: leaf " + tt.get_str() +
                              " exceeds the output range");
    return DecisionTree::constant(tt);
  }
  auto [hi, lo] = deinterleave(tt);
  return DecisionTree::decide(depth - 1, unfold_mt(leaf_limit, depth - 1, hi),
                              unfold_mt(leaf_limit, depth - 1, lo));
}

Nat fold_mt(const Nat& leaf_limit, int depth, const DecisionTree& t) {
  if (t.is_const()) {
    if (depth > 0)
      throw std::invalid_argument("from_mtbdd: tree is not complete");
    if (sgn(t.value()) < 0 || t.value() >= leaf_limit)
      throw std::invalid_argument("from_mtbdd: leaf " + t.value().get_str() +
                                  " exceeds the output range");
    return t.value();
  }
  if (depth < 1)
    throw std::invalid_argument("from_mtbdd: tree deeper than nvars");
  return interleave(fold_mt(leaf_limit, depth - 1, t.if_one()),
                    fold_mt(leaf_limit, depth - 1, t.if_zero()));
}

}  // namespace

Mtbdd to_mtbdd(int value_bits, int nvars, const Nat& tt) {
  if (value_bits < 0 || nvars < 0)
    throw std::invalid_argument("to_mtbdd: negative dimension");
  if (nvars >= 58 || value_bits >= 64)
    throw std::invalid_argument("to_mtbdd: dimensions overflow");
  // ttlimit = (2^m)^(2^n) = 2^(m * 2^n); compare by bit length.
  unsigned long long width =
      static_cast<unsigned long long>(value_bits) << nvars;
  bool in_range =
      sgn(tt) == 0 ||
      (sgn(tt) > 0 && mpz_sizeinbase(tt.get_mpz_t(), 2) <= width);
  if (!in_range) {
    Nat limit = 1;
    limit <<= width;
    throw std::out_of_range("to_mtbdd: truth table " + tt.get_str() +
                            " should be < " + limit.get_str());
  }
  Nat leaf_limit = 1;
  leaf_limit <<= static_cast<unsigned long>(value_bits);
  return Mtbdd{value_bits, nvars, unfold_mt(leaf_limit, nvars, tt)};
}

Nat from_mtbdd(const Mtbdd& x) {
  Nat leaf_limit = 1;
  leaf_limit <<= static_cast<unsigned long>(x.value_bits);
  return fold_mt(leaf_limit, x.nvars, x.root);
}

}  // namespace boolfn

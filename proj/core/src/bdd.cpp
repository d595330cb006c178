#include "boolfn/bdd.hpp"

#include <stdexcept>
#include <utility>

#include "boolfn/pairing.hpp"

namespace boolfn {

struct DecisionTree::Node {
  int level;  // kConstNode marks a leaf
  Nat value;
  std::shared_ptr<const Node> one;
  std::shared_ptr<const Node> zero;
};

namespace {

constexpr int kConstNode = -1;

}  // namespace

DecisionTree::DecisionTree(std::shared_ptr<const Node> node)
    : node_(std::move(node)) {}

DecisionTree DecisionTree::constant(Nat value) {
  return DecisionTree(std::make_shared<const Node>(
      Node{kConstNode, std::move(value), nullptr, nullptr}));
}

DecisionTree DecisionTree::decide(int level, DecisionTree if_one,
                                  DecisionTree if_zero) {
  if (level < 0)
    throw std::invalid_argument("DecisionTree: negative level");
  return DecisionTree(std::make_shared<const Node>(Node{
      level, Nat(0), std::move(if_one.node_), std::move(if_zero.node_)}));
}

bool DecisionTree::is_const() const { return node_->level == kConstNode; }

const Nat& DecisionTree::value() const { return node_->value; }

int DecisionTree::level() const { return node_->level; }

DecisionTree DecisionTree::if_one() const { return DecisionTree(node_->one); }

DecisionTree DecisionTree::if_zero() const {
  return DecisionTree(node_->zero);
}

std::size_t DecisionTree::node_count() const {
  if (is_const()) return 1;
  return 1 + if_one().node_count() + if_zero().node_count();
}

bool operator==(const DecisionTree& a, const DecisionTree& b) {
  if (a.node_ == b.node_) return true;
  if (a.node_->level != b.node_->level) return false;
  if (a.is_const()) return a.value() == b.value();
  return a.if_one() == b.if_one() && a.if_zero() == b.if_zero();
}

bool operator==(const Bdd& a, const Bdd& b) {
  return a.nvars == b.nvars && a.root == b.root;
}

namespace {

// True iff tt < 2^(2^nvars), checked via bit length so the bound itself
// is never materialized.
bool fits_width(const Nat& tt, int nvars) {
  if (sgn(tt) == 0) return true;
  return mpz_sizeinbase(tt.get_mpz_t(), 2) <= (1ull << nvars);
}

DecisionTree unfold_tt(int depth, const Nat& tt) {
  if (depth < 1) return DecisionTree::constant(tt);
  auto [hi, lo] = deinterleave(tt);
  return DecisionTree::decide(depth - 1, unfold_tt(depth - 1, hi),
                              unfold_tt(depth - 1, lo));
}

DecisionTree reduce_tree(const DecisionTree& t) {
  if (t.is_const()) return t;
  DecisionTree one = reduce_tree(t.if_one());
  DecisionTree zero = reduce_tree(t.if_zero());
  if (one == zero) return one;
  return DecisionTree::decide(t.level(), std::move(one), std::move(zero));
}

Nat fold_to_nat(const DecisionTree& t) {
  if (t.is_const()) return t.value();
  return interleave(fold_to_nat(t.if_one()), fold_to_nat(t.if_zero()));
}

Nat eval_tree(const Nat& mask, int nvars, const DecisionTree& t) {
  if (t.is_const()) {
    const Nat& v = t.value();
    if (!v.fits_sint_p())
      throw std::invalid_argument("eval_bdd: non-boolean leaf");
    return const_bits(mask, static_cast<int>(v.get_si()));
  }
  return ite(var_bits(mask, nvars, t.level()), eval_tree(mask, nvars, t.if_one()),
             eval_tree(mask, nvars, t.if_zero()));
}

}  // namespace

Bdd plain_bdd(int nvars, const Nat& tt) {
  if (nvars < 0) throw std::invalid_argument("plain_bdd: nvars must be >= 0");
  if (nvars >= 64 || !fits_width(tt, nvars))
    throw std::out_of_range("plain_bdd: truth table " + tt.get_str() +
                            " should be < 2^2^" + std::to_string(nvars));
  return Bdd{nvars, unfold_tt(nvars, tt)};
}

Bdd reduce(const Bdd& b) { return Bdd{b.nvars, reduce_tree(b.root)}; }

Bdd reduced_bdd(int nvars, const Nat& tt) { return reduce(plain_bdd(nvars, tt)); }

Nat plain_bdd_to_nat(const Bdd& b) { return fold_to_nat(b.root); }

Nat eval_bdd(const Bdd& b) {
  return eval_tree(all_ones(b.nvars), b.nvars, b.root);
}

}  // namespace boolfn

#include "boolfn/ranking.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace boolfn {

namespace {

// Memoized block starts: s(0) = 0, s(k+1) = s(k) + 2^(2^k).  Entries grow
// doubly exponentially, so the table stays tiny for any reachable input.
class BlockTable {
 public:
  Nat get(int k) {
    std::lock_guard<std::mutex> lock(mutex_);
    extend_to(k);
    return starts_[static_cast<std::size_t>(k)];
  }

  // Largest k with start(k) <= n, plus that start value.
  std::pair<int, Nat> locate(const Nat& n) {
    std::lock_guard<std::mutex> lock(mutex_);
    int k = 0;
    while (true) {
      extend_to(k + 1);
      if (starts_[static_cast<std::size_t>(k) + 1] > n) break;
      ++k;
    }
    return {k, starts_[static_cast<std::size_t>(k)]};
  }

 private:
  void extend_to(int k) {
    while (starts_.size() <= static_cast<std::size_t>(k)) {
      int i = static_cast<int>(starts_.size()) - 1;
      Nat block = 1;
      block <<= 1ull << i;
      starts_.push_back(starts_.back() + block);
    }
  }

  std::mutex mutex_;
  std::vector<Nat> starts_{Nat(0)};
};

BlockTable& table() {
  static BlockTable t;
  return t;
}

}  // namespace

Nat block_start(int k) {
  if (k < 0) throw std::invalid_argument("block_start: negative index");
  if (k > 40) throw std::invalid_argument("block_start: index too large");
  return table().get(k);
}

std::pair<int, Nat> split_rank(const Nat& n) {
  if (sgn(n) < 0) throw std::invalid_argument("split_rank: negative rank");
  auto [k, base] = table().locate(n);
  return {k, n - base};
}

Bdd unrank_plain_bdd(const Nat& n) {
  auto [k, offset] = split_rank(n);
  return plain_bdd(k, offset);
}

Bdd unrank_bdd(const Nat& n) {
  auto [k, offset] = split_rank(n);
  return reduced_bdd(k, offset);
}

Nat rank_plain_bdd(const Bdd& b) {
  return block_start(b.nvars) + plain_bdd_to_nat(b);
}

Nat rank_bdd(const Bdd& b) { return block_start(b.nvars) + eval_bdd(b); }

Bdd BddStream::next() {
  Bdd b = plain_ ? unrank_plain_bdd(next_rank_) : unrank_bdd(next_rank_);
  next_rank_ += 1;
  return b;
}

}  // namespace boolfn

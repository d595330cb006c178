#include "boolfn/pairing.hpp"

#include <vector>

#include "doctest.h"

using boolfn::bit_positions;
using boolfn::deinterleave;
using boolfn::from_bit_positions;
using boolfn::interleave;
using boolfn::Nat;

namespace {

// Independent mirror of deinterleave: peel bits off with plain division.
std::pair<Nat, Nat> split_by_division(Nat z) {
  Nat even = 0, odd = 0, even_bit = 1, odd_bit = 1;
  bool take_even = true;
  while (z != 0) {
    if (z % 2 == 1) {
      if (take_even) {
        even += even_bit;
      } else {
        odd += odd_bit;
      }
    }
    if (take_even)
      even_bit *= 2;
    else
      odd_bit *= 2;
    z /= 2;
    take_even = !take_even;
  }
  return {even, odd};
}

}  // namespace

TEST_CASE("bit position sets") {
  CHECK(bit_positions(Nat(0)).empty());
  CHECK(bit_positions(Nat(42)) == std::vector<unsigned long>{1, 3, 5});
  CHECK(bit_positions(Nat(2008)) ==
        std::vector<unsigned long>{3, 4, 6, 7, 8, 9, 10});
  CHECK(from_bit_positions({}) == 0);
  CHECK(from_bit_positions({0, 1}) == 3);
  CHECK(from_bit_positions({2, 3, 4}) == 28);
  for (unsigned n = 0; n < 4096; ++n)
    CHECK(from_bit_positions(bit_positions(Nat(n))) == n);
}

TEST_CASE("interleave worked examples") {
  CHECK(interleave(Nat(0), Nat(0)) == 0);
  CHECK(interleave(Nat(60), Nat(26)) == 2008);
  CHECK(interleave(Nat(1), Nat(1)) == 3);
}

TEST_CASE("deinterleave worked examples") {
  CHECK(deinterleave(Nat(2008)) == std::pair<Nat, Nat>(60, 26));
  CHECK(deinterleave(Nat(0)) == std::pair<Nat, Nat>(0, 0));
  CHECK(deinterleave(Nat(42)) == std::pair<Nat, Nat>(0, 7));
}

TEST_CASE("pairing round trips") {
  for (unsigned z = 0; z < 4096; ++z) {
    auto [i, j] = deinterleave(Nat(z));
    CHECK(interleave(i, j) == z);
    auto mirror = split_by_division(Nat(z));
    CHECK(i == mirror.first);
    CHECK(j == mirror.second);
  }
  for (unsigned i = 0; i < 64; ++i)
    for (unsigned j = 0; j < 64; ++j)
      CHECK(deinterleave(interleave(Nat(i), Nat(j))) ==
            std::pair<Nat, Nat>(i, j));
}

TEST_CASE("pairing round trips on wide values") {
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(20080614);
  for (int trial = 0; trial < 200; ++trial) {
    Nat i = rng.get_z_bits(300);
    Nat j = rng.get_z_bits(240);
    auto [a, b] = deinterleave(interleave(i, j));
    CHECK(a == i);
    CHECK(b == j);
  }
}

TEST_CASE("pairing is monotone in each component") {
  for (unsigned i = 0; i + 1 < 48; ++i)
    for (unsigned j = 0; j < 48; ++j) {
      CHECK(interleave(Nat(i), Nat(j)) < interleave(Nat(i + 1), Nat(j)));
      CHECK(interleave(Nat(j), Nat(i)) < interleave(Nat(j), Nat(i + 1)));
    }
}

/// @file  pairing.hpp
/// @brief Bit-interleaving pairing bijection Nat x Nat <-> Nat.
///
/// interleave places the bits of its first argument on the even bit
/// positions of the result and the bits of the second argument on the
/// odd positions; deinterleave splits them back apart.  Together they
/// form a pairing bijection that halves/doubles bit lengths instead of
/// squaring magnitudes.

#pragma once

#include <utility>
#include <vector>

#include "boolfn/bitvec.hpp"

namespace boolfn {

/// Ascending positions of the 1 bits of n (empty for 0).
std::vector<unsigned long> bit_positions(const Nat& n);

/// Rebuilds a natural number from set-bit positions.  Positions must be
/// strictly increasing.
Nat from_bit_positions(const std::vector<unsigned long>& positions);

/// Pairing: bit p of i lands on bit 2p, bit p of j on bit 2p+1.
Nat interleave(const Nat& i, const Nat& j);

/// Unpairing: (even-position bits of z, odd-position bits of z), with
/// positions halved.
std::pair<Nat, Nat> deinterleave(const Nat& z);

}  // namespace boolfn

/// @file  bitvec.hpp
/// @brief Boolean functions as arbitrary-precision truth-table integers.
///
/// An n-variable boolean function is stored as the natural number whose
/// 2^n bits are the output column of its truth table.  Variables are the
/// projection columns of that table, so one bitwise integer operation
/// evaluates a gate for every input row at once.

#pragma once

#include <gmpxx.h>

#include <string>

namespace boolfn {

/// Arbitrary-precision natural number.  Doubles as a truth table of
/// 2^nvars bits; the variable count is carried separately by callers.
using Nat = mpz_class;

/// Gate functions available to the synthesizer, in their fixed encoding.
enum class OpCode : int {
  Nand = 0,
  Nor = 1,
  Impl = 2,
  Less = 3,
  Xor = 4,
};

inline constexpr int kNumOpCodes = 5;

/// All-ones table of width 2^nvars, i.e. 2^(2^nvars) - 1.  Serves both as
/// the constant-1 function and as the mask emulating bit complement.
Nat all_ones(int nvars);

/// Projection column k of the n-variable truth table, computed against a
/// precomputed mask (mask must equal all_ones(nvars)).
Nat var_bits(const Nat& mask, int nvars, int k);

/// Projection column k of the n-variable truth table.
Nat var_bits(int nvars, int k);

/// Applies one gate function to two truth tables under the given mask.
/// Complement is taken within the mask width; results never exceed mask.
/// Throws std::invalid_argument on an opcode outside [0..4].
Nat apply_op(const Nat& mask, OpCode op, const Nat& x, const Nat& y);

/// In-place variant: writes the gate result into out.  out may alias x
/// but not y.  Reusing out across calls avoids reallocation.
void apply_op(Nat& out, const Nat& mask, OpCode op, const Nat& x,
              const Nat& y);

/// Bitwise if-then-else: bit i of the result is bit i of if_one where
/// bit i of sel is 1, else bit i of if_zero.
Nat ite(const Nat& sel, const Nat& if_one, const Nat& if_zero);

/// Truth table of a constant: 0 maps to 0, 1 maps to mask.
/// Throws std::invalid_argument for any other bit value.
Nat const_bits(const Nat& mask, int bit);

/// Printable gate name ("nand", "nor", "impl", "less", "xor").
/// Throws std::invalid_argument on an opcode outside [0..4].
std::string op_name(OpCode op);

/// Validates an integer gate code and converts it to an OpCode.
OpCode op_from_code(int code);

}  // namespace boolfn

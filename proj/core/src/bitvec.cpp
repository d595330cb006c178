#include "boolfn/bitvec.hpp"

#include <stdexcept>

namespace boolfn {

namespace {

[[noreturn]] void bad_opcode(const char* what, OpCode op) {
  throw std::invalid_argument(std::string(what) + ":" +
                              std::to_string(static_cast<int>(op)));
}

}  // namespace

Nat all_ones(int nvars) {
  if (nvars < 0) throw std::invalid_argument("all_ones: nvars must be >= 0");
  if (nvars >= 64) throw std::invalid_argument("all_ones: table width overflow");
  Nat one = 1;
  return (one << (1ull << nvars)) - 1;
}

Nat var_bits(const Nat& mask, int nvars, int k) {
  if (k < 0 || k >= nvars)
    throw std::invalid_argument("var_bits: variable index out of range");
  // Column k of the truth table: mask div (2^(2^(n-k-1)) + 1).
  Nat divisor = 1;
  divisor <<= 1ull << (nvars - k - 1);
  divisor += 1;
  return mask / divisor;
}

Nat var_bits(int nvars, int k) { return var_bits(all_ones(nvars), nvars, k); }

Nat apply_op(const Nat& mask, OpCode op, const Nat& x, const Nat& y) {
  Nat out;
  apply_op(out, mask, op, x, y);
  return out;
}

void apply_op(Nat& out, const Nat& mask, OpCode op, const Nat& x,
              const Nat& y) {
  mpz_ptr d = out.get_mpz_t();
  mpz_srcptr m = mask.get_mpz_t();
  mpz_srcptr a = x.get_mpz_t();
  mpz_srcptr b = y.get_mpz_t();
  // Complements are folded into xor with the mask, keeping every
  // intermediate non-negative: mask & ~v == mask ^ v for v <= mask.
  switch (op) {
    case OpCode::Nand:
      mpz_and(d, a, b);
      mpz_xor(d, d, m);
      break;
    case OpCode::Nor:
      mpz_ior(d, a, b);
      mpz_xor(d, d, m);
      break;
    case OpCode::Impl:
      mpz_xor(d, m, a);
      mpz_ior(d, d, b);
      break;
    case OpCode::Less:
      mpz_and(d, a, b);
      mpz_xor(d, d, a);
      break;
    case OpCode::Xor:
      mpz_xor(d, a, b);
      break;
    default:
      bad_opcode("unexpected opcode", op);
  }
}

Nat ite(const Nat& sel, const Nat& if_one, const Nat& if_zero) {
  // ((t xor e) and sel) xor e
  Nat r = if_one ^ if_zero;
  r &= sel;
  r ^= if_zero;
  return r;
}

Nat const_bits(const Nat& mask, int bit) {
  if (bit == 0) return Nat(0);
  if (bit == 1) return mask;
  throw std::invalid_argument("const_bits: constant must be 0 or 1");
}

std::string op_name(OpCode op) {
  switch (op) {
    case OpCode::Nand: return "nand";
    case OpCode::Nor: return "nor";
    case OpCode::Impl: return "impl";
    case OpCode::Less: return "less";
    case OpCode::Xor: return "xor";
    default:
      bad_opcode("no such opcode", op);
  }
}

OpCode op_from_code(int code) {
  if (code < 0 || code >= kNumOpCodes)
    throw std::invalid_argument("no such opcode:" + std::to_string(code));
  return static_cast<OpCode>(code);
}

}  // namespace boolfn

#include "boolfn/pairing.hpp"

namespace boolfn {

namespace {

constexpr auto kNoBit = ~static_cast<mp_bitcnt_t>(0);

}  // namespace

std::vector<unsigned long> bit_positions(const Nat& n) {
  std::vector<unsigned long> out;
  mpz_srcptr z = n.get_mpz_t();
  for (mp_bitcnt_t p = mpz_scan1(z, 0); p != kNoBit; p = mpz_scan1(z, p + 1))
    out.push_back(p);
  return out;
}

Nat from_bit_positions(const std::vector<unsigned long>& positions) {
  Nat out = 0;
  for (unsigned long p : positions) mpz_setbit(out.get_mpz_t(), p);
  return out;
}

Nat interleave(const Nat& i, const Nat& j) {
  Nat out = 0;
  mpz_ptr d = out.get_mpz_t();
  mpz_srcptr a = i.get_mpz_t();
  for (mp_bitcnt_t p = mpz_scan1(a, 0); p != kNoBit; p = mpz_scan1(a, p + 1))
    mpz_setbit(d, 2 * p);
  mpz_srcptr b = j.get_mpz_t();
  for (mp_bitcnt_t p = mpz_scan1(b, 0); p != kNoBit; p = mpz_scan1(b, p + 1))
    mpz_setbit(d, 2 * p + 1);
  return out;
}

std::pair<Nat, Nat> deinterleave(const Nat& z) {
  Nat even = 0;
  Nat odd = 0;
  mpz_srcptr s = z.get_mpz_t();
  for (mp_bitcnt_t p = mpz_scan1(s, 0); p != kNoBit; p = mpz_scan1(s, p + 1)) {
    if (p % 2 == 0)
      mpz_setbit(even.get_mpz_t(), p / 2);
    else
      mpz_setbit(odd.get_mpz_t(), p / 2);
  }
  return {std::move(even), std::move(odd)};
}

}  // namespace boolfn

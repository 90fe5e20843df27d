#pragma once

// Arbitrary-precision integers (GMP) plus the handful of exact integer
// helpers used across the library.

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace mtz {

using BigInt = mpz_class;

inline BigInt factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline BigInt binomial(unsigned long n, unsigned long k) {
  if (k > n) return BigInt(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

// 2^k as an exact integer.
inline BigInt pow2(unsigned long k) {
  BigInt r(1);
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), k);
  return r;
}

// 2^k - 2, the coefficient pattern shared by the series and Bell arguments.
inline BigInt pow2_minus_2(unsigned long k) { return pow2(k) - 2; }

inline BigInt bigint_pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

inline BigInt bigint_from_string(const std::string& s) {
  BigInt r;
  if (mpz_set_str(r.get_mpz_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("not a base-10 integer: \"" + s + "\"");
  return r;
}

}  // namespace mtz

#pragma once

// High-precision numeric constants: zeta(k) and eta(k) for integer k >= 2,
// pi, and exact integer Gamma. eta is summed with the Cohen / Rodriguez
// Villegas / Zagier acceleration of the alternating series
//   eta(k) = sum_{j>=1} (-1)^{j-1} j^{-k},
// whose error after n terms shrinks like (3+sqrt(8))^{-n}; zeta is then
// recovered from eta(k) = (1 - 2^{1-k}) zeta(k). Every value is computed at
// two acceleration depths and the depths must agree before it is accepted.

#include <mtz/bigfloat.hpp>
#include <mtz/bigint.hpp>

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace mtz::constants {

// Gamma(k) = (k-1)!, exact.
inline BigInt gamma_int(int k) {
  if (k < 1) throw std::domain_error("gamma_int: k must be >= 1");
  return factorial(static_cast<unsigned long>(k - 1));
}

inline BigFloat pi_const(int digits) {
  if (digits < 1) throw std::invalid_argument("pi_const: digits must be >= 1");
  return BigFloat::pi(digits);
}

namespace detail {

// Accelerated eta(k) with a fixed number of acceleration terms.
inline BigFloat eta_accelerated(int k, int digits, int terms) {
  const mpfr_prec_t work = BigFloat::digits_to_bits(digits) + 64;

  // d = ((3+sqrt 8)^terms + (3-sqrt 8)^terms)/2 via d_j = 6 d_{j-1} - d_{j-2}.
  BigInt d_prev(1), d(3);
  if (terms == 0) d = 1;
  for (int j = 2; j <= terms; ++j) {
    BigInt next = 6 * d - d_prev;
    d_prev = d;
    d = next;
  }

  mpq_class b(-1), c(-mpq_class(d));
  mpfr_t sum, ak, term;
  mpfr_init2(sum, work);
  mpfr_init2(ak, work);
  mpfr_init2(term, work);
  mpfr_set_zero(sum, 1);

  for (int j = 0; j < terms; ++j) {
    c = b - c;
    // a_j = (j+1)^{-k}
    mpfr_ui_pow_ui(ak, static_cast<unsigned long>(j + 1), static_cast<unsigned long>(k),
                   MPFR_RNDN);
    mpfr_ui_div(ak, 1, ak, MPFR_RNDN);
    mpfr_set_q(term, c.get_mpq_t(), MPFR_RNDN);
    mpfr_fma(sum, term, ak, sum, MPFR_RNDN);
    // b <- b * 2 (j+terms)(j-terms) / ((2j+1)(j+1))
    b *= mpq_class(2L * (j + terms) * (j - terms), (2L * j + 1) * (j + 1));
    b.canonicalize();
  }

  mpfr_set_z(term, d.get_mpz_t(), MPFR_RNDN);
  mpfr_div(sum, sum, term, MPFR_RNDN);

  BigFloat out(digits);
  mpfr_set(out.raw(), sum, MPFR_RNDN);
  mpfr_clear(sum);
  mpfr_clear(ak);
  mpfr_clear(term);
  return out;
}

struct ConstCache {
  std::mutex mu;
  std::map<std::pair<int, int>, BigFloat> eta, zeta;
};

inline ConstCache& cache() {
  static ConstCache c;
  return c;
}

}  // namespace detail

inline BigFloat eta_int(int k, int digits) {
  if (k < 2) throw std::domain_error("eta_int: k must be >= 2");
  if (digits < 1) throw std::invalid_argument("eta_int: digits must be >= 1");

  auto& cc = detail::cache();
  {
    std::scoped_lock lock(cc.mu);
    auto it = cc.eta.find({k, digits});
    if (it != cc.eta.end()) return it->second;
  }

  // log10(3+sqrt 8) ~= 0.7656, so terms ~ digits/0.7656 plus margin.
  int terms = static_cast<int>(digits * 1.31) + 16;
  BigFloat v1 = detail::eta_accelerated(k, digits, terms);
  BigFloat v2 = detail::eta_accelerated(k, digits, terms + 12);
  int attempts = 0;
  while (!agree_to_digits(v1, v2, digits)) {
    if (++attempts > 8) throw std::runtime_error("eta_int: acceleration failed to stabilize");
    terms += 16;
    v1 = std::move(v2);
    v2 = detail::eta_accelerated(k, digits, terms + 12);
  }

  std::scoped_lock lock(cc.mu);
  return cc.eta.try_emplace({k, digits}, std::move(v2)).first->second;
}

inline BigFloat zeta_int(int k, int digits) {
  if (k < 2) throw std::domain_error("zeta_int: k must be >= 2 (zeta(1) diverges)");
  if (digits < 1) throw std::invalid_argument("zeta_int: digits must be >= 1");

  auto& cc = detail::cache();
  {
    std::scoped_lock lock(cc.mu);
    auto it = cc.zeta.find({k, digits});
    if (it != cc.zeta.end()) return it->second;
  }

  BigFloat eta = eta_int(k, digits);
  // 1 - 2^{1-k} is an exact power-of-two difference.
  BigFloat denom(1L, digits);
  {
    BigFloat half_pow(1L, digits);
    mpfr_mul_2si(half_pow.raw(), half_pow.raw(), 1 - k, MPFR_RNDN);
    denom -= half_pow;
  }
  BigFloat z = eta / denom;

  std::scoped_lock lock(cc.mu);
  return cc.zeta.try_emplace({k, digits}, std::move(z)).first->second;
}

}  // namespace mtz::constants

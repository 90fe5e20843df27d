#pragma once

// Formal power series over the zeta algebra and the closed-form pipeline.
//
// The generating function at work is Gamma(1-2x)/Gamma(1-x)^2. Its log
// expands (the Euler-Mascheroni terms cancel) as
//   f(x) = sum_{k>=2} (2^k - 2) zeta(k)/k x^k,
// and zbar_n = n! [x^n] exp f(x). Two independent routes produce the same
// polynomial: exponentiating the series through the derivative recurrence
// G' = F' G, and the complete Bell polynomial recurrence
//   B_{n+1} = sum_k C(n,k) B_{n-k} c_{k+1}
// over the arguments c_1 = 0, c_k = (2^k - 2) Gamma(k) zeta(k). The Bell
// route is the production closed form; the series route is its cross-check.

#include <mtz/bigint.hpp>
#include <mtz/combinatorics.hpp>
#include <mtz/rational.hpp>
#include <mtz/zeta_algebra.hpp>

#include <stdexcept>
#include <vector>

namespace mtz::series {

// Truncated series: coeffs[k] multiplies x^k, k = 0..order. Operations
// never extend the truncation order on their own.
struct FormalSeries {
  std::vector<ZetaPolynomial> coeffs;

  explicit FormalSeries(int order)
      : coeffs(static_cast<std::size_t>(order) + 1) {
    if (order < 0) throw std::invalid_argument("FormalSeries: order must be >= 0");
  }

  int order() const { return static_cast<int>(coeffs.size()) - 1; }

  const ZetaPolynomial& operator[](int k) const {
    return coeffs[static_cast<std::size_t>(k)];
  }
  ZetaPolynomial& operator[](int k) { return coeffs[static_cast<std::size_t>(k)]; }
};

// f(x) = sum_{k=2..order} (2^k - 2)/k zeta(k) x^k; coefficients 0 and 1
// vanish identically.
inline FormalSeries f_series(int order) {
  FormalSeries f(order);
  for (int k = 2; k <= order; ++k)
    f[k] = ZetaPolynomial::term(ZetaMonomial::single(k),
                                Rational(pow2_minus_2(static_cast<unsigned long>(k)), BigInt(k)));
  return f;
}

// exp(F) to the same truncation order via the coefficient form of G' = F' G:
//   m G[m] = sum_{k=1..m} k F[k] G[m-k].
// Requires F[0] = 0.
inline FormalSeries series_exp(const FormalSeries& f) {
  if (!f[0].is_zero())
    throw std::invalid_argument("series_exp: constant term must vanish");
  FormalSeries g(f.order());
  g[0] = ZetaPolynomial::one();
  for (int m = 1; m <= f.order(); ++m) {
    ZetaPolynomial acc;
    for (int k = 1; k <= m; ++k) {
      if (f[k].is_zero()) continue;
      acc += (f[k] * Rational(k)) * g[m - k];
    }
    g[m] = acc * Rational(1, m);
  }
  return g;
}

// Complete exponential Bell polynomial B_n(c_1, ..., c_n) evaluated in the
// zeta algebra; args[i] holds c_{i+1} and must cover indices 0..n-1.
inline ZetaPolynomial bell_complete(const std::vector<ZetaPolynomial>& args, int n) {
  if (n < 0) throw std::invalid_argument("bell_complete: n must be >= 0");
  if (static_cast<int>(args.size()) < n)
    throw std::invalid_argument("bell_complete: need at least n arguments");
  std::vector<ZetaPolynomial> b(static_cast<std::size_t>(n) + 1);
  b[0] = ZetaPolynomial::one();
  for (int j = 0; j < n; ++j) {
    ZetaPolynomial acc;
    for (int k = 0; k <= j; ++k) {
      if (args[static_cast<std::size_t>(k)].is_zero()) continue;
      acc += (args[static_cast<std::size_t>(k)] *
              Rational(binomial(static_cast<unsigned long>(j), static_cast<unsigned long>(k)))) *
             b[static_cast<std::size_t>(j - k)];
    }
    b[static_cast<std::size_t>(j) + 1] = acc;
  }
  return b[static_cast<std::size_t>(n)];
}

// k-th derivative of f at 0: zero for k = 1, (2^k - 2) Gamma(k) zeta(k)
// for k >= 2.
inline ZetaPolynomial f_derivative_at_zero(int k) {
  if (k < 1) throw std::invalid_argument("f_derivative_at_zero: k must be >= 1");
  if (k == 1) return ZetaPolynomial::zero();
  return ZetaPolynomial::term(
      ZetaMonomial::single(k),
      Rational(pow2_minus_2(static_cast<unsigned long>(k)) *
               factorial(static_cast<unsigned long>(k - 1))));
}

// zbar_n as an exact polynomial in zeta values:
// B_n(0, (2^2-2)Gamma(2) zeta(2), ..., (2^n-2)Gamma(n) zeta(n)).
inline ZetaPolynomial closed_form(int n) {
  if (n < 1) throw std::invalid_argument("closed_form: n must be >= 1");
  std::vector<ZetaPolynomial> args(static_cast<std::size_t>(n));
  for (int k = 2; k <= n; ++k) args[static_cast<std::size_t>(k) - 1] = f_derivative_at_zero(k);
  return bell_complete(args, n);
}

// Same Bell evaluation with eta-labelled indeterminates:
// B_n(0, 2^2 Gamma(2) eta(2), ..., 2^n Gamma(n) eta(n)). Monomial argument
// k stands for eta(k).
inline ZetaPolynomial closed_form_eta(int n) {
  if (n < 1) throw std::invalid_argument("closed_form_eta: n must be >= 1");
  std::vector<ZetaPolynomial> args(static_cast<std::size_t>(n));
  for (int k = 2; k <= n; ++k)
    args[static_cast<std::size_t>(k) - 1] = ZetaPolynomial::term(
        ZetaMonomial::single(k),
        Rational(pow2(static_cast<unsigned long>(k)) * factorial(static_cast<unsigned long>(k - 1))));
  return bell_complete(args, n);
}

// Substitutes eta(k) = (1 - 2^{1-k}) zeta(k) = (2^k - 2)/2^k zeta(k) into an
// eta-labelled polynomial, yielding the zeta-labelled equivalent.
inline ZetaPolynomial eta_to_zeta(const ZetaPolynomial& p) {
  ZetaPolynomial out;
  for (const auto& [m, c] : p.terms()) {
    Rational factor = c;
    for (int k : m.args())
      factor *= Rational(pow2_minus_2(static_cast<unsigned long>(k)),
                         pow2(static_cast<unsigned long>(k)));
    out.add_term(m, factor);
  }
  return out;
}

}  // namespace mtz::series

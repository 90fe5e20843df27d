#pragma once

// Inverts the closed forms: for each n, expresses scale * zeta(n) as an
// integer-coefficient polynomial in the zbar values of lower index.
//
// The products prod_i zbar_{lambda_i} over partitions lambda of n (parts
// >= 2) form a triangular basis of the weight-n homogeneous layer: the
// expansion of such a product contains the zeta-monomial lambda with
// leading coefficient prod_i (2^{lambda_i} - 2) Gamma(lambda_i), plus only
// monomials with strictly more parts (refinements). Repeatedly cancelling
// the largest remaining non-zeta(n) monomial therefore terminates and the
// resulting identity is unique. Every emitted identity is re-verified by
// exact substitution before it is returned.

#include <mtz/bigfloat.hpp>
#include <mtz/bigint.hpp>
#include <mtz/combinatorics.hpp>
#include <mtz/constants.hpp>
#include <mtz/rational.hpp>
#include <mtz/series_engine.hpp>
#include <mtz/zeta_algebra.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtz::inversion {

// A product of zbar values; argument k stands for zbar_k. Same multiset
// canonicalization and ordering as zeta monomials.
using ZbarMonomial = ZetaMonomial;

struct InversionIdentity {
  int n = 0;
  Rational scale;                        // coefficient of zeta(n)
  std::map<ZbarMonomial, Rational> rhs;  // zbar products; coefficient of zbar_n is 1

  friend bool operator==(const InversionIdentity& a, const InversionIdentity& b) {
    return a.n == b.n && a.scale == b.scale && a.rhs == b.rhs;
  }
};

namespace detail {

// Leading coefficient of prod_i closed_form(lambda_i) at the zeta-monomial
// lambda itself: prod_i (2^{lambda_i} - 2) Gamma(lambda_i).
inline Rational leading_coefficient(const ZbarMonomial& lambda) {
  Rational lead(1);
  for (int part : lambda.args())
    lead *= Rational(pow2_minus_2(static_cast<unsigned long>(part)) *
                     constants::gamma_int(part));
  return lead;
}

inline ZetaPolynomial zbar_product(const ZbarMonomial& lambda,
                                   const std::vector<ZetaPolynomial>& cf) {
  ZetaPolynomial prod = ZetaPolynomial::one();
  for (int part : lambda.args()) prod = prod * cf[static_cast<std::size_t>(part)];
  return prod;
}

}  // namespace detail

inline std::vector<InversionIdentity> invert(int n_max) {
  if (n_max < 2) throw std::invalid_argument("invert: n_max must be >= 2");

  std::vector<ZetaPolynomial> cf(static_cast<std::size_t>(n_max) + 1);
  for (int k = 1; k <= n_max; ++k) cf[static_cast<std::size_t>(k)] = series::closed_form(k);

  std::vector<InversionIdentity> out;
  for (int n = 2; n <= n_max; ++n) {
    const ZetaMonomial target = ZetaMonomial::single(n);
    ZetaPolynomial work = cf[static_cast<std::size_t>(n)];
    InversionIdentity ident;
    ident.n = n;
    ident.rhs[ZbarMonomial::single(n)] = Rational(1);

    long guard = 0;
    while (true) {
      // Largest remaining monomial other than zeta(n).
      const ZetaMonomial* mu = nullptr;
      Rational coeff;
      for (auto it = work.terms().rbegin(); it != work.terms().rend(); ++it) {
        if (it->first == target) continue;
        mu = &it->first;
        coeff = it->second;
        break;
      }
      if (mu == nullptr) break;
      if (++guard > 100000)
        throw std::logic_error("invert: elimination failed to terminate at n=" +
                               std::to_string(n));

      ZbarMonomial lambda = *mu;
      Rational q = coeff / detail::leading_coefficient(lambda);
      work -= detail::zbar_product(lambda, cf) * q;
      ident.rhs[lambda] -= q;
      if (ident.rhs[lambda].is_zero()) ident.rhs.erase(lambda);
    }

    if (work.term_count() != 1 || work.coefficient(target).is_zero())
      throw std::logic_error("invert: residue is not a pure zeta(n) multiple at n=" +
                             std::to_string(n));
    ident.scale = work.coefficient(target);

    // Exact substitution check of the emitted identity.
    ZetaPolynomial substituted;
    for (const auto& [lambda, c] : ident.rhs)
      substituted += detail::zbar_product(lambda, cf) * c;
    if (!(substituted == ZetaPolynomial::term(target, ident.scale)))
      throw std::logic_error("invert: substitution check failed at n=" + std::to_string(n));

    out.push_back(std::move(ident));
  }
  return out;
}

struct MonomialCountCheck {
  long count = 0;
  BigInt predicted;
  bool match = false;
};

// Number of stored monomials of closed_form(n) against the partition-count
// prediction p(n) - p(n-1).
inline MonomialCountCheck conjecture_monomial_count(int n) {
  if (n < 1) throw std::invalid_argument("conjecture_monomial_count: n must be >= 1");
  MonomialCountCheck out;
  out.count = static_cast<long>(series::closed_form(n).term_count());
  out.predicted = comb::partition_count(n) - comb::partition_count(n - 1);
  out.match = (BigInt(out.count) == out.predicted);
  return out;
}

struct RationalityRow {
  int n = 0;
  BigFloat ratio;      // zbar_n / pi^n
  BigInt best_num;     // best continued-fraction convergent with den <= limit
  BigInt best_den;
  BigFloat residual;   // |ratio - best_num/best_den|
  bool flagged = false;
};

// Scans zbar_n / pi^n for small-denominator rational values. Flagging is a
// heuristic: residual below 10^{-20} at >= 50-digit precision separates the
// exactly-rational cases (residual at rounding level) from generic
// irrational ratios (best convergents no closer than ~1/den^2 >= 10^{-12}).
inline std::vector<RationalityRow> pi_rationality_scan(int n_max, int digits,
                                                       const BigInt& max_denominator,
                                                       int threshold_exp = -20) {
  if (n_max < 1) throw std::invalid_argument("pi_rationality_scan: n_max must be >= 1");
  if (digits < 50) throw std::invalid_argument("pi_rationality_scan: precision must be >= 50");
  if (max_denominator < 1)
    throw std::invalid_argument("pi_rationality_scan: max_denominator must be >= 1");

  const BigFloat pi = constants::pi_const(digits);
  const BigFloat threshold = BigFloat::pow10(threshold_exp, digits);
  const BigFloat noise_floor = BigFloat::pow10(-(digits - 8), digits);

  std::vector<RationalityRow> rows;
  for (int n = 1; n <= n_max; ++n) {
    RationalityRow row;
    row.n = n;
    BigFloat value = series::closed_form(n).evaluate_zeta(digits);
    row.ratio = value / BigFloat::pow_int(pi, n);

    // Continued-fraction convergents h_j/k_j of the ratio.
    BigInt h1(1), h2(0), k1(0), k2(1);  // h_{-1}, h_{-2}, k_{-1}, k_{-2}
    BigFloat r = row.ratio;
    BigInt best_h(0), best_d(1);
    bool have_best = false;
    for (int steps = 0; steps < 200; ++steps) {
      BigInt a = r.floor_to_int();
      BigInt h = a * h1 + h2;
      BigInt k = a * k1 + k2;
      if (k > max_denominator) break;
      best_h = h;
      best_d = k;
      have_best = true;
      BigFloat approx = BigFloat(best_h, digits) / BigFloat(best_d, digits);
      if ((row.ratio - approx).abs() < noise_floor) break;  // exact at precision
      BigFloat frac = r - BigFloat(a, digits);
      if (frac.is_zero()) break;
      r = BigFloat(1L, digits) / frac;
      h2 = h1; h1 = h;
      k2 = k1; k1 = k;
    }
    if (!have_best) { best_h = 0; best_d = 1; }

    row.best_num = best_h;
    row.best_den = best_d;
    row.residual = (row.ratio - BigFloat(best_h, digits) / BigFloat(best_d, digits)).abs();
    row.flagged = row.residual <= threshold;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace mtz::inversion

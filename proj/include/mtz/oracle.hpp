#pragma once

// Numerical ground truth for zbar: truncated evaluation of the defining
// lattice sum, the sigma-decomposition evaluator, the convergence-proof
// upper bound n! 2^{2n-3} zeta(2), and the Gauss hypergeometric identity
// check.
//
// Truncation semantics for the defining sum: box cutoff a_k in [-M,M]\{0}
// on the n-1 free coordinates, dependent coordinate determined by the
// zero-sum constraint. All summands are positive, so every truncation is a
// lower bound and values are monotone in M.
//
// The box sum is evaluated by convolving the per-coordinate sequences
// f_j[a] = |a|^{-w_j} and pairing the resulting distribution of the partial
// sum v = a_1 + ... + a_{n-1} against |v|^{-w_n}. This is the same finite
// set of summands as the nested loops, reorganized; every convolution slot
// is accumulated in a fixed index order, so results are bit-identical for
// any thread count. Small instances (n <= 4, M <= 30) are instead summed
// exactly in rational arithmetic, which the sign-orbit tests rely on.

#include <mtz/bigfloat.hpp>
#include <mtz/bigint.hpp>
#include <mtz/combinatorics.hpp>
#include <mtz/constants.hpp>
#include <mtz/rational.hpp>

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace mtz::oracle {

struct WeightVector {
  std::vector<int> w;

  explicit WeightVector(std::vector<int> weights) : w(std::move(weights)) {
    if (w.empty()) throw std::invalid_argument("WeightVector: depth must be >= 1");
    for (int x : w)
      if (x < 1) throw std::invalid_argument("WeightVector: weights must be >= 1");
  }

  static WeightVector ones(int n) { return WeightVector(std::vector<int>(n, 1)); }

  int depth() const { return static_cast<int>(w.size()); }
};

struct OracleResult {
  BigFloat value;
  long cutoff = 0;
  BigInt terms_summed;
  bool lower_bound = true;  // truncations always underestimate the limit
  std::optional<Rational> exact_value;  // present in exact small-instance mode
};

enum class BruteMode { automatic, exact, convolution };

namespace detail {

// Runs fn(i) for i in [0, count) across `threads` workers. Each index is
// handled exactly once and writes only its own slot, so the partitioning
// cannot affect results.
template <typename Fn>
void parallel_for(long count, int threads, Fn&& fn) {
  if (threads <= 1 || count < 64) {
    for (long i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  long chunk = (count + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    long lo = t * chunk, hi = std::min(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (long i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& th : pool) th.join();
}

// Exact rational enumeration of the box sum, nested-loop order.
inline void exact_enumerate(const std::vector<int>& w, long M, int coord, long partial_sum,
                            BigInt& denom_partial, Rational& acc, BigInt& terms) {
  const int free_coords = static_cast<int>(w.size()) - 1;
  if (coord == free_coords) {
    if (partial_sum == 0) return;
    long v = partial_sum < 0 ? -partial_sum : partial_sum;
    BigInt denom = denom_partial * bigint_pow(BigInt(v), static_cast<unsigned long>(w.back()));
    acc += Rational(BigInt(1), denom);
    terms += 1;
    return;
  }
  for (long a = -M; a <= M; ++a) {
    if (a == 0) continue;
    long av = a < 0 ? -a : a;
    BigInt saved = denom_partial;
    denom_partial *= bigint_pow(BigInt(av), static_cast<unsigned long>(w[coord]));
    exact_enumerate(w, M, coord + 1, partial_sum + a, denom_partial, acc, terms);
    denom_partial = saved;
  }
}

// f[a+M] = |a|^{-w}, a in [-M,M], zero slot at a = 0.
inline std::vector<BigFloat> coordinate_sequence(int weight, long M, int digits) {
  std::vector<BigFloat> f(static_cast<std::size_t>(2 * M + 1), BigFloat(0L, digits));
  BigFloat one(1L, digits);
  for (long a = 1; a <= M; ++a) {
    BigFloat p(bigint_pow(BigInt(a), static_cast<unsigned long>(weight)), digits);
    BigFloat inv = one / p;
    f[static_cast<std::size_t>(M + a)] = inv;
    f[static_cast<std::size_t>(M - a)] = inv;
  }
  return f;
}

}  // namespace detail

// Truncated defining sum of zbar(w_1,...,w_n) with box cutoff M on the free
// coordinates. Depth 1 is the empty constraint set and returns exactly 0.
inline OracleResult brute_force(const WeightVector& w, long M, int digits,
                                int threads = 1, BruteMode mode = BruteMode::automatic) {
  if (M < 1) throw std::invalid_argument("brute_force: cutoff must be >= 1");
  const int n = w.depth();

  OracleResult res;
  res.value = BigFloat(0L, digits);
  res.cutoff = M;
  if (n == 1) return res;

  if (mode == BruteMode::automatic)
    mode = (n <= 4 && M <= 30) ? BruteMode::exact : BruteMode::convolution;

  if (mode == BruteMode::exact) {
    Rational acc;
    BigInt terms(0), denom(1);
    detail::exact_enumerate(w.w, M, 0, 0, denom, acc, terms);
    res.value = BigFloat(acc, digits);
    res.terms_summed = terms;
    res.exact_value = acc;
    return res;
  }

  // Distribution of the free-coordinate partial sums, one convolution per
  // coordinate after the first. dist[v + off] covers v in [-off, off].
  std::vector<BigFloat> dist = detail::coordinate_sequence(w.w[0], M, digits);
  std::vector<BigInt> counts(static_cast<std::size_t>(2 * M + 1), BigInt(0));
  for (long a = -M; a <= M; ++a)
    if (a != 0) counts[static_cast<std::size_t>(a + M)] = 1;
  long off = M;

  for (int j = 1; j + 1 <= n - 1; ++j) {
    std::vector<BigFloat> f = detail::coordinate_sequence(w.w[j], M, digits);
    long new_off = off + M;
    std::vector<BigFloat> next(static_cast<std::size_t>(2 * new_off + 1), BigFloat(0L, digits));
    std::vector<BigInt> next_counts(next.size(), BigInt(0));

    detail::parallel_for(static_cast<long>(next.size()), threads, [&](long idx) {
      long v = idx - new_off;
      long a_lo = std::max(-M, v - off), a_hi = std::min(M, v + off);
      BigFloat& slot = next[static_cast<std::size_t>(idx)];
      for (long a = a_lo; a <= a_hi; ++a) {
        if (a == 0) continue;
        slot.fma_here(f[static_cast<std::size_t>(a + M)],
                      dist[static_cast<std::size_t>(v - a + off)]);
      }
    });
    for (long idx = 0; idx < static_cast<long>(next.size()); ++idx) {
      long v = idx - new_off;
      long a_lo = std::max(-M, v - off), a_hi = std::min(M, v + off);
      BigInt& slot = next_counts[static_cast<std::size_t>(idx)];
      for (long a = a_lo; a <= a_hi; ++a) {
        if (a == 0) continue;
        slot += counts[static_cast<std::size_t>(v - a + off)];
      }
    }
    dist = std::move(next);
    counts = std::move(next_counts);
    off = new_off;
  }

  // Pair the partial-sum distribution against the dependent coordinate.
  BigFloat acc(0L, digits);
  BigFloat one(1L, digits), inv(0L, digits);
  BigInt terms(0);
  for (long v = -off; v <= off; ++v) {
    if (v == 0) continue;
    const BigFloat& dv = dist[static_cast<std::size_t>(v + off)];
    if (dv.is_zero()) continue;
    long av = v < 0 ? -v : v;
    BigFloat p(bigint_pow(BigInt(av), static_cast<unsigned long>(w.w.back())), digits);
    mpfr_div(inv.raw(), one.raw(), p.raw(), MPFR_RNDN);
    acc.fma_here(dv, inv);
    terms += counts[static_cast<std::size_t>(v + off)];
  }
  res.value = std::move(acc);
  res.terms_summed = std::move(terms);
  return res;
}

// zbar_n(1,...,1) through the sign-split decomposition
//   2 sum_{p=0}^{n-1} C(n-1,p) sigma(p, n-1-p)
// with every sigma truncated at the same index S. One shared harmonic-state
// walk covers all p.
inline BigFloat sigma_sum_eval(int n, long terms, int digits) {
  if (n < 1) throw std::invalid_argument("sigma_sum_eval: n must be >= 1");
  if (terms < 1) throw std::invalid_argument("sigma_sum_eval: terms must be >= 1");
  if (n == 1) return BigFloat(0L, digits);  // 2 sigma(0,0) = 0

  std::vector<comb::SigmaComponent> comps;
  for (int p = 1; p <= n - 1; ++p) {
    int m = n - 1 - p;
    Rational weight(2 * binomial(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(p)) *
                    factorial(static_cast<unsigned long>(p)) *
                    factorial(static_cast<unsigned long>(m) + 1));
    comps.push_back({p, m, weight});
  }
  auto partials = comb::sigma_weighted_partials(comps, terms, digits);
  BigFloat acc(0L, digits);
  for (const auto& part : partials) acc += part;
  return acc;
}

// Convergence-proof bound: zbar_n <= n! 2^{2n-3} zeta(2) for n >= 2; the
// n = 1 sum is empty.
inline BigFloat upper_bound(int n, int digits) {
  if (n < 1) throw std::invalid_argument("upper_bound: n must be >= 1");
  if (n == 1) return BigFloat(0L, digits);
  BigInt scale = factorial(static_cast<unsigned long>(n)) *
                 pow2(static_cast<unsigned long>(2 * n - 3));
  return BigFloat(scale, digits) * constants::zeta_int(2, digits);
}

struct GaussCheck {
  BigFloat lhs;       // sum_{s=0}^{S} (x^(s)/s!)^2, rising factorials built multiplicatively
  BigFloat rhs;       // exp(sum_{k>=2} (2^k-2) zeta(k)/k x^k), tail below 10^{5-digits}
  BigFloat abs_diff;
  long terms = 0;
  int zeta_terms_used = 0;
};

// Numerical check of sum_s (x^(s)/s!)^2 = Gamma(1-2x)/Gamma(1-x)^2 on
// 0 <= x < 1/2, with the right-hand side produced from the log series.
inline GaussCheck gauss_identity_check(const BigFloat& x, long terms, int digits) {
  BigFloat zero(0L, digits), half(1L, digits);
  half /= 2UL;
  if (x < zero || x >= half)
    throw std::domain_error("gauss_identity_check: x must lie in [0, 1/2)");
  if (terms < 1) throw std::invalid_argument("gauss_identity_check: terms must be >= 1");

  GaussCheck out;
  out.terms = terms;

  // lhs: t_0 = 1, t_s = t_{s-1} (x+s-1)/s, accumulate t_s^2.
  BigFloat t(1L, digits), lhs(1L, digits), factor(0L, digits), tsq(0L, digits);
  for (long s = 1; s <= terms; ++s) {
    mpfr_add_ui(factor.raw(), x.raw(), static_cast<unsigned long>(s - 1), MPFR_RNDN);
    mpfr_mul(t.raw(), t.raw(), factor.raw(), MPFR_RNDN);
    mpfr_div_ui(t.raw(), t.raw(), static_cast<unsigned long>(s), MPFR_RNDN);
    mpfr_sqr(tsq.raw(), t.raw(), MPFR_RNDN);
    lhs += tsq;
  }
  out.lhs = lhs;

  // rhs: sum the log series until the geometric tail bound
  // (2x)^{K+1}/(1-2x) drops below 10^{5-digits}.
  BigFloat log_acc(0L, digits);
  if (!x.is_zero()) {
    BigFloat threshold = BigFloat::pow10(-(digits - 5), digits);
    BigFloat two_x = x + x;
    BigFloat tail_scale = BigFloat(1L, digits) / (BigFloat(1L, digits) - two_x);
    BigFloat pw2(1L, digits), pw1(1L, digits), term(0L, digits);
    int k = 1;
    pw2 = two_x;
    pw1 = x;
    while (true) {
      ++k;
      pw2 *= two_x;
      pw1 *= x;
      // (2^k - 2) x^k = (2x)^k - 2 x^k
      term = pw2 - (pw1 + pw1);
      term /= static_cast<unsigned long>(k);
      term *= constants::zeta_int(k, digits);
      log_acc += term;
      if (pw2 * tail_scale < threshold) break;
      if (k > 4'000'000) throw std::runtime_error("gauss_identity_check: series too slow");
    }
    out.zeta_terms_used = k - 1;
  }
  out.rhs = BigFloat::exp_of(log_acc);
  out.abs_diff = (out.lhs - out.rhs).abs();
  return out;
}

}  // namespace mtz::oracle

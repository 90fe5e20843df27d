#pragma once

// Exact integer combinatorics: unsigned Stirling numbers of the first kind
// [s,k] (row recurrence [s,k] = [s-1,k-1] + (s-1)[s-1,k]), the composition
// sums h_n(s) = (n!/s!) [s,n], the convolution c_n(s) = sum_p [s,p][s,n-p],
// and integer partition counts via Euler's pentagonal recurrence.
//
// The sigma partial sums
//   sigma(p,m) = p! (m+1)! sum_s [s,p][s,m+1] / (s!)^2
// are accumulated in floating point through the normalization
//   [s,p] = (s-1)! e_{p-1}(1, 1/2, ..., 1/(s-1)),
// where e_j is the elementary symmetric function. One HarmonicState walk
// then yields every needed term as e_{p-1} e_m / s^2 without any factorial
// blowup; exact big-integer rows are reserved for small-s cross-checks.

#include <mtz/bigfloat.hpp>
#include <mtz/bigint.hpp>
#include <mtz/rational.hpp>

#include <algorithm>
#include <mutex>
#include <stdexcept>
#include <vector>

namespace mtz::comb {

struct StirlingRow {
  int s = 0;
  std::vector<BigInt> entries;  // entries[k] = [s,k] for k = 0..s
};

namespace detail {

struct StirlingCache {
  std::mutex mu;
  std::vector<StirlingRow> rows;  // rows[s]
};

inline StirlingCache& stirling_cache() {
  static StirlingCache c;
  return c;
}

struct PartitionCache {
  std::mutex mu;
  std::vector<BigInt> p{BigInt(1)};  // p[0] = 1
};

inline PartitionCache& partition_cache() {
  static PartitionCache c;
  return c;
}

}  // namespace detail

inline StirlingRow stirling_row(int s) {
  if (s < 0) throw std::invalid_argument("stirling_row: s must be >= 0");
  auto& cache = detail::stirling_cache();
  std::scoped_lock lock(cache.mu);
  if (cache.rows.empty()) cache.rows.push_back({0, {BigInt(1)}});
  while (static_cast<int>(cache.rows.size()) <= s) {
    const StirlingRow& prev = cache.rows.back();
    StirlingRow next;
    next.s = prev.s + 1;
    next.entries.assign(next.s + 1, BigInt(0));
    for (int k = 0; k <= prev.s; ++k) {
      next.entries[k + 1] += prev.entries[k];
      next.entries[k] += prev.s * prev.entries[k];
    }
    cache.rows.push_back(std::move(next));
  }
  return cache.rows[s];
}

// [s,k]; indices outside 0 <= k <= s yield 0.
inline BigInt stirling1_unsigned(int s, int k) {
  if (s < 0) throw std::invalid_argument("stirling1_unsigned: s must be >= 0");
  if (k < 0 || k > s) return BigInt(0);
  return stirling_row(s).entries[k];
}

// h_n(s) = sum over compositions of s into n positive parts of 1/(product
// of parts), evaluated exactly as (n!/s!) [s,n]. Zero when s < n.
inline Rational h_sum(int n, int s) {
  if (n < 0 || s < 0) throw std::invalid_argument("h_sum: indices must be >= 0");
  if (s < n) return Rational(0);
  BigInt st = stirling1_unsigned(s, n);
  return Rational(factorial(static_cast<unsigned long>(n)) * st,
                  factorial(static_cast<unsigned long>(s)));
}

// c_n(s) = sum_{p=0}^{n} [s,p][s,n-p], the self-convolution of row s.
inline BigInt c_sum(int n, int s) {
  if (n < 0 || s < 0) throw std::invalid_argument("c_sum: indices must be >= 0");
  const StirlingRow row = stirling_row(s);
  BigInt acc(0);
  for (int p = 0; p <= n; ++p) {
    if (p > s || n - p > s || n - p < 0) continue;
    acc += row.entries[p] * row.entries[n - p];
  }
  return acc;
}

// 2 sum_p (n-p) [s,p][s,n-p] == n c_n(s), exact.
inline bool symmetrization_identity_check(int n, int s) {
  if (n < 0 || s < 0)
    throw std::invalid_argument("symmetrization_identity_check: indices must be >= 0");
  const StirlingRow row = stirling_row(s);
  BigInt lhs(0);
  for (int p = 0; p <= n; ++p) {
    if (p > s || n - p > s || n - p < 0) continue;
    lhs += BigInt(n - p) * row.entries[p] * row.entries[n - p];
  }
  return 2 * lhs == n * c_sum(n, s);
}

// Number of integer partitions of n; pentagonal-number recurrence.
inline BigInt partition_count(int n) {
  if (n < 0) throw std::invalid_argument("partition_count: n must be >= 0");
  auto& cache = detail::partition_cache();
  std::scoped_lock lock(cache.mu);
  while (static_cast<int>(cache.p.size()) <= n) {
    int m = static_cast<int>(cache.p.size());
    BigInt acc(0);
    for (int k = 1;; ++k) {
      long g1 = static_cast<long>(k) * (3L * k - 1) / 2;
      long g2 = static_cast<long>(k) * (3L * k + 1) / 2;
      if (g1 > m && g2 > m) break;
      BigInt contrib(0);
      if (g1 <= m) contrib += cache.p[m - g1];
      if (g2 <= m) contrib += cache.p[m - g2];
      if (k % 2 == 1)
        acc += contrib;
      else
        acc -= contrib;
    }
    cache.p.push_back(std::move(acc));
  }
  return cache.p[n];
}

// Elementary symmetric functions e_0..e_P of {1, 1/2, ..., 1/(s-1)},
// updated one harmonic term at a time. The state is single-owner mutable.
class HarmonicState {
 public:
  // Tracks e_0..e_{max_index}; starts at s = 1 (empty variable set).
  HarmonicState(int max_index, int digits)
      : s_(1), esym_(static_cast<std::size_t>(max_index) + 1, BigFloat(0L, digits)),
        inv_s_(0L, digits) {
    esym_[0] = BigFloat(1L, digits);
  }

  long s() const { return s_; }
  // e_k(1, ..., 1/(s-1)); k beyond the tracked range is not available.
  const BigFloat& esym(int k) const { return esym_[static_cast<std::size_t>(k)]; }

  // Adds the variable 1/s and moves to s+1: e_k += e_{k-1}/s, k descending.
  void advance() {
    mpfr_set_ui(inv_s_.raw(), static_cast<unsigned long>(s_), MPFR_RNDN);
    mpfr_ui_div(inv_s_.raw(), 1, inv_s_.raw(), MPFR_RNDN);
    for (std::size_t k = esym_.size() - 1; k >= 1; --k)
      esym_[k].fma_here(esym_[k - 1], inv_s_);
    ++s_;
  }

 private:
  long s_;
  std::vector<BigFloat> esym_;
  BigFloat inv_s_;
};

// One term of a weighted sigma accumulation: weight * e_{p-1}(s) e_m(s)/s^2
// summed over s = 1..S. p = 0 contributes nothing ([s,0] = 0 for s >= 1).
struct SigmaComponent {
  int p = 0;
  int m = 0;
  Rational weight = Rational(1);
};

// Shared single pass over s = 1..S for several (p, m) components at once.
// Returns one partial sum per component, in input order.
inline std::vector<BigFloat> sigma_weighted_partials(const std::vector<SigmaComponent>& comps,
                                                     long terms, int digits) {
  if (terms < 1) throw std::invalid_argument("sigma_weighted_partials: need terms >= 1");
  int max_index = 0;
  for (const auto& c : comps) {
    if (c.p < 0 || c.m < 0)
      throw std::invalid_argument("sigma_weighted_partials: p, m must be >= 0");
    if (c.p >= 1) max_index = std::max({max_index, c.p - 1, c.m});
  }

  std::vector<BigFloat> acc(comps.size(), BigFloat(0L, digits));
  std::vector<BigFloat> w;
  w.reserve(comps.size());
  for (const auto& c : comps) w.emplace_back(c.weight, digits);

  HarmonicState state(max_index, digits);
  BigFloat inv_s2(0L, digits), term(0L, digits);
  for (long s = 1; s <= terms; ++s) {
    mpfr_set_ui(inv_s2.raw(), static_cast<unsigned long>(s), MPFR_RNDN);
    mpfr_ui_div(inv_s2.raw(), 1, inv_s2.raw(), MPFR_RNDN);
    mpfr_sqr(inv_s2.raw(), inv_s2.raw(), MPFR_RNDN);
    for (std::size_t j = 0; j < comps.size(); ++j) {
      if (comps[j].p < 1) continue;
      mpfr_mul(term.raw(), state.esym(comps[j].p - 1).raw(), state.esym(comps[j].m).raw(),
               MPFR_RNDN);
      mpfr_mul(term.raw(), term.raw(), inv_s2.raw(), MPFR_RNDN);
      acc[j].fma_here(term, w[j]);
    }
    state.advance();
  }
  return acc;
}

// Partial sum of sigma(p,m) = p!(m+1)! sum_{s<=S} [s,p][s,m+1]/(s!)^2.
// Monotone non-decreasing in S; identically zero for p = 0.
inline BigFloat sigma_partial(int p, int m, long terms, int digits) {
  if (p < 0 || m < 0) throw std::invalid_argument("sigma_partial: p, m must be >= 0");
  if (terms < 1) throw std::invalid_argument("sigma_partial: need terms >= 1");
  if (p == 0) return BigFloat(0L, digits);
  Rational prefactor(factorial(static_cast<unsigned long>(p)) *
                     factorial(static_cast<unsigned long>(m) + 1));
  auto sums = sigma_weighted_partials({{p, m, prefactor}}, terms, digits);
  return sums[0];
}

}  // namespace mtz::comb

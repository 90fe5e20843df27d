#pragma once

// The commutative algebra whose indeterminates are zeta values at integer
// arguments >= 2. A monomial is a multiset of arguments (zeta(2)^2 zeta(4)
// is {2,2,4}); a polynomial maps monomials to exact rational coefficients,
// never storing zeros.
//
// Monomials are ordered by total weight, then lexicographically on the
// parts taken in descending order. Within a fixed weight this is exactly
// the order the explicit tables are written in, so map iteration prints
// naturally.

#include <mtz/bigfloat.hpp>
#include <mtz/constants.hpp>
#include <mtz/rational.hpp>

#include <algorithm>
#include <compare>
#include <map>
#include <stdexcept>
#include <vector>

namespace mtz {

class ZetaMonomial {
 public:
  ZetaMonomial() = default;  // the constant monomial

  explicit ZetaMonomial(std::vector<int> args) : args_(std::move(args)) {
    for (int a : args_)
      if (a < 2) throw std::invalid_argument("ZetaMonomial: arguments must be >= 2");
    std::sort(args_.begin(), args_.end());
  }

  static ZetaMonomial single(int k) { return ZetaMonomial(std::vector<int>{k}); }

  const std::vector<int>& args() const { return args_; }
  bool is_constant() const { return args_.empty(); }
  int degree() const { return static_cast<int>(args_.size()); }

  int weight() const {
    int w = 0;
    for (int a : args_) w += a;
    return w;
  }

  // Multiset union of the arguments.
  ZetaMonomial operator*(const ZetaMonomial& o) const {
    ZetaMonomial r;
    r.args_.resize(args_.size() + o.args_.size());
    std::merge(args_.begin(), args_.end(), o.args_.begin(), o.args_.end(), r.args_.begin());
    return r;
  }

  friend bool operator==(const ZetaMonomial& a, const ZetaMonomial& b) {
    return a.args_ == b.args_;
  }

  friend std::strong_ordering operator<=>(const ZetaMonomial& a, const ZetaMonomial& b) {
    if (auto c = a.weight() <=> b.weight(); c != 0) return c;
    return std::lexicographical_compare_three_way(a.args_.rbegin(), a.args_.rend(),
                                                  b.args_.rbegin(), b.args_.rend());
  }

 private:
  std::vector<int> args_;
};

class ZetaPolynomial {
 public:
  using TermMap = std::map<ZetaMonomial, Rational>;

  ZetaPolynomial() = default;  // zero

  static ZetaPolynomial zero() { return {}; }

  static ZetaPolynomial constant(const Rational& c) {
    ZetaPolynomial p;
    if (!c.is_zero()) p.terms_[ZetaMonomial()] = c;
    return p;
  }

  static ZetaPolynomial one() { return constant(Rational(1)); }

  static ZetaPolynomial term(ZetaMonomial m, const Rational& c) {
    ZetaPolynomial p;
    if (!c.is_zero()) p.terms_[std::move(m)] = c;
    return p;
  }

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  Rational coefficient(const ZetaMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const ZetaMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  ZetaPolynomial& operator+=(const ZetaPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
  }
  ZetaPolynomial& operator-=(const ZetaPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
  }
  ZetaPolynomial& operator*=(const Rational& s) {
    if (s.is_zero()) {
      terms_.clear();
    } else {
      for (auto& [m, c] : terms_) c *= s;
    }
    return *this;
  }

  friend ZetaPolynomial operator+(ZetaPolynomial a, const ZetaPolynomial& b) { return a += b; }
  friend ZetaPolynomial operator-(ZetaPolynomial a, const ZetaPolynomial& b) { return a -= b; }
  friend ZetaPolynomial operator*(ZetaPolynomial a, const Rational& s) { return a *= s; }
  friend ZetaPolynomial operator*(const Rational& s, ZetaPolynomial a) { return a *= s; }

  friend ZetaPolynomial operator*(const ZetaPolynomial& a, const ZetaPolynomial& b) {
    ZetaPolynomial r;
    for (const auto& [ma, ca] : a.terms_)
      for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
    return r;
  }

  ZetaPolynomial operator-() const {
    ZetaPolynomial r(*this);
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
  }

  friend bool operator==(const ZetaPolynomial& a, const ZetaPolynomial& b) {
    return a.terms_ == b.terms_;
  }

  // Every stored monomial has weight exactly n (vacuously true for zero).
  bool is_homogeneous(int n) const {
    for (const auto& [m, c] : terms_)
      if (m.weight() != n) return false;
    return true;
  }

  // Numeric value with zeta(k) substituted for each indeterminate.
  BigFloat evaluate_zeta(int digits) const {
    return evaluate(digits, [&](int k) { return constants::zeta_int(k, digits); });
  }

  // Numeric value with eta(k) substituted instead (for eta-labelled forms).
  BigFloat evaluate_eta(int digits) const {
    return evaluate(digits, [&](int k) { return constants::eta_int(k, digits); });
  }

  template <typename ValueFn>
  BigFloat evaluate(int digits, ValueFn&& value_of) const {
    if (digits < 10) throw std::invalid_argument("evaluate: precision must be >= 10 digits");
    BigFloat acc(0L, digits);
    for (const auto& [m, c] : terms_) {
      BigFloat prod(c, digits);
      for (int a : m.args()) prod *= value_of(a);
      acc += prod;
    }
    return acc;
  }

 private:
  TermMap terms_;
};

// Largest common rational factor of all coefficients (display helper);
// returns 1 for the zero polynomial.
inline Rational polynomial_content(const ZetaPolynomial& p) {
  Rational g(0);
  for (const auto& [m, c] : p.terms()) g = rational_content(g, c);
  if (g.is_zero()) return Rational(1);
  return g;
}

}  // namespace mtz

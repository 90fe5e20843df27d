#pragma once

// Exact rational numbers. Values are always canonical: lowest terms,
// positive denominator, 0 stored as 0/1.

#include <mtz/bigint.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace mtz {

class Rational {
 public:
  Rational() : q_(0) {}
  Rational(long n) : q_(static_cast<signed long>(n)) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : q_(n) {}                   // NOLINT(google-explicit-constructor)

  Rational(long n, long d) : Rational(BigInt(n), BigInt(d)) {}

  Rational(const BigInt& num, const BigInt& den) : q_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    q_.canonicalize();
  }

  static Rational from_string(const std::string& s) {
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
      throw std::invalid_argument("not a rational: \"" + s + "\"");
    if (q.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    q.canonicalize();
    Rational r;
    r.q_ = q;
    return r;
  }

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }

  bool is_zero() const { return q_ == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw std::invalid_argument("Rational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const {
    Rational r;
    r.q_ = -q_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
  }

  Rational abs() const {
    Rational r;
    r.q_ = ::abs(q_);
    return r;
  }

  std::string to_string() const {
    if (is_integer()) return q_.get_num().get_str();
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
  }

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

// gcd of |a| and |b| extended to rationals: gcd(num)/lcm(den). Used to pull
// the common factor out of a polynomial for display.
inline Rational rational_content(const Rational& a, const Rational& b) {
  if (a.is_zero()) return b.abs();
  if (b.is_zero()) return a.abs();
  return Rational(gcd(a.num(), b.num()), lcm(a.den(), b.den()));
}

}  // namespace mtz

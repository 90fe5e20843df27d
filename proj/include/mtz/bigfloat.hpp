#pragma once

// Arbitrary-precision reals on top of MPFR. Precision is tracked in decimal
// digits; the underlying binary precision carries 32 guard bits on top of
// the requested digit count. Binary operations evaluate at the larger of
// the two operand precisions, rounding to nearest.

#include <mpfr.h>

#include <mtz/rational.hpp>

#include <algorithm>
#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace mtz {

class BigFloat {
 public:
  static constexpr int kDefaultDigits = 50;

  static mpfr_prec_t digits_to_bits(int digits) {
    if (digits < 1) throw std::invalid_argument("BigFloat: precision must be >= 1 digit");
    return static_cast<mpfr_prec_t>(std::ceil(digits * 3.321928094887362)) + 32;
  }

  BigFloat() : BigFloat(kDefaultDigits) {}

  explicit BigFloat(int digits) : digits_(digits) {
    mpfr_init2(v_, digits_to_bits(digits));
    mpfr_set_zero(v_, 1);
  }

  BigFloat(long value, int digits) : digits_(digits) {
    mpfr_init2(v_, digits_to_bits(digits));
    mpfr_set_si(v_, value, MPFR_RNDN);
  }

  BigFloat(unsigned long value, int digits) : digits_(digits) {
    mpfr_init2(v_, digits_to_bits(digits));
    mpfr_set_ui(v_, value, MPFR_RNDN);
  }

  BigFloat(const BigInt& value, int digits) : digits_(digits) {
    mpfr_init2(v_, digits_to_bits(digits));
    mpfr_set_z(v_, value.get_mpz_t(), MPFR_RNDN);
  }

  BigFloat(const Rational& value, int digits) : digits_(digits) {
    mpfr_init2(v_, digits_to_bits(digits));
    mpfr_set_q(v_, value.raw().get_mpq_t(), MPFR_RNDN);
  }

  static BigFloat from_string(const std::string& s, int digits) {
    BigFloat r(digits);
    if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
      throw std::invalid_argument("BigFloat: cannot parse \"" + s + "\"");
    return r;
  }

  BigFloat(const BigFloat& o) : digits_(o.digits_) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }

  BigFloat(BigFloat&& o) noexcept : digits_(o.digits_) {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }

  BigFloat& operator=(const BigFloat& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
      digits_ = o.digits_;
    }
    return *this;
  }

  BigFloat& operator=(BigFloat&& o) noexcept {
    if (this != &o) {
      mpfr_swap(v_, o.v_);
      digits_ = o.digits_;
    }
    return *this;
  }

  ~BigFloat() { mpfr_clear(v_); }

  int precision_digits() const { return digits_; }

  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  // --- arithmetic -------------------------------------------------------

  friend BigFloat operator+(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.digits_, b.digits_));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator-(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.digits_, b.digits_));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator*(const BigFloat& a, const BigFloat& b) {
    BigFloat r(std::max(a.digits_, b.digits_));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend BigFloat operator/(const BigFloat& a, const BigFloat& b) {
    if (b.is_zero()) throw std::invalid_argument("BigFloat: division by zero");
    BigFloat r(std::max(a.digits_, b.digits_));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  BigFloat operator-() const {
    BigFloat r(*this);
    mpfr_neg(r.v_, r.v_, MPFR_RNDN);
    return r;
  }

  BigFloat& operator+=(const BigFloat& o) { mpfr_add(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator-=(const BigFloat& o) { mpfr_sub(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator*=(const BigFloat& o) { mpfr_mul(v_, v_, o.v_, MPFR_RNDN); return *this; }
  BigFloat& operator/=(const BigFloat& o) {
    if (o.is_zero()) throw std::invalid_argument("BigFloat: division by zero");
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }

  BigFloat& operator+=(unsigned long u) { mpfr_add_ui(v_, v_, u, MPFR_RNDN); return *this; }
  BigFloat& operator-=(unsigned long u) { mpfr_sub_ui(v_, v_, u, MPFR_RNDN); return *this; }
  BigFloat& operator*=(unsigned long u) { mpfr_mul_ui(v_, v_, u, MPFR_RNDN); return *this; }
  BigFloat& operator/=(unsigned long u) {
    if (u == 0) throw std::invalid_argument("BigFloat: division by zero");
    mpfr_div_ui(v_, v_, u, MPFR_RNDN);
    return *this;
  }

  // this += a*b, one correctly rounded fused step. Hot path of the lattice
  // convolutions and series accumulators.
  void fma_here(const BigFloat& a, const BigFloat& b) {
    mpfr_fma(v_, a.v_, b.v_, v_, MPFR_RNDN);
  }

  BigFloat abs() const {
    BigFloat r(*this);
    mpfr_abs(r.v_, r.v_, MPFR_RNDN);
    return r;
  }

  BigFloat sqr() const {
    BigFloat r(digits_);
    mpfr_sqr(r.v_, v_, MPFR_RNDN);
    return r;
  }

  // x^e for integer e (e may be negative).
  static BigFloat pow_int(const BigFloat& x, long e) {
    BigFloat r(x.digits_);
    mpfr_pow_si(r.v_, x.v_, e, MPFR_RNDN);
    return r;
  }

  static BigFloat exp_of(const BigFloat& x) {
    BigFloat r(x.digits_);
    mpfr_exp(r.v_, x.v_, MPFR_RNDN);
    return r;
  }

  // 10^e, handy for tolerance thresholds.
  static BigFloat pow10(long e, int digits) {
    BigFloat r(digits);
    mpfr_ui_pow_ui(r.v_, 10, static_cast<unsigned long>(e < 0 ? -e : e), MPFR_RNDN);
    if (e < 0) mpfr_ui_div(r.v_, 1, r.v_, MPFR_RNDN);
    return r;
  }

  static BigFloat pi(int digits) {
    BigFloat r(digits);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  // --- comparisons (exact on the stored values) -------------------------

  friend bool operator==(const BigFloat& a, const BigFloat& b) {
    return mpfr_equal_p(a.v_, b.v_) != 0;
  }
  friend std::partial_ordering operator<=>(const BigFloat& a, const BigFloat& b) {
    if (mpfr_nan_p(a.v_) || mpfr_nan_p(b.v_)) return std::partial_ordering::unordered;
    int c = mpfr_cmp(a.v_, b.v_);
    return c < 0 ? std::partial_ordering::less
         : c > 0 ? std::partial_ordering::greater
                 : std::partial_ordering::equivalent;
  }

  // --- conversions -------------------------------------------------------

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  BigInt floor_to_int() const {
    BigFloat f(digits_);
    mpfr_floor(f.v_, v_);
    BigInt z;
    mpfr_get_z(z.get_mpz_t(), f.v_, MPFR_RNDN);
    return z;
  }

  // Decimal rendering with `sig` significant digits (defaults to the stated
  // precision). Fixed notation for moderate exponents, scientific otherwise.
  std::string to_string(int sig = 0) const {
    if (sig <= 0) sig = digits_;
    if (mpfr_nan_p(v_)) return "nan";
    if (mpfr_inf_p(v_)) return sign() < 0 ? "-inf" : "inf";
    if (is_zero()) return "0";

    mpfr_exp_t exp10 = 0;
    char* raw = mpfr_get_str(nullptr, &exp10, 10, static_cast<size_t>(sig), v_, MPFR_RNDN);
    std::string mant(raw);
    mpfr_free_str(raw);

    bool neg = !mant.empty() && mant[0] == '-';
    if (neg) mant.erase(0, 1);
    // value = 0.mant * 10^exp10
    while (mant.size() > 1 && mant.back() == '0') mant.pop_back();
    long e = static_cast<long>(exp10) - 1;  // scientific exponent

    std::string out;
    if (e >= -4 && e < sig) {
      if (e >= 0) {
        if (static_cast<size_t>(e) + 1 >= mant.size()) {
          out = mant + std::string(static_cast<size_t>(e) + 1 - mant.size(), '0');
        } else {
          out = mant.substr(0, static_cast<size_t>(e) + 1) + "." +
                mant.substr(static_cast<size_t>(e) + 1);
        }
      } else {
        out = "0." + std::string(static_cast<size_t>(-e - 1), '0') + mant;
      }
    } else {
      out = mant.substr(0, 1);
      if (mant.size() > 1) out += "." + mant.substr(1);
      out += "e" + std::string(e >= 0 ? "+" : "-") + std::to_string(e >= 0 ? e : -e);
    }
    return (neg ? "-" : "") + out;
  }

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  mpfr_t v_;
  int digits_;
};

// |a - b| <= 10^{-tol_digits} * max(1, |b|)
inline bool agree_to_digits(const BigFloat& a, const BigFloat& b, int tol_digits) {
  BigFloat diff = (a - b).abs();
  BigFloat scale = b.abs();
  if (scale < BigFloat(1L, b.precision_digits())) scale = BigFloat(1L, b.precision_digits());
  return diff <= scale * BigFloat::pow10(-tol_digits, b.precision_digits());
}

}  // namespace mtz

#pragma once

#include <mpfr.h>

#include <string>
#include <string_view>
#include <utility>

#include "geomin/errors.hpp"

namespace geomin {

/// Extended-precision real number backed by MPFR.
///
/// Every value carries its own mantissa precision in bits. Binary operators
/// allocate the result at the wider of the two operand precisions; compound
/// assignments keep the precision of the target. All rounding is to nearest
/// (ties to even), so any sequence of operations on equal-precision inputs
/// is bit-for-bit reproducible across runs and platforms.
class Real {
 public:
  /// Zero at the given precision.
  explicit Real(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }

  /// Exact integer value at the given precision.
  Real(long value, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_si(v_, value, MPFR_RNDN);
  }

  /// Default-constructed values are NaN; they poison anything computed
  /// from them, which makes accidental use visible.
  Real() {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_set_nan(v_);
  }

  Real(const Real& other) {
    mpfr_init2(v_, mpfr_get_prec(other.v_));
    mpfr_set(v_, other.v_, MPFR_RNDN);
  }

  Real(Real&& other) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, other.v_);
  }

  Real& operator=(const Real& other) {
    if (this != &other) {
      mpfr_set_prec(v_, mpfr_get_prec(other.v_));
      mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
  }

  Real& operator=(Real&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
  }

  ~Real() { mpfr_clear(v_); }

  /// Parses a decimal string, rounding to `prec` bits.
  static Real parse(std::string_view text, mpfr_prec_t prec);

  /// 2^e, exact.
  static Real two_pow(long e, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_ui_2exp(r.v_, 1, e, MPFR_RNDN);
    return r;
  }

  /// num/den rounded once.
  static Real ratio(long num, long den, mpfr_prec_t prec) {
    Real r(num, prec);
    mpfr_div_si(r.v_, r.v_, den, MPFR_RNDN);
    return r;
  }

  static Real pi(mpfr_prec_t prec) {
    Real r(prec);
    mpfr_const_pi(r.v_, MPFR_RNDN);
    return r;
  }

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }

  /// Copy rounded to a (usually lower) precision.
  Real rounded_to(mpfr_prec_t prec) const {
    Real r(prec);
    mpfr_set(r.v_, v_, MPFR_RNDN);
    return r;
  }

  int sgn() const { return mpfr_sgn(v_); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  bool is_finite() const { return mpfr_number_p(v_) != 0; }
  bool is_integer() const { return mpfr_integer_p(v_) != 0; }

  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  long to_long() const { return mpfr_get_si(v_, MPFR_RNDN); }

  /// Fixed-point rendering with exactly `digits` decimal places,
  /// round half to even.
  std::string fixed(int digits) const;

  /// Scientific rendering with `digits` digits after the point.
  std::string sci(int digits) const;

  Real operator-() const {
    Real r(precision());
    mpfr_neg(r.v_, v_, MPFR_RNDN);
    return r;
  }

  Real& operator+=(const Real& o) {
    mpfr_add(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(const Real& o) {
    mpfr_sub(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(const Real& o) {
    mpfr_mul(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(const Real& o) {
    mpfr_div(v_, v_, o.v_, MPFR_RNDN);
    return *this;
  }
  Real& operator+=(long o) {
    mpfr_add_si(v_, v_, o, MPFR_RNDN);
    return *this;
  }
  Real& operator-=(long o) {
    mpfr_sub_si(v_, v_, o, MPFR_RNDN);
    return *this;
  }
  Real& operator*=(long o) {
    mpfr_mul_si(v_, v_, o, MPFR_RNDN);
    return *this;
  }
  Real& operator/=(long o) {
    mpfr_div_si(v_, v_, o, MPFR_RNDN);
    return *this;
  }

  friend Real operator+(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_add(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator-(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_sub(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_mul(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator/(const Real& a, const Real& b) {
    Real r(wider(a, b));
    mpfr_div(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }

  friend Real operator+(const Real& a, long b) {
    Real r(a.precision());
    mpfr_add_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend Real operator+(long a, const Real& b) { return b + a; }
  friend Real operator-(const Real& a, long b) {
    Real r(a.precision());
    mpfr_sub_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend Real operator-(long a, const Real& b) {
    Real r(b.precision());
    mpfr_si_sub(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }
  friend Real operator*(const Real& a, long b) {
    Real r(a.precision());
    mpfr_mul_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend Real operator*(long a, const Real& b) { return b * a; }
  friend Real operator/(const Real& a, long b) {
    Real r(a.precision());
    mpfr_div_si(r.v_, a.v_, b, MPFR_RNDN);
    return r;
  }
  friend Real operator/(long a, const Real& b) {
    Real r(b.precision());
    mpfr_si_div(r.v_, a, b.v_, MPFR_RNDN);
    return r;
  }

  friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.v_, b.v_) != 0; }
  friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }
  friend bool operator>=(const Real& a, const Real& b) {
    return mpfr_greaterequal_p(a.v_, b.v_) != 0;
  }
  friend bool operator==(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) == 0; }
  friend bool operator<(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) < 0; }
  friend bool operator>(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) > 0; }
  friend bool operator<=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) <= 0; }
  friend bool operator>=(const Real& a, long b) { return mpfr_cmp_si(a.v_, b) >= 0; }

  friend Real abs(const Real& a) {
    Real r(a.precision());
    mpfr_abs(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real sqrt(const Real& a) {
    Real r(a.precision());
    mpfr_sqrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real cbrt(const Real& a) {
    Real r(a.precision());
    mpfr_cbrt(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  /// Positive n-th root of a nonnegative value.
  friend Real rootn(const Real& a, unsigned long n) {
    Real r(a.precision());
    mpfr_rootn_ui(r.v_, a.v_, n, MPFR_RNDN);
    return r;
  }
  friend Real exp(const Real& a) {
    Real r(a.precision());
    mpfr_exp(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend Real log(const Real& a) {
    Real r(a.precision());
    mpfr_log(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  /// Integer power by binary exponentiation (single final rounding).
  friend Real pow_si(const Real& a, long e) {
    Real r(a.precision());
    mpfr_pow_si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }
  /// Scale by 2^e, exact.
  friend Real ldexp2(const Real& a, long e) {
    Real r(a.precision());
    mpfr_mul_2si(r.v_, a.v_, e, MPFR_RNDN);
    return r;
  }

  mpfr_srcptr raw() const { return v_; }
  mpfr_ptr raw() { return v_; }

 private:
  static mpfr_prec_t wider(const Real& a, const Real& b) {
    mpfr_prec_t pa = a.precision(), pb = b.precision();
    return pa > pb ? pa : pb;
  }

  mpfr_t v_;
};

/// Working-precision settings threaded through every numeric operation.
struct PrecisionContext {
  long mantissa_bits;
  long max_series_terms;
  Real term_epsilon;

  explicit PrecisionContext(long bits = 256, long max_terms = 10000)
      : mantissa_bits(bits),
        max_series_terms(max_terms),
        term_epsilon(Real::two_pow(3 - bits, bits < 64 ? 64 : bits)) {
    validate();
  }

  PrecisionContext(long bits, long max_terms, Real epsilon)
      : mantissa_bits(bits), max_series_terms(max_terms), term_epsilon(std::move(epsilon)) {
    validate();
  }

  /// A context with the same budget but `extra` guard bits of precision.
  PrecisionContext with_extra_bits(long extra) const {
    return PrecisionContext(mantissa_bits + extra, max_series_terms);
  }

 private:
  void validate() const {
    if (mantissa_bits < 64) {
      throw DomainError("PrecisionContext: mantissa_bits must be at least 64");
    }
    if (max_series_terms < 1) {
      throw DomainError("PrecisionContext: max_series_terms must be positive");
    }
    if (!(term_epsilon > 0)) {
      throw DomainError("PrecisionContext: term_epsilon must be positive");
    }
  }
};

}  // namespace geomin

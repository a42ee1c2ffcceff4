#pragma once

// Certified real enclosures. A Real is a closed interval [lower, upper] with
// MPFR endpoints rounded outward, so every operation returns an interval that
// contains the exact result of the same operation on any points of its inputs.

#include <mpfr.h>

#include <string>

#include "schanuel/arith.hpp"

namespace schanuel {

class Real {
 public:
  static constexpr mpfr_prec_t kDefaultPrecision = 128;

  /// Tag for constructing a zero at a given precision.
  struct Precision {
    mpfr_prec_t bits;
  };

  Real() : Real(Precision{kDefaultPrecision}) {}
  explicit Real(Precision precision);
  Real(int value, mpfr_prec_t precision = kDefaultPrecision) : Real(static_cast<long>(value), precision) {}
  Real(long value, mpfr_prec_t precision = kDefaultPrecision);
  Real(const Integer& value, mpfr_prec_t precision = kDefaultPrecision);
  Real(const Rational& value, mpfr_prec_t precision = kDefaultPrecision);
  Real(const Real& other);
  Real(Real&& other) noexcept;
  Real& operator=(const Real& other);
  Real& operator=(Real&& other) noexcept;
  ~Real();

  static Real pi(mpfr_prec_t precision = kDefaultPrecision);
  /// Smallest interval containing both endpoints' intervals.
  static Real hull(const Real& a, const Real& b);
  /// Interval [lo, hi] from rationals; lo <= hi is required.
  static Real between(const Rational& lo, const Rational& hi,
                      mpfr_prec_t precision = kDefaultPrecision);

  mpfr_prec_t precision() const { return mpfr_get_prec(lo_); }

  double lower() const;  // rounded down
  double upper() const;  // rounded up
  double mid() const;    // nearest double to the midpoint
  /// Radius around mid() that still encloses the interval, rounded up.
  double rad() const;
  /// Upper bound on the width, rounded up.
  double width() const;

  bool contains(const Rational& q) const;
  bool contains(const Real& other) const;
  bool overlaps(const Real& other) const;
  bool certainly_positive() const;
  bool certainly_less(const Real& other) const;
  bool certainly_less_equal(const Real& other) const;
  bool certainly_greater(const Rational& q) const;
  bool certainly_less(const Rational& q) const;

  /// Interval widened by |radius| on both sides.
  Real widened(const Rational& radius) const;
  /// Degenerate intervals at the endpoints.
  Real lower_point() const;
  Real upper_point() const;
  /// Same interval at a new precision (rounded outward).
  Real with_precision(mpfr_prec_t precision) const;

  Real operator-() const;
  Real& operator+=(const Real& other);
  Real& operator-=(const Real& other);
  Real& operator*=(const Real& other);
  Real& operator/=(const Real& other);

  friend Real operator+(Real a, const Real& b) { return a += b; }
  friend Real operator-(Real a, const Real& b) { return a -= b; }
  friend Real operator*(Real a, const Real& b) { return a *= b; }
  friend Real operator/(Real a, const Real& b) { return a /= b; }

  friend Real abs(const Real& x);
  friend Real sqrt(const Real& x);
  friend Real log(const Real& x);
  friend Real exp(const Real& x);
  friend Real pow(const Real& x, long exponent);
  /// x^y for x > 0.
  friend Real pow(const Real& x, const Real& y);
  friend Real max(const Real& a, const Real& b);
  friend Real min(const Real& a, const Real& b);

  /// "mid +/- rad" for humans.
  std::string to_string(int digits = 17) const;
  /// Decimal rendering of an endpoint with the requested digits.
  std::string lower_string(int digits = 20) const;
  std::string upper_string(int digits = 20) const;

  mpfr_srcptr lo() const { return lo_; }
  mpfr_srcptr hi() const { return hi_; }
  mpfr_ptr lo() { return lo_; }
  mpfr_ptr hi() { return hi_; }

 private:
  mpfr_t lo_;
  mpfr_t hi_;
};

}  // namespace schanuel

#pragma once

// Exact real quadratic irrationals a + b*sqrt(r) with rational a, b and a
// squarefree radicand r >= 1 (r = 1 means the value is the rational a).
// Signs and comparisons are decided exactly by the squaring trick.

#include <string>

#include "schanuel/arith.hpp"
#include "schanuel/real.hpp"

namespace schanuel {

class QuadIrrational {
 public:
  QuadIrrational() = default;
  QuadIrrational(const Rational& a);  // NOLINT: rationals embed implicitly
  /// a + b*sqrt(radicand); any positive radicand, square factors are pulled out.
  QuadIrrational(const Rational& a, const Rational& b, const Integer& radicand);

  const Rational& rational_part() const { return a_; }
  const Rational& surd_coefficient() const { return b_; }
  const Integer& radicand() const { return r_; }
  bool is_rational() const { return b_ == 0; }

  int sign() const;
  QuadIrrational abs() const { return sign() < 0 ? -*this : *this; }
  /// a - b*sqrt(r).
  QuadIrrational conjugate() const;
  Real to_real(mpfr_prec_t precision = Real::kDefaultPrecision) const;

  QuadIrrational operator-() const;
  friend QuadIrrational operator+(const QuadIrrational& x, const QuadIrrational& y);
  friend QuadIrrational operator-(const QuadIrrational& x, const QuadIrrational& y);
  friend QuadIrrational operator*(const QuadIrrational& x, const QuadIrrational& y);
  /// Division by a nonzero value with the same (or rational) radicand.
  friend QuadIrrational operator/(const QuadIrrational& x, const QuadIrrational& y);

  friend int compare(const QuadIrrational& x, const QuadIrrational& y);
  friend bool operator==(const QuadIrrational& x, const QuadIrrational& y);
  friend bool operator<(const QuadIrrational& x, const QuadIrrational& y) { return compare(x, y) < 0; }
  friend bool operator<=(const QuadIrrational& x, const QuadIrrational& y) { return compare(x, y) <= 0; }

  std::string to_string() const;

 private:
  void normalize();

  Rational a_ = 0;
  Rational b_ = 0;
  Integer r_ = 1;
};

QuadIrrational max(const QuadIrrational& x, const QuadIrrational& y);

}  // namespace schanuel

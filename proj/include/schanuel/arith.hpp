#pragma once

// Integer and rational helpers shared by every module: exact types, the
// error type, primality, Kronecker symbols, squarefree sieves and the
// `p/q` parser used on the command line.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace schanuel {

using Integer = mpz_class;
using Rational = mpq_class;

enum class ErrorKind {
  InvalidD,
  NotSquarefree,
  InvalidPrime,
  ZeroVector,
  DimensionMismatch,
  Reducible,
  NotPrimitive,
  UnsupportedFinitePart,
  MissingClassData,
  CoverageFailure,
  NotFundamental,
  UnsupportedDegree,
  MissingZeta,
  UnsupportedRegime,
  InvalidG,
  UnsupportedClassNumber,
  CapTooSmall,
  ScanTooSmall,
  DegenerateGrid,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

namespace arith {

/// floor(sqrt(n)) for n >= 0.
std::int64_t isqrt(std::int64_t n);
Integer isqrt(const Integer& n);
bool is_square(std::int64_t n);

bool is_prime(std::int64_t n);
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);
bool is_squarefree(std::int64_t n);

/// Signed squarefree part: n = kernel * m^2 with kernel squarefree.
std::int64_t squarefree_kernel(std::int64_t n);

/// Kronecker symbol (a/n) for n >= 1.
int kronecker(std::int64_t a, std::int64_t n);

bool is_fundamental_discriminant(std::int64_t disc);
/// Discriminant of Q(sqrt(d)) for squarefree d != 0, 1.
std::int64_t field_discriminant(std::int64_t d);

std::vector<std::int64_t> primes_up_to(std::int64_t n);
/// Fundamental discriminants with |disc| <= bound, ordered by |disc|, negative first.
std::vector<std::int64_t> fundamental_discriminants(std::int64_t bound);
std::vector<std::int8_t> mobius_table(std::int64_t n);

/// p-adic valuation; the argument must be nonzero.
int valuation(const Integer& x, std::int64_t p);
int valuation(const Rational& x, std::int64_t p);

/// Canonical num/den.
Rational ratio(const Integer& num, const Integer& den);

Integer floor(const Rational& q);
Integer ceil(const Rational& q);
Integer pow(const Integer& base, unsigned long exponent);
Rational pow(const Rational& base, long exponent);

/// Accepts "p/q" or an integer; rejects decimals (thresholds stay exact).
Rational parse_rational(std::string_view text);
/// Exact value of a decimal literal such as "-0.48121182505960344749".
Rational parse_decimal(std::string_view text);
/// Number of significant digits in a decimal literal.
int significant_digits(std::string_view text);

std::string to_string(const Rational& q);

}  // namespace arith
}  // namespace schanuel

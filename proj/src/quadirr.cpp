#include "schanuel/quadirr.hpp"

namespace schanuel {

namespace {

// Largest k with k^2 | n, and n / k^2; trial division is fine for the
// radicands that occur (discriminants of small polynomials).
std::pair<Integer, Integer> split_square(const Integer& n) {
  if (n.fits_slong_p()) {
    const std::int64_t v = n.get_si();
    std::int64_t k = 1;
    std::int64_t rest = 1;
    for (const auto& [p, e] : arith::factorize(v)) {
      for (int i = 0; i < e / 2; ++i) k *= p;
      if (e % 2) rest *= p;
    }
    return {Integer(static_cast<long>(k)), Integer(static_cast<long>(rest))};
  }
  Integer k = 1;
  Integer rest = n;
  for (unsigned long p = 2; p < 100000; ++p) {
    const Integer pp = p * p;
    while (mpz_divisible_p(rest.get_mpz_t(), pp.get_mpz_t())) {
      rest /= pp;
      k *= p;
    }
  }
  Integer s = arith::isqrt(rest);
  if (s * s == rest) return {k * s, Integer(1)};
  return {k, rest};
}

void require_same_radicand(const QuadIrrational& x, const QuadIrrational& y) {
  if (!x.is_rational() && !y.is_rational() && x.radicand() != y.radicand()) {
    throw Error(ErrorKind::InvalidArgument, "quadratic irrationals with different radicands");
  }
}

Integer common_radicand(const QuadIrrational& x, const QuadIrrational& y) {
  return x.is_rational() ? y.radicand() : x.radicand();
}

}  // namespace

QuadIrrational::QuadIrrational(const Rational& a) : a_(a) { a_.canonicalize(); }

QuadIrrational::QuadIrrational(const Rational& a, const Rational& b, const Integer& radicand)
    : a_(a), b_(b), r_(radicand) {
  if (sgn(radicand) <= 0) throw Error(ErrorKind::InvalidArgument, "radicand must be positive");
  a_.canonicalize();
  b_.canonicalize();
  auto [k, rest] = split_square(radicand);
  b_ *= k;
  r_ = rest;
  normalize();
}

void QuadIrrational::normalize() {
  if (r_ == 1) {
    a_ += b_;
    b_ = 0;
  }
  if (b_ == 0) r_ = 1;
}

int QuadIrrational::sign() const {
  const int sa = sgn(a_);
  const int sb = sgn(b_);
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // a and b*sqrt(r) have opposite signs: compare a^2 with b^2 r.
  const Rational lhs = a_ * a_;
  const Rational rhs = b_ * b_ * Rational(r_);
  const int c = cmp(lhs, rhs);
  return c > 0 ? sa : -sa;  // equality impossible for squarefree r > 1
}

QuadIrrational QuadIrrational::conjugate() const {
  QuadIrrational q = *this;
  q.b_ = -q.b_;
  return q;
}

Real QuadIrrational::to_real(mpfr_prec_t precision) const {
  if (is_rational()) return Real(a_, precision);
  return Real(a_, precision) + Real(b_, precision) * sqrt(Real(r_, precision));
}

QuadIrrational QuadIrrational::operator-() const {
  QuadIrrational q = *this;
  q.a_ = -q.a_;
  q.b_ = -q.b_;
  return q;
}

QuadIrrational operator+(const QuadIrrational& x, const QuadIrrational& y) {
  require_same_radicand(x, y);
  QuadIrrational q;
  q.a_ = x.a_ + y.a_;
  q.b_ = x.b_ + y.b_;
  q.r_ = common_radicand(x, y);
  q.normalize();
  return q;
}

QuadIrrational operator-(const QuadIrrational& x, const QuadIrrational& y) { return x + (-y); }

QuadIrrational operator*(const QuadIrrational& x, const QuadIrrational& y) {
  require_same_radicand(x, y);
  QuadIrrational q;
  q.r_ = common_radicand(x, y);
  q.a_ = x.a_ * y.a_ + x.b_ * y.b_ * Rational(q.r_);
  q.b_ = x.a_ * y.b_ + x.b_ * y.a_;
  q.normalize();
  return q;
}

QuadIrrational operator/(const QuadIrrational& x, const QuadIrrational& y) {
  require_same_radicand(x, y);
  if (y.sign() == 0) throw Error(ErrorKind::InvalidArgument, "division by zero");
  const Rational norm = y.a_ * y.a_ - y.b_ * y.b_ * Rational(y.r_);
  QuadIrrational q = x * y.conjugate();
  q.a_ /= norm;
  q.b_ /= norm;
  q.normalize();
  return q;
}

int compare(const QuadIrrational& x, const QuadIrrational& y) { return (x - y).sign(); }

bool operator==(const QuadIrrational& x, const QuadIrrational& y) {
  return x.a_ == y.a_ && x.b_ == y.b_ && (x.b_ == 0 || x.r_ == y.r_);
}

std::string QuadIrrational::to_string() const {
  if (is_rational()) return arith::to_string(a_);
  std::string s = a_ == 0 ? "" : arith::to_string(a_) + (sgn(b_) > 0 ? "+" : "");
  return s + arith::to_string(b_) + "*sqrt(" + r_.get_str() + ")";
}

QuadIrrational max(const QuadIrrational& x, const QuadIrrational& y) { return compare(x, y) >= 0 ? x : y; }

}  // namespace schanuel

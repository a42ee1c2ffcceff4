#include "schanuel/real.hpp"

#include <algorithm>
#include <cstdio>
#include <utility>

namespace schanuel {

namespace {

// Scoped MPFR temporary.
struct Tmp {
  mpfr_t v;
  explicit Tmp(mpfr_prec_t p) { mpfr_init2(v, p); }
  ~Tmp() { mpfr_clear(v); }
  Tmp(const Tmp&) = delete;
  Tmp& operator=(const Tmp&) = delete;
};

mpfr_prec_t joint(const Real& a, const Real& b) { return std::max(a.precision(), b.precision()); }

std::string endpoint_string(mpfr_srcptr x, int digits, mpfr_rnd_t rnd) {
  char* buf = nullptr;
  mpfr_asprintf(&buf, ("%." + std::to_string(digits) + "R*g").c_str(), rnd, x);
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

}  // namespace

Real::Real(Precision precision) {
  const mpfr_prec_t bits = precision.bits;
  mpfr_init2(lo_, bits);
  mpfr_init2(hi_, bits);
  mpfr_set_zero(lo_, 1);
  mpfr_set_zero(hi_, 1);
}

Real::Real(long value, mpfr_prec_t precision) {
  mpfr_init2(lo_, precision);
  mpfr_init2(hi_, precision);
  mpfr_set_si(lo_, value, MPFR_RNDD);
  mpfr_set_si(hi_, value, MPFR_RNDU);
}

Real::Real(const Integer& value, mpfr_prec_t precision) {
  mpfr_init2(lo_, precision);
  mpfr_init2(hi_, precision);
  mpfr_set_z(lo_, value.get_mpz_t(), MPFR_RNDD);
  mpfr_set_z(hi_, value.get_mpz_t(), MPFR_RNDU);
}

Real::Real(const Rational& value, mpfr_prec_t precision) {
  mpfr_init2(lo_, precision);
  mpfr_init2(hi_, precision);
  mpfr_set_q(lo_, value.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(hi_, value.get_mpq_t(), MPFR_RNDU);
}

Real::Real(const Real& other) {
  mpfr_init2(lo_, other.precision());
  mpfr_init2(hi_, other.precision());
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
}

Real::Real(Real&& other) noexcept {
  mpfr_init2(lo_, MPFR_PREC_MIN);
  mpfr_init2(hi_, MPFR_PREC_MIN);
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
}

Real& Real::operator=(const Real& other) {
  if (this == &other) return *this;
  mpfr_set_prec(lo_, other.precision());
  mpfr_set_prec(hi_, other.precision());
  mpfr_set(lo_, other.lo_, MPFR_RNDD);
  mpfr_set(hi_, other.hi_, MPFR_RNDU);
  return *this;
}

Real& Real::operator=(Real&& other) noexcept {
  mpfr_swap(lo_, other.lo_);
  mpfr_swap(hi_, other.hi_);
  return *this;
}

Real::~Real() {
  mpfr_clear(lo_);
  mpfr_clear(hi_);
}

Real Real::pi(mpfr_prec_t precision) {
  Real r(Precision{precision});
  mpfr_const_pi(r.lo_, MPFR_RNDD);
  mpfr_const_pi(r.hi_, MPFR_RNDU);
  return r;
}

Real Real::hull(const Real& a, const Real& b) {
  Real r(Precision{joint(a, b)});
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Real Real::between(const Rational& lo, const Rational& hi, mpfr_prec_t precision) {
  if (lo > hi) throw Error(ErrorKind::InvalidArgument, "Real::between with lo > hi");
  Real r(Precision{precision});
  mpfr_set_q(r.lo_, lo.get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(r.hi_, hi.get_mpq_t(), MPFR_RNDU);
  return r;
}

double Real::lower() const { return mpfr_get_d(lo_, MPFR_RNDD); }
double Real::upper() const { return mpfr_get_d(hi_, MPFR_RNDU); }

double Real::mid() const {
  Tmp m(precision() + 1);
  mpfr_add(m.v, lo_, hi_, MPFR_RNDN);
  mpfr_div_2ui(m.v, m.v, 1, MPFR_RNDN);
  return mpfr_get_d(m.v, MPFR_RNDN);
}

double Real::rad() const {
  const double m = mid();
  Tmp a(precision() + 64), b(precision() + 64);
  mpfr_set_d(a.v, m, MPFR_RNDN);
  mpfr_sub(b.v, hi_, a.v, MPFR_RNDU);
  mpfr_sub(a.v, a.v, lo_, MPFR_RNDU);
  mpfr_max(a.v, a.v, b.v, MPFR_RNDU);
  return std::max(0.0, mpfr_get_d(a.v, MPFR_RNDU));
}

double Real::width() const {
  Tmp w(precision());
  mpfr_sub(w.v, hi_, lo_, MPFR_RNDU);
  return mpfr_get_d(w.v, MPFR_RNDU);
}

bool Real::contains(const Rational& q) const {
  return mpfr_cmp_q(lo_, q.get_mpq_t()) <= 0 && mpfr_cmp_q(hi_, q.get_mpq_t()) >= 0;
}

bool Real::contains(const Real& other) const {
  return mpfr_lessequal_p(lo_, other.lo_) && mpfr_greaterequal_p(hi_, other.hi_);
}

bool Real::overlaps(const Real& other) const {
  return mpfr_lessequal_p(lo_, other.hi_) && mpfr_lessequal_p(other.lo_, hi_);
}

bool Real::certainly_positive() const { return mpfr_sgn(lo_) > 0; }
bool Real::certainly_less(const Real& other) const { return mpfr_less_p(hi_, other.lo_); }
bool Real::certainly_less_equal(const Real& other) const { return mpfr_lessequal_p(hi_, other.lo_); }
bool Real::certainly_greater(const Rational& q) const { return mpfr_cmp_q(lo_, q.get_mpq_t()) > 0; }
bool Real::certainly_less(const Rational& q) const { return mpfr_cmp_q(hi_, q.get_mpq_t()) < 0; }

Real Real::widened(const Rational& radius) const {
  Real r(*this);
  Tmp q(precision());
  const Rational a = abs(radius);
  mpfr_set_q(q.v, a.get_mpq_t(), MPFR_RNDU);
  mpfr_sub(r.lo_, r.lo_, q.v, MPFR_RNDD);
  mpfr_add(r.hi_, r.hi_, q.v, MPFR_RNDU);
  return r;
}

Real Real::with_precision(mpfr_prec_t precision) const {
  Real r(Precision{precision});
  mpfr_set(r.lo_, lo_, MPFR_RNDD);
  mpfr_set(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Real Real::operator-() const {
  Real r(Precision{precision()});
  mpfr_neg(r.lo_, hi_, MPFR_RNDD);
  mpfr_neg(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Real& Real::operator+=(const Real& other) {
  const auto p = joint(*this, other);
  mpfr_prec_round(lo_, p, MPFR_RNDD);
  mpfr_prec_round(hi_, p, MPFR_RNDU);
  mpfr_add(lo_, lo_, other.lo_, MPFR_RNDD);
  mpfr_add(hi_, hi_, other.hi_, MPFR_RNDU);
  return *this;
}

Real& Real::operator-=(const Real& other) {
  const auto p = joint(*this, other);
  mpfr_prec_round(lo_, p, MPFR_RNDD);
  mpfr_prec_round(hi_, p, MPFR_RNDU);
  Tmp t(p);
  mpfr_sub(t.v, lo_, other.hi_, MPFR_RNDD);
  mpfr_sub(hi_, hi_, other.lo_, MPFR_RNDU);
  mpfr_swap(lo_, t.v);
  return *this;
}

Real& Real::operator*=(const Real& other) {
  const auto p = joint(*this, other);
  Tmp best_lo(p), best_hi(p), t(p);
  mpfr_srcptr a[2] = {lo_, hi_};
  mpfr_srcptr b[2] = {other.lo_, other.hi_};
  mpfr_set_inf(best_lo.v, 1);
  mpfr_set_inf(best_hi.v, -1);
  for (auto x : a) {
    for (auto y : b) {
      mpfr_mul(t.v, x, y, MPFR_RNDD);
      mpfr_min(best_lo.v, best_lo.v, t.v, MPFR_RNDD);
      mpfr_mul(t.v, x, y, MPFR_RNDU);
      mpfr_max(best_hi.v, best_hi.v, t.v, MPFR_RNDU);
    }
  }
  mpfr_set_prec(lo_, p);
  mpfr_set_prec(hi_, p);
  mpfr_set(lo_, best_lo.v, MPFR_RNDD);
  mpfr_set(hi_, best_hi.v, MPFR_RNDU);
  return *this;
}

Real& Real::operator/=(const Real& other) {
  if (mpfr_sgn(other.lo_) <= 0 && mpfr_sgn(other.hi_) >= 0) {
    throw Error(ErrorKind::InvalidArgument, "division by an interval containing zero");
  }
  const auto p = joint(*this, other);
  Real inv(Precision{p});
  mpfr_ui_div(inv.lo_, 1, other.hi_, MPFR_RNDD);
  mpfr_ui_div(inv.hi_, 1, other.lo_, MPFR_RNDU);
  return *this *= inv;
}

Real abs(const Real& x) {
  if (mpfr_sgn(x.lo_) >= 0) return x;
  if (mpfr_sgn(x.hi_) <= 0) return -x;
  Real r(Real::Precision{x.precision()});
  mpfr_set_zero(r.lo_, 1);
  mpfr_neg(r.hi_, x.lo_, MPFR_RNDU);
  mpfr_max(r.hi_, r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Real Real::lower_point() const {
  Real r(Precision{precision()});
  mpfr_set(r.lo_, lo_, MPFR_RNDD);
  mpfr_set(r.hi_, lo_, MPFR_RNDU);
  return r;
}

Real Real::upper_point() const {
  Real r(Precision{precision()});
  mpfr_set(r.lo_, hi_, MPFR_RNDD);
  mpfr_set(r.hi_, hi_, MPFR_RNDU);
  return r;
}

Real sqrt(const Real& x) {
  if (mpfr_sgn(x.hi_) < 0) throw Error(ErrorKind::InvalidArgument, "sqrt of a negative interval");
  Real r(Real::Precision{x.precision()});
  if (mpfr_sgn(x.lo_) <= 0) {
    mpfr_set_zero(r.lo_, 1);
  } else {
    mpfr_sqrt(r.lo_, x.lo_, MPFR_RNDD);
  }
  mpfr_sqrt(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Real log(const Real& x) {
  if (mpfr_sgn(x.lo_) <= 0) throw Error(ErrorKind::InvalidArgument, "log of a non-positive interval");
  Real r(Real::Precision{x.precision()});
  mpfr_log(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_log(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Real exp(const Real& x) {
  Real r(Real::Precision{x.precision()});
  mpfr_exp(r.lo_, x.lo_, MPFR_RNDD);
  mpfr_exp(r.hi_, x.hi_, MPFR_RNDU);
  return r;
}

Real pow(const Real& x, long exponent) {
  if (exponent == 0) return Real(1L, x.precision());
  if (exponent < 0) return Real(1L, x.precision()) / pow(x, -exponent);
  if (exponent % 2 == 0) {
    const Real a = abs(x);
    Real r(Real::Precision{x.precision()});
    mpfr_pow_ui(r.lo_, a.lo_, static_cast<unsigned long>(exponent), MPFR_RNDD);
    mpfr_pow_ui(r.hi_, a.hi_, static_cast<unsigned long>(exponent), MPFR_RNDU);
    return r;
  }
  Real r(Real::Precision{x.precision()});
  mpfr_pow_ui(r.lo_, x.lo_, static_cast<unsigned long>(exponent), MPFR_RNDD);
  mpfr_pow_ui(r.hi_, x.hi_, static_cast<unsigned long>(exponent), MPFR_RNDU);
  return r;
}

Real pow(const Real& x, const Real& y) { return exp(y * log(x)); }

Real max(const Real& a, const Real& b) {
  Real r(Real::Precision{joint(a, b)});
  mpfr_max(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_max(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

Real min(const Real& a, const Real& b) {
  Real r(Real::Precision{joint(a, b)});
  mpfr_min(r.lo_, a.lo_, b.lo_, MPFR_RNDD);
  mpfr_min(r.hi_, a.hi_, b.hi_, MPFR_RNDU);
  return r;
}

std::string Real::to_string(int digits) const {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g +/- %.3g", digits, mid(), rad());
  return buf;
}

std::string Real::lower_string(int digits) const { return endpoint_string(lo_, digits, MPFR_RNDD); }
std::string Real::upper_string(int digits) const { return endpoint_string(hi_, digits, MPFR_RNDU); }

}  // namespace schanuel

#include "schanuel/nfq.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace schanuel {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t m) { return ((x % m) + m) % m; }

Integer lcm(const Integer& x, const Integer& y) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return r;
}

Integer gcd(const Integer& x, const Integer& y) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
  return r;
}

Integer floor_mod(const Integer& x, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
  return r;
}

// x < sqrt(n) for n > 0 not a square.
bool below_sqrt(std::int64_t x, std::int64_t n) { return x < 0 || static_cast<__int128>(x) * x < n; }

}  // namespace

std::string Field::label() const {
  if (d == 1) return "Q";
  return "Q(sqrt(" + std::to_string(d) + "))";
}

Field make_quadratic_field(std::int64_t d) {
  if (d == 0 || d == 1) throw Error(ErrorKind::InvalidD, "d must differ from 0 and 1, got " + std::to_string(d));
  if (!arith::is_squarefree(d)) {
    throw Error(ErrorKind::NotSquarefree, std::to_string(d) + " has a square factor");
  }
  Field f;
  f.d = d;
  f.disc = arith::field_discriminant(d);
  f.r = d > 0 ? 2 : 0;
  f.s = d > 0 ? 0 : 1;
  f.w = f.disc == -3 ? 6 : (f.disc == -4 ? 4 : 2);
  if (mod(d, 4) == 1) {
    f.t = 1;
    f.norm_omega = (1 - d) / 4;
  } else {
    f.t = 0;
    f.norm_omega = -d;
  }
  return f;
}

Field field_from_discriminant(std::int64_t disc) {
  if (!arith::is_fundamental_discriminant(disc)) {
    throw Error(ErrorKind::NotFundamental, std::to_string(disc) + " is not a fundamental discriminant");
  }
  return make_quadratic_field(mod(disc, 4) == 1 ? disc : disc / 4);
}

// ---------------------------------------------------------------- elements

Element::Element(const Field& field, const Rational& a, const Rational& b) : field_(field), a_(a), b_(b) {
  a_.canonicalize();
  b_.canonicalize();
  if (field.is_rational() && b != 0) throw Error(ErrorKind::InvalidArgument, "irrational element of Q");
}

Element operator+(const Element& x, const Element& y) { return Element(x.field_, x.a_ + y.a_, x.b_ + y.b_); }
Element operator-(const Element& x, const Element& y) { return Element(x.field_, x.a_ - y.a_, x.b_ - y.b_); }

Element operator*(const Element& x, const Element& y) {
  const Field& f = x.field_;
  const Rational be = x.b_ * y.b_;
  return Element(f, x.a_ * y.a_ - be * f.norm_omega, x.a_ * y.b_ + x.b_ * y.a_ + be * f.t);
}

Element operator/(const Element& x, const Element& y) { return x * y.inverse(); }

Rational Element::norm() const {
  return a_ * a_ + a_ * b_ * field_.t + b_ * b_ * field_.norm_omega;
}

Rational Element::trace() const {
  if (field_.is_rational()) return a_;
  return 2 * a_ + b_ * field_.t;
}

Element Element::conjugate() const { return Element(field_, a_ + b_ * field_.t, -b_); }

Element Element::inverse() const {
  if (is_zero()) throw Error(ErrorKind::InvalidArgument, "inverse of zero");
  if (field_.is_rational()) return Element(field_, 1 / a_);
  const Rational n = norm();
  const Element c = conjugate();
  return Element(field_, c.a_ / n, c.b_ / n);
}

Integer Element::denominator() const { return lcm(a_.get_den(), b_.get_den()); }

QuadIrrational Element::real_embedding(int index) const {
  if (field_.is_imaginary()) throw Error(ErrorKind::InvalidArgument, "no real embedding of an imaginary field");
  if (field_.is_rational()) return QuadIrrational(a_);
  const Rational half_b = b_ / 2;
  return QuadIrrational(a_ + half_b * field_.t, index == 0 ? half_b : Rational(-half_b), Integer(field_.disc));
}

std::vector<Complex> Element::embeddings(mpfr_prec_t precision) const {
  std::vector<Complex> out;
  if (field_.is_imaginary()) {
    const Rational re = a_ + b_ * field_.t / 2;
    Real im = Real(b_ / 2, precision) * sqrt(Real(Integer(-field_.disc), precision));
    out.push_back({Real(re, precision), im});
    return out;
  }
  for (int i = 0; i < field_.degree(); ++i) out.push_back({real_embedding(i).to_real(precision), Real(0L, precision)});
  return out;
}

std::string Element::to_string() const {
  if (b_ == 0) return arith::to_string(a_);
  const std::string w = field_.t == 1 ? "w" : "sqrt(" + std::to_string(field_.d) + ")";
  std::string s = a_ == 0 ? "" : arith::to_string(a_) + (b_ > 0 ? "+" : "");
  if (b_ == 1) return s + w;
  if (b_ == -1) return s + "-" + w;
  return s + arith::to_string(b_) + "*" + w;
}

// ---------------------------------------------------------------- ideals

// Hermite form of the Z-module spanned by integer vectors (x, y) = x + y*w:
// returns (A, B, C) with module = Z*(A, 0) + Z*(B, C).
namespace {

struct Hermite {
  Integer A;
  Integer B;
  Integer C;
};

Hermite hermite(const std::vector<std::pair<Integer, Integer>>& vectors) {
  bool have_pivot = false;
  Integer px = 0;
  Integer py = 0;
  Integer A = 0;
  for (const auto& [x, y] : vectors) {
    if (y == 0) {
      A = gcd(A, x);
      continue;
    }
    if (!have_pivot) {
      px = x;
      py = y;
      have_pivot = true;
      continue;
    }
    Integer g;
    Integer u;
    Integer v;
    mpz_gcdext(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t(), py.get_mpz_t(), y.get_mpz_t());
    const Integer nx = u * px + v * x;
    const Integer zx = (y / g) * px - (py / g) * x;
    px = nx;
    py = g;
    A = gcd(A, zx);
  }
  if (!have_pivot || A == 0) throw Error(ErrorKind::InvalidArgument, "generators do not span a full-rank lattice");
  if (py < 0) {
    py = -py;
    px = -px;
  }
  return {abs(A), floor_mod(px, abs(A)), py};
}

}  // namespace

Ideal hermite_ideal(const Field& field, const std::vector<Element>& zgens) {
  Integer den = 1;
  for (const auto& g : zgens) den = lcm(den, g.denominator());
  Ideal I;
  I.field_ = field;
  if (field.is_rational()) {
    Integer g = 0;
    for (const auto& e : zgens) g = gcd(g, Integer(e.a() * den));
    if (g == 0) throw Error(ErrorKind::ZeroVector, "ideal generated by zero");
    I.scale_ = Rational(g, den);
    I.scale_.canonicalize();
    return I;
  }
  std::vector<std::pair<Integer, Integer>> vecs;
  vecs.reserve(zgens.size());
  for (const auto& g : zgens) vecs.emplace_back(Integer(g.a() * den), Integer(g.b() * den));
  const Hermite h = hermite(vecs);
  if (h.A % h.C != 0 || h.B % h.C != 0) {
    throw Error(ErrorKind::InvalidArgument, "lattice is not an ideal");
  }
  I.a_ = h.A / h.C;
  I.b_ = floor_mod(h.B / h.C, I.a_);
  I.scale_ = Rational(h.C, den);
  I.scale_.canonicalize();
  return I;
}

Ideal Ideal::unit(const Field& field) {
  Ideal I;
  I.field_ = field;
  return I;
}

Ideal Ideal::principal(const Element& x) { return generated_by(x.field(), {x}); }

Ideal Ideal::generated_by(const Field& field, const std::vector<Element>& gens) {
  std::vector<Element> zgens;
  for (const auto& g : gens) {
    if (g.field() != field) throw Error(ErrorKind::InvalidArgument, "generator from another field");
    if (g.is_zero()) continue;
    zgens.push_back(g);
    if (!field.is_rational()) zgens.push_back(g * Element::omega(field));
  }
  if (zgens.empty()) throw Error(ErrorKind::ZeroVector, "ideal generated by zero");
  return hermite_ideal(field, zgens);
}

std::vector<Element> Ideal::basis() const {
  if (field_.is_rational()) return {Element(field_, scale_)};
  return {Element(field_, scale_ * a_), Element(field_, scale_ * b_, scale_)};
}

Ideal operator*(const Ideal& x, const Ideal& y) {
  const auto bx = x.basis();
  const auto by = y.basis();
  std::vector<Element> prods;
  for (const auto& u : bx) {
    for (const auto& v : by) prods.push_back(u * v);
  }
  return hermite_ideal(x.field_, prods);
}

Ideal Ideal::conjugate() const {
  std::vector<Element> gens;
  for (const auto& e : basis()) gens.push_back(e.conjugate());
  return hermite_ideal(field_, gens);
}

Ideal Ideal::inverse() const {
  // I * conj(I) = (N I)
  std::vector<Element> gens;
  const Rational n = norm();
  for (const auto& e : conjugate().basis()) gens.push_back(Element(field_, e.a() / n, e.b() / n));
  return hermite_ideal(field_, gens);
}

Ideal operator+(const Ideal& x, const Ideal& y) {
  auto gens = x.basis();
  for (const auto& e : y.basis()) gens.push_back(e);
  return hermite_ideal(x.field_, gens);
}

Rational Ideal::norm() const {
  if (field_.is_rational()) return scale_;
  return scale_ * scale_ * Rational(a_);
}

bool Ideal::contains(const Element& x) const {
  const Rational xa = x.a() / scale_;
  const Rational xb = x.b() / scale_;
  if (xa.get_den() != 1 || xb.get_den() != 1) return false;
  if (field_.is_rational()) return true;
  const Integer r = xa.get_num() - xb.get_num() * b_;
  return r % a_ == 0;
}

bool Ideal::is_integral() const {
  if (field_.is_rational()) return scale_.get_den() == 1;
  return contains(Element(field_, scale_ * a_)) && scale_.get_den() == 1;
}

std::string Ideal::to_string() const {
  if (field_.is_rational()) return "(" + arith::to_string(scale_) + ")";
  std::string s = scale_ == 1 ? "" : arith::to_string(scale_) + "*";
  return s + "[" + a_.get_str() + ", " + b_.get_str() + "+w]";
}

Ideal content_ideal(const std::vector<Element>& tuple) {
  if (tuple.empty()) throw Error(ErrorKind::ZeroVector, "empty tuple");
  const bool all_zero = std::all_of(tuple.begin(), tuple.end(), [](const Element& e) { return e.is_zero(); });
  if (all_zero) throw Error(ErrorKind::ZeroVector, "content of the zero vector");
  return Ideal::generated_by(tuple.front().field(), tuple);
}

// ---------------------------------------------------------------- places

std::string to_string(PrimeKind kind) {
  switch (kind) {
    case PrimeKind::Rational: return "rational";
    case PrimeKind::Split: return "split";
    case PrimeKind::Inert: return "inert";
    case PrimeKind::Ramified: return "ramified";
  }
  return "?";
}

namespace {

// Roots of x^2 - t x + N modulo p.
std::vector<std::int64_t> roots_mod_p(const Field& f, std::int64_t p) {
  std::vector<std::int64_t> roots;
  const std::int64_t n = mod(f.norm_omega, p);
  for (std::int64_t x = 0; x < p; ++x) {
    const __int128 v = static_cast<__int128>(x) * x - static_cast<__int128>(f.t) * x + n;
    if (v % p == 0) roots.push_back(x);
  }
  return roots;
}

}  // namespace

Ideal FinitePlace::prime_ideal() const {
  if (kind == PrimeKind::Rational || kind == PrimeKind::Inert) {
    return Ideal::principal(Element(field, Rational(Integer(static_cast<long>(p)))));
  }
  return Ideal::generated_by(field, {Element(field, Integer(static_cast<long>(p))),
                                     Element(field, Integer(static_cast<long>(-root)), 1)});
}

std::vector<FinitePlace> places_above(const Field& field, std::int64_t p) {
  if (!arith::is_prime(p)) throw Error(ErrorKind::InvalidPrime, std::to_string(p) + " is not prime");
  FinitePlace v;
  v.field = field;
  v.p = p;
  if (field.is_rational()) {
    v.Np = p;
    return {v};
  }
  const int chi = arith::kronecker(field.disc, p);
  if (chi == 0) {
    v.kind = PrimeKind::Ramified;
    v.Np = p;
    v.e = 2;
    v.d_v = 2;
    v.root = roots_mod_p(field, p).front();
    return {v};
  }
  if (chi < 0) {
    v.kind = PrimeKind::Inert;
    v.Np = p * p;
    v.f = 2;
    v.d_v = 2;
    return {v};
  }
  const auto roots = roots_mod_p(field, p);
  std::vector<FinitePlace> out;
  for (int i = 0; i < 2; ++i) {
    FinitePlace s = v;
    s.kind = PrimeKind::Split;
    s.index = i;
    s.Np = p;
    s.root = roots.at(i);
    out.push_back(s);
  }
  return out;
}

std::vector<InfinitePlace> infinite_places(const Field& field) {
  if (field.is_imaginary()) return {InfinitePlace{field, 0, 2}};
  std::vector<InfinitePlace> out;
  for (int i = 0; i < field.degree(); ++i) out.push_back(InfinitePlace{field, i, 1});
  return out;
}

namespace {

int integer_ord(const Integer& m, const FinitePlace& v) {
  const int k = arith::valuation(m, v.p);
  return v.kind == PrimeKind::Ramified ? 2 * k : k;
}

// ord of the nonzero integral element x + y*w.
int integral_ord(Integer x, Integer y, const FinitePlace& v) {
  const Field& f = v.field;
  if (v.kind == PrimeKind::Rational) return arith::valuation(x, v.p);
  auto norm = [&f](const Integer& a, const Integer& b) {
    return Integer(a * a + a * b * f.t + b * b * f.norm_omega);
  };
  if (v.kind == PrimeKind::Ramified) return arith::valuation(norm(x, y), v.p);
  if (v.kind == PrimeKind::Inert) return arith::valuation(norm(x, y), v.p) / 2;
  const Integer p = static_cast<long>(v.p);
  int k = 0;
  while (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t()) && mpz_divisible_p(y.get_mpz_t(), p.get_mpz_t())) {
    x /= p;
    y /= p;
    ++k;
  }
  const Integer r = x + y * static_cast<long>(v.root);
  if (!mpz_divisible_p(r.get_mpz_t(), p.get_mpz_t())) return k;
  return k + arith::valuation(norm(x, y), v.p);
}

}  // namespace

int ord(const Element& x, const FinitePlace& v) {
  if (x.is_zero()) throw Error(ErrorKind::InvalidArgument, "ord of zero");
  const Integer den = x.denominator();
  const Integer xa(x.a() * den);
  const Integer xb(x.b() * den);
  return integral_ord(xa, xb, v) - integer_ord(den, v);
}

int ord(const Ideal& I, const FinitePlace& v) {
  int best = 0;
  bool first = true;
  for (const auto& g : I.basis()) {
    const int o = ord(g, v);
    if (first || o < best) best = o;
    first = false;
  }
  return best;
}

Rational FiniteAbsValue::power_dv(int d_v) const {
  if (zero) return 0;
  const Rational e = exponent * d_v;
  return arith::pow(Rational(Integer(static_cast<long>(base))), e.get_num().get_si());
}

Real FiniteAbsValue::to_real(mpfr_prec_t precision) const {
  if (zero) return Real(0L, precision);
  return pow(Real(static_cast<long>(base), precision), Real(exponent, precision));
}

FiniteAbsValue absolute_value(const Element& x, const FinitePlace& v) {
  FiniteAbsValue out;
  if (x.is_zero()) {
    out.zero = true;
    return out;
  }
  out.base = v.Np;
  out.exponent = Rational(-ord(x, v), v.d_v);
  out.exponent.canonicalize();
  return out;
}

Real absolute_value(const Element& x, const InfinitePlace& v, mpfr_prec_t precision) {
  if (x.field().is_imaginary()) return sqrt(Real(x.norm(), precision));
  return abs(x.real_embedding(v.index).to_real(precision));
}

std::vector<FinitePlace> support(const Element& x) {
  if (x.is_zero()) throw Error(ErrorKind::InvalidArgument, "support of zero");
  // Primes dividing the numerator or denominator of the norm, plus those of the denominator.
  const Rational n = x.norm();
  std::set<std::int64_t> primes;
  auto collect = [&primes](const Integer& m) {
    if (!m.fits_slong_p()) throw Error(ErrorKind::InvalidArgument, "norm too large to factor");
    for (const auto& [p, e] : arith::factorize(m.get_si())) primes.insert(p);
  };
  collect(Integer(n.get_num()));
  collect(Integer(n.get_den()));
  collect(x.denominator());
  std::vector<FinitePlace> out;
  for (const auto p : primes) {
    for (const auto& v : places_above(x.field(), p)) {
      if (ord(x, v) != 0) out.push_back(v);
    }
  }
  return out;
}

// ---------------------------------------------------------------- forms, units, class numbers

std::vector<BinaryForm> reduced_forms(std::int64_t disc) {
  std::vector<BinaryForm> out;
  auto primitive = [](std::int64_t a, std::int64_t b, std::int64_t c) {
    return std::gcd(std::gcd(std::abs(a), std::abs(b)), std::abs(c)) == 1;
  };
  if (disc < 0) {
    const std::int64_t D = -disc;
    for (std::int64_t a = 1; 3 * a * a <= D; ++a) {
      for (std::int64_t b = -a + 1; b <= a; ++b) {
        if (mod(b - disc, 2) != 0) continue;
        const std::int64_t num = b * b - disc;
        if (num % (4 * a) != 0) continue;
        const std::int64_t c = num / (4 * a);
        if (c < a) continue;
        if (a == c && b < 0) continue;
        if (primitive(a, b, c)) out.push_back({a, b, c});
      }
    }
    return out;
  }
  const std::int64_t s = arith::isqrt(disc);
  for (std::int64_t b = 1; b <= s; ++b) {
    if (mod(b - disc, 2) != 0) continue;
    const std::int64_t ac = (b * b - disc) / 4;  // negative
    // sqrt(disc) - b < 2|a| < sqrt(disc) + b
    for (std::int64_t m = 1; 2 * m <= s + b; ++m) {
      if (ac % m != 0) continue;
      // sqrt(disc) - b < 2m < sqrt(disc) + b
      if (below_sqrt(2 * m + b, disc) || !below_sqrt(2 * m - b, disc)) continue;
      for (const std::int64_t a : {m, -m}) {
        const std::int64_t c = ac / a;
        if (primitive(a, b, c)) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

std::vector<std::vector<BinaryForm>> narrow_cycles(std::int64_t disc) {
  if (disc <= 0) throw Error(ErrorKind::InvalidArgument, "cycles need a positive discriminant");
  const auto forms = reduced_forms(disc);
  const std::int64_t s = arith::isqrt(disc);
  std::set<std::tuple<std::int64_t, std::int64_t, std::int64_t>> seen;
  std::vector<std::vector<BinaryForm>> cycles;
  for (const auto& f0 : forms) {
    if (seen.count({f0.a, f0.b, f0.c})) continue;
    std::vector<BinaryForm> cycle;
    BinaryForm f = f0;
    while (!seen.count({f.a, f.b, f.c})) {
      seen.insert({f.a, f.b, f.c});
      cycle.push_back(f);
      const std::int64_t m = 2 * std::abs(f.c);
      // largest b' < sqrt(disc) with b' = -b mod 2|c|
      const std::int64_t bn = -f.b + m * ((s + f.b) / m);
      f = BinaryForm{f.c, bn, (bn * bn - disc) / (4 * f.c)};
    }
    cycles.push_back(std::move(cycle));
  }
  return cycles;
}

UnitData fundamental_unit(const Field& field) {
  if (!field.is_real_quadratic()) throw Error(ErrorKind::InvalidArgument, "unit group has rank 0");
  const std::int64_t D = field.disc;
  const std::int64_t s = arith::isqrt(D);
  const std::int64_t b0 = mod(s - D, 2) == 0 ? s : s - 1;
  std::int64_t P = b0;
  std::int64_t Q = 2;
  QuadIrrational eps(1);
  int period = 0;
  do {
    eps = eps * QuadIrrational(arith::ratio(P, Q), arith::ratio(1, Q), Integer(D));
    const std::int64_t a = (P + s) / Q;
    P = a * Q - P;
    Q = (D - P * P) / Q;
    ++period;
  } while (P != b0 || Q != 2);
  return UnitData{eps, period % 2 ? -1 : 1, period};
}

Real regulator(const Field& field, mpfr_prec_t precision) {
  if (!field.is_real_quadratic()) return Real(1L, precision);
  const std::int64_t D = field.disc;
  const std::int64_t s = arith::isqrt(D);
  const std::int64_t b0 = mod(s - D, 2) == 0 ? s : s - 1;
  const Real root = sqrt(Real(D, precision));
  std::int64_t P = b0;
  std::int64_t Q = 2;
  Real sum(0L, precision);
  do {
    sum += log((Real(P, precision) + root) / Real(Q, precision));
    const std::int64_t a = (P + s) / Q;
    P = a * Q - P;
    Q = (D - P * P) / Q;
  } while (P != b0 || Q != 2);
  return sum;
}

std::int64_t narrow_class_number(const Field& field) {
  if (field.is_rational()) return 1;
  if (field.is_imaginary()) return static_cast<std::int64_t>(reduced_forms(field.disc).size());
  return static_cast<std::int64_t>(narrow_cycles(field.disc).size());
}

namespace {

int unit_norm_sign(const Field& field) {
  const std::int64_t D = field.disc;
  const std::int64_t s = arith::isqrt(D);
  const std::int64_t b0 = mod(s - D, 2) == 0 ? s : s - 1;
  std::int64_t P = b0;
  std::int64_t Q = 2;
  int period = 0;
  do {
    const std::int64_t a = (P + s) / Q;
    P = a * Q - P;
    Q = (D - P * P) / Q;
    ++period;
  } while (P != b0 || Q != 2);
  return period % 2 ? -1 : 1;
}

}  // namespace

std::int64_t class_number(const Field& field) {
  const std::int64_t hp = narrow_class_number(field);
  if (!field.is_real_quadratic()) return hp;
  return unit_norm_sign(field) < 0 ? hp : hp / 2;
}

std::vector<Ideal> class_representatives(const Field& field) {
  if (field.is_rational()) return {Ideal::unit(field)};
  std::vector<BinaryForm> forms;
  if (field.is_imaginary()) {
    forms = reduced_forms(field.disc);
  } else {
    for (const auto& c : narrow_cycles(field.disc)) forms.push_back(c.front());
  }
  std::vector<Ideal> reps;
  for (const auto& f : forms) {
    const std::int64_t a = std::abs(f.a);
    const Rational shift = arith::ratio(-f.b - field.t, 2);
    reps.push_back(Ideal::generated_by(field, {Element(field, Integer(static_cast<long>(a))),
                                               Element(field, shift, 1)}));
  }
  return reps;
}

// ---------------------------------------------------------------- invariants

std::string to_string(Provenance p) {
  switch (p) {
    case Provenance::Computed: return "computed";
    case Provenance::Supplied: return "supplied";
    case Provenance::MeasuredEnvelope: return "measured-envelope";
  }
  return "?";
}

FieldInvariants compute_invariants(const Field& field) {
  FieldInvariants inv;
  inv.label = field.label();
  inv.degree = field.degree();
  inv.disc = Integer(static_cast<long>(field.disc));
  inv.r = field.r;
  inv.s = field.s;
  inv.h = Integer(static_cast<long>(class_number(field)));
  inv.R = regulator(field);
  inv.w = field.w;
  inv.provenance = Provenance::Computed;
  inv.field = field;
  return inv;
}

namespace {

std::string trim_copy(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

long parse_int(const std::string& s, const std::string& what, int line) {
  try {
    std::size_t used = 0;
    const long v = std::stol(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": bad " + what + " '" + s + "'");
  }
}

}  // namespace

std::vector<FieldInvariants> parse_invariants(const std::string& text) {
  std::vector<FieldInvariants> out;
  std::istringstream in(text);
  std::string raw;
  int line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const auto hash = raw.find('#');
    const std::string body = trim_copy(raw.substr(0, hash));
    if (body.empty()) continue;
    std::vector<std::string> cells;
    std::stringstream ss(body);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(trim_copy(cell));
    if (cells.size() != 8) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": expected 8 fields, got " +
                                             std::to_string(cells.size()));
    }
    FieldInvariants inv;
    inv.label = cells[0];
    inv.degree = static_cast<int>(parse_int(cells[1], "degree", line));
    inv.disc = Integer(parse_int(cells[2], "disc", line));
    inv.r = static_cast<int>(parse_int(cells[3], "r", line));
    inv.s = static_cast<int>(parse_int(cells[4], "s", line));
    inv.h = Integer(parse_int(cells[5], "h", line));
    if (arith::significant_digits(cells[6]) < 15 && cells[6] != "1") {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": regulator needs at least 15 digits");
    }
    const Rational R = arith::parse_decimal(cells[6]);
    inv.R = Real(R).widened(Rational(1, Integer("1000000000000000")));
    inv.w = static_cast<int>(parse_int(cells[7], "w", line));
    inv.provenance = Provenance::Supplied;
    if (inv.degree != inv.r + 2 * inv.s || inv.degree < 1) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": degree must equal r + 2s");
    }
    if (inv.h < 1 || R <= 0 || inv.w < 2 || inv.w % 2 != 0 || inv.disc == 0) {
      throw Error(ErrorKind::ParseError, "line " + std::to_string(line) + ": invariants out of range");
    }
    out.push_back(std::move(inv));
  }
  return out;
}

std::vector<FieldInvariants> load_invariants_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open invariants file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_invariants(buf.str());
}

}  // namespace schanuel

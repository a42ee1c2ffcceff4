#include "schanuel/heights.hpp"

#include <algorithm>

namespace schanuel {

HomogeneousTuple::HomogeneousTuple(const Field& f, std::vector<Element> c) : field(f), coords(std::move(c)) {
  if (coords.size() < 2) throw Error(ErrorKind::DimensionMismatch, "a projective tuple needs at least two coordinates");
  for (const auto& e : coords) {
    if (e.field() != field) throw Error(ErrorKind::InvalidArgument, "coordinate from another field");
  }
  if (std::all_of(coords.begin(), coords.end(), [](const Element& e) { return e.is_zero(); })) {
    throw Error(ErrorKind::ZeroVector, "all coordinates are zero");
  }
}

HomogeneousTuple HomogeneousTuple::rational(const std::vector<Rational>& coords) {
  const Field Q = Field::rationals();
  std::vector<Element> e;
  for (const auto& q : coords) e.emplace_back(Q, q);
  return HomogeneousTuple(Q, std::move(e));
}

HomogeneousTuple HomogeneousTuple::scaled(const Element& lambda) const {
  if (lambda.is_zero()) throw Error(ErrorKind::ZeroVector, "scaling by zero");
  std::vector<Element> c;
  for (const auto& e : coords) c.push_back(e * lambda);
  return HomogeneousTuple(field, std::move(c));
}

HomogeneousTuple HomogeneousTuple::lifted(const Field& K) const {
  std::vector<Element> c;
  for (const auto& e : coords) {
    if (!e.is_rational()) throw Error(ErrorKind::InvalidArgument, "only rational coordinates can be lifted");
    c.emplace_back(K, e.a());
  }
  return HomogeneousTuple(K, std::move(c));
}

std::string HeightValue::to_string() const {
  std::string s = enclosure.to_string();
  if (exact) s += " (H^" + std::to_string(exact->root) + " = " + exact->value.to_string() + ")";
  return s;
}

namespace {

// prod_i max_j |sigma_i(alpha_j)| exactly.
QuadIrrational archimedean_max_product(const HomogeneousTuple& t) {
  const Field& K = t.field;
  if (K.is_imaginary()) {
    Rational m = 0;
    for (const auto& e : t.coords) m = std::max(m, e.norm());
    return QuadIrrational(m);
  }
  QuadIrrational prod(1);
  for (int i = 0; i < K.degree(); ++i) {
    QuadIrrational m(0);
    for (const auto& e : t.coords) m = max(m, e.real_embedding(i).abs());
    prod = prod * m;
  }
  return prod;
}

}  // namespace

QuadIrrational weil_height_power(const HomogeneousTuple& t) {
  const Rational Nc = content_ideal(t.coords).norm();
  return archimedean_max_product(t) / QuadIrrational(Nc);
}

HeightValue weil_height(const HomogeneousTuple& t) {
  const int d = t.field.degree();
  const QuadIrrational p = weil_height_power(t);
  Real enc = p.to_real();
  if (d == 2) enc = sqrt(enc);
  return HeightValue{enc, ExactHeight{d, p}};
}

bool height_leq(const HomogeneousTuple& t, const Rational& X) {
  if (X < 0) return false;
  const int d = t.field.degree();
  return weil_height_power(t) <= QuadIrrational(arith::pow(X, d));
}

QuadIrrational mahler_measure(const Integer& a, const Integer& b, const Integer& c) {
  if (a == 0) throw Error(ErrorKind::InvalidArgument, "leading coefficient must be nonzero");
  const Integer D = b * b - 4 * a * c;
  const Integer abs_a = abs(a);
  if (D < 0) return QuadIrrational(Rational(std::max(abs_a, Integer(abs(c)))));
  // roots (-b +- sqrt(D)) / (2a)
  const Rational re = arith::ratio(-b, 2 * a);
  const Rational im = arith::ratio(1, 2 * a);
  QuadIrrational m(abs_a);
  const QuadIrrational one(1);
  for (const int sign : {1, -1}) {
    const QuadIrrational root = D == 0 ? QuadIrrational(re) : QuadIrrational(re, sign * im, D);
    m = m * max(one, root.abs());
  }
  return m;
}

HeightValue root_height_from_minpoly(const Integer& a, const Integer& b, const Integer& c) {
  if (a == 0) throw Error(ErrorKind::Reducible, "degree drops: leading coefficient is zero");
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 1) throw Error(ErrorKind::NotPrimitive, "coefficients share the factor " + g.get_str());
  const Integer D = b * b - 4 * a * c;
  if (D >= 0 && mpz_perfect_square_p(D.get_mpz_t())) {
    throw Error(ErrorKind::Reducible, "discriminant " + D.get_str() + " is a square");
  }
  const QuadIrrational M = mahler_measure(a, b, c);
  return HeightValue{sqrt(M.to_real()), ExactHeight{2, M}};
}

HeightValue als_height(const AdelicLipschitzSystem& system, const HomogeneousTuple& t) {
  if (system.field() != t.field || system.n() != t.n()) {
    throw Error(ErrorKind::DimensionMismatch, "system and tuple differ in field or dimension");
  }
  const Field& K = t.field;
  const int d = K.degree();
  // Finite part: prod_v max_j (|a_j|_v / |A_j|_v)^{d_v} = N(sum_j a_j A_j^{-1})^{-1}.
  std::vector<Element> gens;
  for (int j = 0; j <= t.n(); ++j) {
    const Element& a = t.coords[static_cast<std::size_t>(j)];
    if (a.is_zero()) continue;
    for (const auto& e : system.coordinate_ideal(j).inverse().basis()) gens.push_back(a * e);
  }
  const Rational F = 1 / Ideal::generated_by(K, gens).norm();

  if (system.all_max()) {
    const QuadIrrational p = archimedean_max_product(t) * QuadIrrational(F);
    Real enc = p.to_real();
    if (d == 2) enc = sqrt(enc);
    return HeightValue{enc, ExactHeight{d, p}};
  }
  if (system.all_l2()) {
    // prod_v N_v^{2 d_v} is rational: sum a_j^2 over Q, N(sum a_j^2) for real
    // quadratic fields, (sum N(a_j))^2 for imaginary ones.
    Rational inf2;
    if (K.is_imaginary()) {
      Rational s = 0;
      for (const auto& a : t.coords) s += a.norm();
      inf2 = s * s;
    } else {
      Element s(K, 0);
      for (const auto& a : t.coords) s = s + a * a;
      inf2 = K.is_rational() ? s.a() : s.norm();
    }
    const Rational v = F * F * inf2;
    const Real enc = pow(Real(v), Real(arith::ratio(1, 2 * d)));
    return HeightValue{enc, ExactHeight{2 * d, QuadIrrational(v)}};
  }
  // General norms: certified enclosure only.
  Real prod(F);
  const auto places = infinite_places(K);
  for (std::size_t i = 0; i < places.size(); ++i) {
    std::vector<Real> z;
    for (const auto& a : t.coords) {
      const auto emb = a.embeddings();
      const auto& c = emb[static_cast<std::size_t>(K.is_imaginary() ? 0 : i)];
      z.push_back(c.re);
      if (places[i].d_v == 2) z.push_back(c.im);
    }
    prod *= pow(system.infinite()[i].evaluate(z), static_cast<long>(places[i].d_v));
  }
  return HeightValue{pow(prod, Real(arith::ratio(1, d))), std::nullopt};
}

}  // namespace schanuel

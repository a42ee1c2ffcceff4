#include "schanuel/invariants.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "schanuel/heights.hpp"
#include "schanuel/parallel.hpp"

namespace schanuel {

std::vector<Rational> bernoulli_numbers(int k) {
  std::vector<Rational> B(static_cast<std::size_t>(std::max(k, 0)) + 1);
  B[0] = 1;
  for (int m = 1; m <= k; ++m) {
    Rational acc = 0;
    Integer binom = 1;  // C(m+1, j)
    for (int j = 0; j < m; ++j) {
      acc += binom * B[static_cast<std::size_t>(j)];
      binom = binom * (m + 1 - j) / (j + 1);
    }
    B[static_cast<std::size_t>(m)] = -acc / (m + 1);
  }
  return B;
}

namespace {

constexpr int kMaxEulerMaclaurinTerms = 80;

const std::vector<Rational>& bernoulli_table() {
  static const std::vector<Rational> table = bernoulli_numbers(2 * kMaxEulerMaclaurinTerms + 2);
  return table;
}

Rational exact(double x) { return Rational(x); }

Real two_pow(const Rational& x, mpfr_prec_t prec) { return pow(Real(2L, prec), Real(x, prec)); }

double log_disc(const Integer& disc) { return std::log(std::abs(disc.get_d())); }

// Least-squares slope of y against x.
double ls_slope(const std::vector<double>& x, const std::vector<double>& y) {
  const double n = static_cast<double>(x.size());
  if (x.size() < 2) return 0;
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  return sxx == 0 ? 0 : sxy / sxx;
}

// chi_disc(k) for 0 <= k < |disc| from its values at primes.
std::vector<int> character_table(std::int64_t disc) {
  const std::int64_t q = disc < 0 ? -disc : disc;
  std::vector<int> chi(static_cast<std::size_t>(q), 0);
  std::vector<std::int64_t> spf(static_cast<std::size_t>(q), 0);
  if (q > 1) chi[1] = 1;
  for (std::int64_t k = 2; k < q; ++k) {
    if (spf[k] == 0) {
      for (std::int64_t j = k; j < q; j += k) {
        if (spf[j] == 0) spf[j] = k;
      }
      chi[k] = arith::kronecker(disc, k);
    } else {
      chi[k] = chi[spf[k]] * chi[k / spf[k]];
    }
  }
  return chi;
}

// max - min of the partial sums of chi over one period.
long character_range(const std::vector<int>& chi) {
  long s = 0, lo = 0, hi = 0;
  for (std::size_t k = 1; k < chi.size(); ++k) {
    s += chi[k];
    lo = std::min(lo, s);
    hi = std::max(hi, s);
  }
  return std::max(hi - lo, 1L);
}

// Smallest N with B (N+1)^{-s} <= eps.
long partial_summation_length(long B, long s, double eps) {
  const double N = std::pow(static_cast<double>(B) / eps, 1.0 / static_cast<double>(s));
  if (!(N < 1e12)) return std::numeric_limits<long>::max();
  long n = std::max(1L, static_cast<long>(std::ceil(N)));
  while (n > 1 && Rational(B) / arith::pow(Integer(n), static_cast<unsigned long>(s)) <= exact(eps)) --n;
  while (Rational(B) / arith::pow(Integer(n + 1), static_cast<unsigned long>(s)) > exact(eps)) ++n;
  return n;
}

Real partial_sum(const std::vector<int>& chi, long s, long N, const std::vector<Real>* powers,
                 mpfr_prec_t prec) {
  const auto q = static_cast<long>(chi.size());
  Real pos(Real::Precision{prec});
  Real neg(Real::Precision{prec});
  for (long k = 1; k <= N; ++k) {
    const int c = chi[static_cast<std::size_t>(k % q)];
    if (c == 0) continue;
    const Real t = powers ? (*powers)[static_cast<std::size_t>(k)]
                          : Real(1L, prec) / pow(Real(k, prec), s);
    if (c > 0) {
      pos += t;
    } else {
      neg += t;
    }
  }
  return pos - neg;
}

Real widen_by(const Real& x, const Rational& r) { return x.widened(r); }

}  // namespace

mpfr_prec_t precision_for(double tol) {
  if (!(tol > 0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  const double bits = -std::log2(tol);
  return std::max<mpfr_prec_t>(128, static_cast<mpfr_prec_t>(std::ceil(bits)) + 64);
}

Real hurwitz_zeta(long s, const Rational& x, double tol) {
  if (s < 2) throw Error(ErrorKind::InvalidArgument, "hurwitz_zeta needs s >= 2");
  if (x <= 0) throw Error(ErrorKind::InvalidArgument, "hurwitz_zeta needs x > 0");
  mpfr_prec_t prec = precision_for(tol);
  if (x < 1) prec += static_cast<mpfr_prec_t>(std::ceil(s * std::log2(1 / x.get_d()))) + 8;
  const auto& B = bernoulli_table();
  const Rational eps = exact(tol) / 2;

  // coef[j] = B_{2j}/(2j)! * s(s+1)...(s+2j-2)
  std::vector<Rational> coef(kMaxEulerMaclaurinTerms + 2);
  {
    Rational fact = 1;   // (2j)!
    Rational rising = s; // (s)_{2j-1}
    for (int j = 1; j <= kMaxEulerMaclaurinTerms + 1; ++j) {
      fact *= (2 * j - 1) * (2 * j);
      if (j > 1) rising *= Rational((s + 2 * j - 3) * (s + 2 * j - 2));
      coef[static_cast<std::size_t>(j)] = B[static_cast<std::size_t>(2 * j)] / fact * rising;
    }
  }

  for (long N = std::max(8L, s); ; N *= 2) {
    const Real Y(Rational(N) + x, prec);
    const Real Yinv = Real(1L, prec) / Y;
    std::vector<Real> terms;
    Real p = pow(Yinv, s + 1);  // Y^{-s-1}
    const Real Yinv2 = Yinv * Yinv;
    int m = -1;
    for (int j = 1; j <= kMaxEulerMaclaurinTerms + 1; ++j) {
      const Real t = Real(coef[static_cast<std::size_t>(j)], prec) * p;  // Y^{-s-2j+1}
      terms.push_back(t);
      if (j >= 2 && abs(t).upper() <= eps.get_d()) {
        m = j - 1;
        break;
      }
      p *= Yinv2;
    }
    if (m < 0) continue;
    Real sum(Real::Precision{prec});
    for (long k = 0; k < N; ++k) sum += Real(1L, prec) / pow(Real(Rational(k) + x, prec), s);
    sum += pow(Yinv, s - 1) / Real(s - 1, prec);
    sum += pow(Yinv, s) / Real(2L, prec);
    for (int j = 0; j < m; ++j) sum += terms[static_cast<std::size_t>(j)];
    return widen_by(sum, Rational(abs(terms[static_cast<std::size_t>(m)]).upper()));
  }
}

Real riemann_zeta(long s, double tol) { return hurwitz_zeta(s, 1, tol); }

namespace {

// L = q^{-s} sum_a chi(a) zeta(s, a/q).
Real hurwitz_l_value(const std::vector<int>& chi, long s, double tol, mpfr_prec_t prec) {
  const long q = static_cast<long>(chi.size());
  const double each = tol / 2 * std::pow(static_cast<double>(q), static_cast<double>(s - 1));
  Real acc(Real::Precision{prec});
  for (long a = 1; a < q; ++a) {
    const int c = chi[static_cast<std::size_t>(a)];
    if (c == 0) continue;
    const Real z = hurwitz_zeta(s, arith::ratio(a, q), each).with_precision(prec);
    acc += c > 0 ? z : -z;
  }
  return acc / pow(Real(q, prec), s);
}

}  // namespace

LValue dirichlet_l_value(std::int64_t disc, long s, double tol) {
  if (!arith::is_fundamental_discriminant(disc)) {
    throw Error(ErrorKind::NotFundamental, std::to_string(disc) + " is not a fundamental discriminant");
  }
  if (s < 2) throw Error(ErrorKind::InvalidArgument, "dirichlet_l needs s >= 2");
  const mpfr_prec_t prec = precision_for(tol);
  const std::vector<int> chi = character_table(disc);
  const long q = static_cast<long>(chi.size());
  const long B = character_range(chi);
  const long N = partial_summation_length(B, s, tol / 2);

  LValue out;
  if (N <= std::max(200000L, 40 * q)) {
    // sum_{k > N} chi(k) k^{-s} = sum_{k > N} A(k) (k^{-s} - (k+1)^{-s}) with |A| <= B.
    const Rational tail = Rational(B) / arith::pow(Integer(N + 1), static_cast<unsigned long>(s));
    out.value = widen_by(partial_sum(chi, s, N, nullptr, prec), tail);
    out.method = LMethod::PartialSummation;
    out.terms = N;
    out.tail = tail.get_d();
    return out;
  }
  out.value = hurwitz_l_value(chi, s, tol, prec);
  out.method = LMethod::Hurwitz;
  out.terms = q;
  return out;
}

Real dirichlet_l(std::int64_t disc, long s, double tol) { return dirichlet_l_value(disc, s, tol).value; }

Real dedekind_zeta(const Field& K, long s, double tol) {
  if (K.is_rational()) return riemann_zeta(s, tol);
  // |zeta L - zeta' L'| <= zeta |dL| + |L'| |dzeta|, with zeta, L <= zeta(2) < 2.
  return riemann_zeta(s, tol / 4) * dirichlet_l(K.disc, s, tol / 4);
}

Real dedekind_zeta(const FieldInvariants& K, long s, double tol) {
  if (K.degree > 2 || !K.field) {
    throw Error(ErrorKind::UnsupportedDegree,
                "zeta of " + K.label + " is not computable here; supply it or use the degree bracket");
  }
  return dedekind_zeta(*K.field, s, tol);
}

Real dedekind_zeta_bracket(int degree, long s, double tol) {
  const Real z = riemann_zeta(s, tol);
  const Real top = pow(z, static_cast<long>(degree));
  return Real::hull(Real(1L, z.precision()), top.upper_point());
}

SchanuelInput schanuel_input(const Field& K, int n, double tol) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
  SchanuelInput in;
  in.invariants = compute_invariants(K);
  in.n = n;
  in.zeta_value = dedekind_zeta(K, n + 1, tol);
  return in;
}

Real schanuel_constant(const SchanuelInput& input) {
  if (!input.zeta_value) {
    throw Error(ErrorKind::MissingZeta, "no value of zeta_K(" + std::to_string(input.n + 1) + ") supplied");
  }
  const FieldInvariants& K = input.invariants;
  const Real& zeta = *input.zeta_value;
  if (zeta.lower() < 1) {
    throw Error(ErrorKind::InvalidArgument, "zeta_K(n+1) enclosure does not lie above 1");
  }
  const mpfr_prec_t prec = std::max(zeta.precision(), K.R.precision());
  const long n1 = input.n + 1;
  const Real hR = Real(K.h, prec) * K.R;
  const Real local = pow(Real(2L, prec), static_cast<long>(K.r)) *
                     pow(Real(2L, prec) * Real::pi(prec), static_cast<long>(K.s)) / sqrt(Real(Integer(abs(K.disc)), prec));
  const Real dim = pow(Real(n1, prec), static_cast<long>(K.r + K.s - 1));
  return hR / (Real(static_cast<long>(K.w), prec) * zeta) * pow(local, n1) * dim;
}

Real main_term_constant(const AdelicLipschitzSystem& system, const SchanuelInput& input, int workers) {
  const FieldInvariants& K = input.invariants;
  if (!K.field || *K.field != system.field() || input.n != system.n()) {
    throw Error(ErrorKind::DimensionMismatch, "system and invariants describe different fields or dimensions");
  }
  const Real S = schanuel_constant(input);
  const Volumes vol = volumes(system, workers);
  const long n1 = input.n + 1;
  const PiMonomial standard{arith::pow(Rational(2), K.r * n1), static_cast<int>(K.s * n1)};
  if (vol.V.exact) {
    const PiMonomial ratio = *vol.V.exact * PiMonomial{1 / standard.coeff, -standard.pi_power};
    if (ratio == PiMonomial{}) return S;
    return S * ratio.to_real(S.precision());
  }
  return S * vol.V.enclosure / standard.to_real(S.precision());
}

Real main_term_constant(const AdelicLipschitzSystem& system, double tol, int workers) {
  return main_term_constant(system, schanuel_input(system.field(), system.n(), tol), workers);
}

Rational hr_envelope_constant() { return Rational(2752, 10000); }

EnvelopeCertificate certify_hr_envelope(std::int64_t disc_max, const Rational& c0, int workers) {
  const auto discs = arith::fundamental_discriminants(disc_max);
  std::vector<Real> ratio(discs.size());
  parallel_for(discs.size(), workers, [&](std::size_t i) {
    const Field K = field_from_discriminant(discs[i]);
    const Real hR = Real(Integer(class_number(K))) * regulator(K);
    const Real a(static_cast<long>(std::llabs(discs[i])));
    ratio[i] = hR / (sqrt(a) * (Real(1) + log(a)));
  });
  EnvelopeCertificate cert;
  cert.disc_max = disc_max;
  cert.fields = static_cast<long>(discs.size());
  cert.max_ratio = Real(0);
  for (std::size_t i = 0; i < discs.size(); ++i) {
    if (i == 0 || ratio[i].upper() > cert.max_ratio.upper()) {
      cert.max_ratio = ratio[i];
      cert.argmax = discs[i];
    }
  }
  cert.holds = cert.fields > 0 && cert.max_ratio.certainly_less(c0);
  return cert;
}

Real ce_tail_bound(int n, std::int64_t disc_max, const Rational& c0) {
  // Each term is at most (c0/2) G |disc|^{-n/2} (1 + log|disc|), G = 4^{n+1}(n+1)
  // for real fields and (2 pi)^{n+1} for imaginary ones; at most one field of each
  // sign per |disc|, and x^{-a}(1 + log x) decreases for x >= 1 when a = n/2 >= 3/2:
  // sum_{k > M} <= int_M^oo x^{-a}(1 + log x) dx = M^{1-a}((1 + log M)/(a-1) + 1/(a-1)^2).
  if (n < 3) throw Error(ErrorKind::UnsupportedRegime, "the tail bound needs n >= 3");
  const long n1 = n + 1;
  const Real G = pow(Real(4), n1) * Real(n1) + pow(Real(2) * Real::pi(), n1);
  const Real M(static_cast<long>(std::max<std::int64_t>(disc_max, 1)));
  const Real a1(arith::ratio(n - 2, 2));  // a - 1
  const Real integral = pow(M, -Real(arith::ratio(n - 2, 2))) * ((Real(1) + log(M)) / a1 + Real(1) / (a1 * a1));
  return Real(c0 / 2) * G * integral;
}

PartialSum ce_partial_sum(int n, std::int64_t disc_max, double tol, int workers) {
  if (n < 3) {
    throw Error(ErrorKind::UnsupportedRegime, "the sum over quadratic fields is only evaluated for n >= 3");
  }
  if (!(tol > 0)) throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
  const long s = n + 1;
  const auto discs = arith::fundamental_discriminants(disc_max);
  const std::size_t F = discs.size();
  const mpfr_prec_t prec = precision_for(tol / 1e6);
  const Real zeta_s = riemann_zeta(s, tol / (8.0 * std::max<std::size_t>(F, 1) * 64));
  // L(s, chi) >= zeta(2s)/zeta(s).
  const double L_min = (riemann_zeta(2 * s, 1e-20) / zeta_s).lower();

  struct Work {
    Field K;
    Integer h;
    Real R;
    Real prefactor;  // S = prefactor / L
    std::vector<int> chi;
    long B = 1;
    long N = 1;
    Rational tail;
  };
  std::vector<Work> work(F);
  parallel_for(F, workers, [&](std::size_t i) {
    Work& w = work[i];
    w.K = field_from_discriminant(discs[i]);
    const FieldInvariants inv = compute_invariants(w.K);
    w.h = inv.h;
    w.R = inv.R.with_precision(prec);
    const Real local = pow(Real(2L, prec), static_cast<long>(inv.r)) *
                       pow(Real(2L, prec) * Real::pi(prec), static_cast<long>(inv.s)) /
                       sqrt(Real(Integer(abs(inv.disc)), prec));
    w.prefactor = Real(w.h, prec) * w.R / (Real(static_cast<long>(inv.w), prec) * zeta_s.with_precision(prec)) *
                  pow(local, s) * pow(Real(s, prec), static_cast<long>(inv.r + inv.s - 1));
    w.chi = character_table(discs[i]);
    w.B = character_range(w.chi);
    // |dS| <= prefactor |dL| / L_min^2; allot tol / (2F) to each field.
    const double eps = tol / (4.0 * static_cast<double>(F)) * L_min * L_min / w.prefactor.upper();
    w.N = partial_summation_length(w.B, s, eps);
    w.tail = Rational(w.B) / arith::pow(Integer(w.N + 1), static_cast<unsigned long>(s));
  });

  long N_max = 1;
  for (const auto& w : work) N_max = std::max(N_max, w.N);
  std::vector<Real> powers(static_cast<std::size_t>(N_max) + 1);
  parallel_for(powers.size(), workers, [&](std::size_t k) {
    powers[k] = k == 0 ? Real(0L, prec) : Real(1L, prec) / pow(Real(static_cast<long>(k), prec), s);
  });

  PartialSum out;
  out.n = n;
  out.disc_max = disc_max;
  out.terms.resize(F);
  parallel_for(F, workers, [&](std::size_t i) {
    const Work& w = work[i];
    const Real L = widen_by(partial_sum(w.chi, s, w.N, &powers, prec), w.tail);
    SumTerm& t = out.terms[i];
    t.disc = discs[i];
    t.h = w.h;
    t.R = w.R;
    t.w = w.K.w;
    t.value = w.prefactor / L;
  });
  out.sum = Real(0L, prec);
  std::vector<double> lx, ly;
  for (const auto& t : out.terms) {
    out.sum += t.value;
    lx.push_back(std::log(static_cast<double>(std::llabs(t.disc))));
    ly.push_back(std::log(t.value.mid()));
  }
  out.decay_slope = ls_slope(lx, ly);
  out.c0 = hr_envelope_constant();
  out.tail = ce_tail_bound(n, disc_max, out.c0);
  out.tail_provenance = Provenance::MeasuredEnvelope;
  return out;
}

std::vector<int> proper_divisors(int e) {
  std::vector<int> out;
  for (int g = 1; g < e; ++g) {
    if (e % g == 0) out.push_back(g);
  }
  return out;
}

ExponentContext exponent_context(int m, int e, int n, int g) {
  if (m < 1 || e < 1 || n < 1) throw Error(ErrorKind::InvalidArgument, "m, e, n must be positive");
  const auto G = proper_divisors(e);
  if (std::find(G.begin(), G.end(), g) == G.end() || 2 * g > e) {
    throw Error(ErrorKind::InvalidG, std::to_string(g) + " is not a proper divisor of " + std::to_string(e));
  }
  ExponentContext c{m, e, n, g, 0, 0, 0, 0};
  c.mu_g = Rational(m * (e - g) * (n + 1) - 1);
  c.gamma_g = Rational(m) * (Rational(g * g + g + e) + arith::ratio(e * e, g));
  c.gamma = Rational(m * e * (e + 1));
  c.beta = Rational(e * (e - 1) * m) + Rational(1, 8);
  return c;
}

Rational dimension_threshold(int m, int e) {
  return arith::ratio(5 * e, 2) + 4 + arith::ratio(2, m * e);
}

int minimal_dimension(int m, int e) {
  return static_cast<int>(arith::floor(dimension_threshold(m, e)).get_si()) + 1;
}

Lemma44Report lemma44_check(int m, int e) { return lemma44_check(m, e, minimal_dimension(m, e)); }

Lemma44Report lemma44_check(int m, int e, int n) {
  if (e < 2) throw Error(ErrorKind::InvalidArgument, "the lemma concerns e >= 2");
  Lemma44Report r;
  r.m = m;
  r.e = e;
  r.n = n;
  r.threshold = dimension_threshold(m, e);
  r.integrality_step = Rational(n + 1) >= r.threshold + 1 + arith::ratio(1, 2 * m * e);
  r.passed = r.integrality_step;
  for (const int g : proper_divisors(e)) {
    const ExponentContext c = exponent_context(m, e, n, g);
    Lemma44Row row;
    row.g = g;
    row.value = c.gamma_g + c.beta - c.mu_g;
    row.holds = row.value <= Rational(-1, 8);
    r.passed = r.passed && row.holds;
    r.rows.push_back(row);
  }
  return r;
}

DiscriminantBounds discriminant_bounds(const Field& K) {
  if (K.is_rational()) throw Error(ErrorKind::InvalidArgument, "discriminant bounds concern quadratic fields");
  // k = Q: one archimedean place, |disc_k| = 1, e = 2, m = 1.
  const int e = 2, m = 1, delta_k = 1;
  DiscriminantBounds b;
  b.disc = K.disc;
  const Real disc_abs(static_cast<long>(std::llabs(K.disc)));
  b.silverman_constant = exp(-Real(delta_k) * log(Real(e)) / Real(2 * (e - 1) * m));
  b.delta_lower = b.silverman_constant * pow(disc_abs, Real(arith::ratio(1, 2 * e * (e - 1) * m)));
  b.delta_lower_fourth = arith::ratio(static_cast<long>(std::llabs(K.disc)), 4);
  const HeightValue H = root_height_from_minpoly(1, -K.t, K.norm_omega);
  b.delta_upper = H.enclosure;
  b.delta_upper_squared = H.exact->value;
  b.upper_envelope = b.delta_upper / sqrt(disc_abs);
  const Element w = Element::omega(K);
  const Ideal different = Ideal::principal(w - w.conjugate());
  b.tower_formula = different.norm() == Rational(static_cast<long>(std::llabs(K.disc)));
  return b;
}

SiegelBrauerReport siegel_brauer_scan(const std::vector<FieldInvariants>& fields, double epsilon) {
  SiegelBrauerReport r;
  r.epsilon = epsilon;
  r.fields = static_cast<long>(fields.size());
  if (fields.empty()) throw Error(ErrorKind::InvalidArgument, "empty field list");
  const Real expo = Real(Rational(1, 2)) + Real(exact(epsilon));
  std::vector<double> lx, ly;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    const auto& K = fields[i];
    const Real hR = Real(K.h) * K.R;
    const Real ratio = hR / pow(Real(Integer(abs(K.disc))), expo);
    if (i == 0 || ratio.mid() > r.max_ratio.mid()) {
      r.max_ratio = ratio;
      r.argmax = K.disc.get_si();
    }
    lx.push_back(log_disc(K.disc));
    ly.push_back(std::log(hR.mid()));
  }
  r.slope = ls_slope(lx, ly);
  r.bounded_trend = std::isfinite(r.max_ratio.upper()) && r.slope <= 0.5 + epsilon;
  return r;
}

DyadicReport dyadic_check(const std::vector<QuadIrrational>& f_squared, const Rational& alpha, const Rational& b) {
  if (f_squared.empty()) throw Error(ErrorKind::InvalidArgument, "empty collection");
  for (const auto& v : f_squared) {
    if (v < QuadIrrational(Rational(1))) throw Error(ErrorKind::InvalidArgument, "values must be >= 1");
  }
  std::vector<QuadIrrational> sorted = f_squared;
  std::sort(sorted.begin(), sorted.end());
  DyadicReport r;
  r.alpha = alpha;
  r.b = b;
  const Real half_alpha(alpha / 2);
  const Real half_b(b / 2);
  r.direct = Real(0);
  r.c = Real(0);
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const Real v = sorted[i].to_real();
    r.direct += pow(v, half_alpha);
    std::size_t j = i;
    while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
    const Real ratio = Real(static_cast<long>(j + 1)) / pow(v, half_b);
    r.c = i == 0 ? ratio : max(r.c, ratio);
  }
  // levels = floor(log2 max f) + 1, decided exactly through 4^i <= max f^2.
  const QuadIrrational& top = sorted.back();
  long i = 0;
  while (QuadIrrational(arith::pow(Rational(4), i + 1)) <= top) ++i;
  r.levels = i + 1;
  Real geometric(0);
  for (long k = 1; k <= r.levels; ++k) geometric += two_pow(Rational(k) * (alpha + b), Real::kDefaultPrecision);
  r.bound = r.c * two_pow(abs(alpha), Real::kDefaultPrecision) * geometric;
  r.holds = r.direct.certainly_less_equal(r.bound);
  return r;
}

long schmidt_upper_exponent(int m, int e, int n) {
  return static_cast<long>(m) * e * (e + n + 3) + e * e + n * n + 10L * e + 10L * n;
}

Real schmidt_quadratic_constant(int n, double tol) {
  const Real z3 = riemann_zeta(3, tol / 1e3);
  if (n == 1) return Real(8) / z3;
  if (n == 2) {
    const Real pi = Real::pi(z3.precision());
    return Real(8) * (Real(12) + pi * pi) / (z3 * z3);
  }
  throw Error(ErrorKind::InvalidArgument, "quadratic constants are known for n = 1, 2");
}

ExampleD example_d(const std::vector<FieldInvariants>& fields, double tol) {
  ExampleD out;
  out.coefficient = PiMonomial{Rational(12) * arith::pow(Rational(2), 24), 24};
  const Real zeta = dedekind_zeta_bracket(4, 12, tol);
  out.sum = Real(0);
  for (const auto& K : fields) {
    if (K.degree != 4 || K.r != 0 || K.s != 2) {
      out.skipped.push_back(K.label);
      continue;
    }
    const Real d6 = pow(Real(Integer(abs(K.disc))), 6L);
    const Real t = Real(K.h) * K.R / (Real(static_cast<long>(K.w)) * zeta * d6);
    out.terms.push_back({K.label, K.disc, t});
    out.sum += t;
  }
  out.D_partial = out.coefficient.to_real() * out.sum;
  return out;
}

}  // namespace schanuel

#pragma once

// Analytic constants: zeta and L-values with proven tails, the Schanuel
// constant S_K(n), main-term constants of adelic-Lipschitz systems, partial
// sums over quadratic fields with an explicit tail, and the exponent algebra
// behind the convergence of those sums.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schanuel/als.hpp"
#include "schanuel/nfq.hpp"
#include "schanuel/quadirr.hpp"
#include "schanuel/real.hpp"

namespace schanuel {

/// B_0, ..., B_k exactly (B_1 = -1/2).
std::vector<Rational> bernoulli_numbers(int k);

/// Working precision in bits adequate for an absolute tolerance tol.
mpfr_prec_t precision_for(double tol);

/// Hurwitz zeta(s, x) for integer s >= 2 and rational x > 0 (Euler-Maclaurin,
/// remainder bounded by the first omitted term).
Real hurwitz_zeta(long s, const Rational& x, double tol);
Real riemann_zeta(long s, double tol);

enum class LMethod { PartialSummation, Hurwitz };

struct LValue {
  Real value;
  LMethod method = LMethod::PartialSummation;
  /// Terms summed (partial summation) or residues used (Hurwitz).
  long terms = 0;
  /// Upper bound on the discarded tail.
  double tail = 0;
};

/// L(s, chi_disc) for a fundamental discriminant; radius <= tol.
LValue dirichlet_l_value(std::int64_t disc, long s, double tol);
Real dirichlet_l(std::int64_t disc, long s, double tol);

/// zeta_K(s) for Q or a quadratic field; radius <= tol.
Real dedekind_zeta(const Field& K, long s, double tol);
/// Same from invariants; fields of degree > 2 throw UnsupportedDegree.
Real dedekind_zeta(const FieldInvariants& K, long s, double tol);
/// [1, zeta(s)^degree], which contains zeta_K(s) for every field of that degree.
Real dedekind_zeta_bracket(int degree, long s, double tol);

struct SchanuelInput {
  FieldInvariants invariants;
  int n = 1;
  std::optional<Real> zeta_value;
};

/// Invariants and zeta_K(n+1) of a computed field.
SchanuelInput schanuel_input(const Field& K, int n, double tol);

/// S_K(n) = hR/(w zeta_K(n+1)) (2^r (2 pi)^s / sqrt|disc|)^{n+1} (n+1)^{r+s-1}.
Real schanuel_constant(const SchanuelInput& input);

/// 2^{-r(n+1)} pi^{-s(n+1)} V S_K(n); exactly S_K(n) when V is the standard volume.
Real main_term_constant(const AdelicLipschitzSystem& system, const SchanuelInput& input,
                        int workers = 1);
Real main_term_constant(const AdelicLipschitzSystem& system, double tol, int workers = 1);

/// Largest hR / (sqrt|disc| (1 + log|disc|)) over all quadratic fields with
/// |disc| <= 10^5, rounded up; an envelope measured by `certify_hr_envelope`.
Rational hr_envelope_constant();

struct EnvelopeCertificate {
  std::int64_t disc_max = 0;
  long fields = 0;
  Real max_ratio;
  std::int64_t argmax = 0;
  bool holds = false;
};

EnvelopeCertificate certify_hr_envelope(std::int64_t disc_max, const Rational& c0, int workers = 1);

struct SumTerm {
  std::int64_t disc = 0;
  Integer h;
  Real R;
  int w = 2;
  Real value;
};

struct PartialSum {
  int n = 3;
  std::int64_t disc_max = 0;
  Real sum;
  /// Bound for the sum over |disc| > disc_max, from the envelope constant c0.
  Real tail;
  Rational c0;
  Provenance tail_provenance = Provenance::MeasuredEnvelope;
  std::vector<SumTerm> terms;
  /// Least-squares slope of log(term) against log|disc|.
  double decay_slope = 0;
};

/// Sum of the standard main-term constants S_K(n) over all quadratic fields
/// with |disc| <= disc_max, ordered by |disc| then sign (negative first).
PartialSum ce_partial_sum(int n, std::int64_t disc_max, double tol, int workers = 1);
/// Explicit bound for the terms with |disc| > disc_max.
Real ce_tail_bound(int n, std::int64_t disc_max, const Rational& c0);

struct ExponentContext {
  int m = 1;
  int e = 2;
  int n = 1;
  int g = 1;
  Rational mu_g;
  Rational gamma_g;
  Rational gamma;
  Rational beta;
};

/// Proper positive divisors of e.
std::vector<int> proper_divisors(int e);
ExponentContext exponent_context(int m, int e, int n, int g);

/// 5e/2 + 4 + 2/(me).
Rational dimension_threshold(int m, int e);
/// Least integer n above the threshold.
int minimal_dimension(int m, int e);

struct Lemma44Row {
  int g = 1;
  Rational value;  // gamma_g + beta - mu_g
  bool holds = false;
};

struct Lemma44Report {
  int m = 1;
  int e = 2;
  int n = 1;
  Rational threshold;
  /// n + 1 >= threshold + 1 + 1/(2me).
  bool integrality_step = false;
  std::vector<Lemma44Row> rows;
  bool passed = false;
};

Lemma44Report lemma44_check(int m, int e);
Lemma44Report lemma44_check(int m, int e, int n);

struct DiscriminantBounds {
  std::int64_t disc = 0;
  /// exp(-delta_k log e / (2(e-1)m)) |disc_k|^{-1/(2(e-1)m)} for k = Q, e = 2.
  Real silverman_constant;
  /// silverman_constant * |disc|^{1/4}; its fourth power |disc|/4 is exact.
  Real delta_lower;
  Rational delta_lower_fourth;
  /// H(1, w) with H^2 exact.
  Real delta_upper;
  QuadIrrational delta_upper_squared;
  /// delta_upper / |disc|^{1/2}, a measured envelope for the upper side.
  Real upper_envelope;
  /// N(D_{K/Q}) computed from the different equals |disc|.
  bool tower_formula = false;
};

DiscriminantBounds discriminant_bounds(const Field& K);

struct SiegelBrauerReport {
  double epsilon = 0.1;
  long fields = 0;
  Real max_ratio;
  std::int64_t argmax = 0;
  /// Least-squares slope of log(hR) against log|disc|.
  double slope = 0;
  bool bounded_trend = false;
};

SiegelBrauerReport siegel_brauer_scan(const std::vector<FieldInvariants>& fields, double epsilon);

struct DyadicReport {
  Rational alpha;
  Rational b;
  Real c;
  long levels = 0;
  Real direct;
  Real bound;
  bool holds = false;
};

/// Checks sum f^alpha <= c 2^|alpha| sum_{i <= levels} 2^{i(alpha + b)} on a finite
/// collection, c = max N_f(f(K)) / f(K)^b. Values are given through f^2 >= 1.
DyadicReport dyadic_check(const std::vector<QuadIrrational>& f_squared, const Rational& alpha,
                          const Rational& b);

/// Explicit upper constant 2^{me(e+n+3) + e^2 + n^2 + 10e + 10n} as its exponent.
long schmidt_upper_exponent(int m, int e, int n);
/// 8 / zeta(3) and 8 (12 + pi^2) / zeta(3)^2.
Real schmidt_quadratic_constant(int n, double tol);

struct ExampleDTerm {
  std::string label;
  Integer disc;
  Real value;
};

struct ExampleD {
  /// 12 (2 pi)^24 = coefficient * pi^24 exactly.
  PiMonomial coefficient;
  Real sum;
  Real D_partial;
  std::vector<ExampleDTerm> terms;
  std::vector<std::string> skipped;
};

/// Partial sum of h R / (w zeta_K(12) |disc|^6) over the supplied quartic fields
/// with two complex places, zeta_K(12) taken from the degree-4 bracket.
ExampleD example_d(const std::vector<FieldInvariants>& fields, double tol);

}  // namespace schanuel

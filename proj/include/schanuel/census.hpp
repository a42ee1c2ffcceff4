#pragma once

// Exact point and field censuses: points of bounded height in P^n(Q), P^n(K)
// for imaginary quadratic K, primitive points of P^n(K/Q), quadratic points
// of P^1 with their fields, delta(K/Q), N_delta and N_Delta, and the residual
// fits of counts against predicted main terms.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "schanuel/heights.hpp"
#include "schanuel/nfq.hpp"
#include "schanuel/parallel.hpp"
#include "schanuel/real.hpp"

namespace schanuel {

struct Schedule {
  int workers = 1;
  Partition partition = Partition::Block;
};

/// Z_H(P^n(Q), X).
Integer count_rational(int n, const Rational& X, Schedule schedule = {});

/// #{b in I : N(b) <= R}, zero included, for an ideal of an imaginary quadratic field.
Integer lattice_count(const Ideal& I, const Rational& R);

/// Z_H(P^n(K), X) for imaginary quadratic K (any class number).
Integer count_imaginary_quadratic(const Field& K, int n, const Rational& X, Schedule schedule = {});

/// Z_H(P^n(K/Q), X) = Z_H(P^n(K), X) - Z_H(P^n(Q), X).
Integer count_primitive(const Field& K, int n, const Rational& X, Schedule schedule = {});

/// M(a x^2 + b x + c) <= Y for a >= 1, c != 0, decided exactly:
/// a <= Y, |c| <= Y, |b| <= Y + ac/Y.
bool mahler_at_most(std::int64_t a, std::int64_t b, std::int64_t c, const Rational& Y);

struct QuadraticPointCount {
  Rational X;
  Integer points;
  /// Field discriminant -> number of points generating that field.
  std::map<std::int64_t, Integer> histogram;
};

/// Z_H(P^1(Q;2), X) with its per-field histogram.
QuadraticPointCount count_quadratic_points_p1(const Rational& X, Schedule schedule = {});

struct FieldCensusEntry {
  Field field;
  HeightValue delta;
  std::int64_t disc = 0;
  Element witness;
  /// Primitive minimal polynomial a x^2 + b x + c of the witness.
  std::int64_t a = 1, b = 0, c = 0;
};

/// H(1, w) for the integral basis element w; H^2 exact.
QuadIrrational omega_height_squared(const Field& K);

/// delta(K/Q) by exhaustive search over generators of height <= cap.
FieldCensusEntry delta_of_field(const Field& K, const Rational& cap);
FieldCensusEntry delta_of_field(const Field& K);

struct NDeltaResult {
  Rational T;
  std::int64_t scan = 0;
  /// Every field with delta <= T has |disc| <= 4 T^4.
  Rational certified_bound;
  Integer count;
  std::int64_t max_disc_seen = 0;
  std::vector<std::int64_t> fields;
};

NDeltaResult n_delta(const Rational& T, std::int64_t scan);
/// Scan range chosen as the certified bound itself.
NDeltaResult n_delta(const Rational& T);

/// Number of fundamental discriminants with |disc| <= T.
Integer n_disc(const Rational& T);

struct CountReport {
  std::string description;
  std::vector<Rational> grid;
  std::vector<Integer> counts;
  std::vector<Real> prediction;
  std::vector<double> residuals;
  /// Exponent of the main term and the error exponent it is compared with.
  int main_exponent = 0;
  int error_exponent = 0;
  double fitted_error_exponent = 0;
  bool flag = false;
  std::vector<std::pair<std::string, std::string>> metadata;
  Schedule schedule;
};

struct ResidualFit {
  double slope = 0;
  /// exp(intercept): |count - main| ~ constant X^slope.
  double constant = 0;
  bool flag = false;
  long points_used = 0;
};

/// Least-squares slope of log|count - main| against log X.
ResidualFit residual_analysis(const CountReport& report);

CountReport rational_report(int n, const std::vector<Rational>& grid, Schedule schedule = {}, double tol = 1e-20);
CountReport field_report(const Field& K, int n, const std::vector<Rational>& grid, Schedule schedule = {},
                         double tol = 1e-20);
CountReport primitive_report(const Field& K, int n, const std::vector<Rational>& grid, Schedule schedule = {},
                             double tol = 1e-20);
CountReport quadratic_p1_report(const std::vector<Rational>& grid, Schedule schedule = {}, double tol = 1e-20);

}  // namespace schanuel

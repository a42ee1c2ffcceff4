// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "schanuel/census.hpp"
#include "schanuel/invariants.hpp"
#include "schanuel/report.hpp"

using namespace schanuel;

namespace {

constexpr double kTol = 1e-25;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double ratio(const Integer& count, const Real& prediction) { return count.get_d() / prediction.mid(); }

std::string fixed(double x, int digits = 5) {
  std::ostringstream s;
  s.precision(digits);
  s << std::fixed << x;
  return s.str();
}

Real pow_x(const Rational& X, int k) { return Real(arith::pow(X, k)); }

Outcome criterion1(Schedule s) {
  const Real S1 = schanuel_constant(schanuel_input(Field::rationals(), 1, kTol));
  const Real S2 = schanuel_constant(schanuel_input(Field::rationals(), 2, kTol));
  const double r1 = ratio(count_rational(1, 1000, s), S1 * pow_x(1000, 2));
  const double r2 = ratio(count_rational(2, 200, s), S2 * pow_x(200, 3));
  const bool ok = std::abs(r1 - 1) <= 0.01 && std::abs(r2 - 1) <= 0.015;
  return {ok, "n=1 X=1000 ratio " + fixed(r1) + " (tol 1%); n=2 X=200 ratio " + fixed(r2) + " (tol 1.5%)"};
}

Outcome criterion2(Schedule s) {
  const Field K = make_quadratic_field(-1);
  const FieldInvariants inv = compute_invariants(K);
  const bool data = inv.h == 1 && inv.R.contains(Rational(1)) && inv.w == 4 && inv.disc == -4;
  const Real zeta = riemann_zeta(2, kTol) * dirichlet_l(-4, 2, kTol);
  const Real S = schanuel_constant(SchanuelInput{inv, 1, zeta});
  const double r = ratio(count_imaginary_quadratic(K, 1, 30, s), S * pow_x(30, 4));
  return {data && std::abs(r - 1) <= 0.05, "Q(i) n=1 X=30 ratio " + fixed(r) + " (tol 5%), S=" + fixed(S.mid(), 7)};
}

Outcome criterion3(Schedule s) {
  const Real C = Real(8) / riemann_zeta(3, kTol);
  const double r10 = ratio(count_quadratic_points_p1(10, s).points, C * pow_x(10, 6));
  const double r6 = ratio(count_quadratic_points_p1(6, s).points, C * pow_x(6, 6));
  const bool ok = std::abs(r10 - 1) <= 0.10 && std::abs(r6 - 1) <= 0.15;
  return {ok, "X=10 ratio " + fixed(r10) + " (tol 10%); X=6 ratio " + fixed(r6) + " (tol 15%)"};
}

Outcome criterion4(Schedule s) {
  const Field Qi = make_quadratic_field(-1);
  const auto d2 = delta_of_field(make_quadratic_field(2));
  const auto di = delta_of_field(Qi);
  const std::vector<std::pair<std::string, bool>> checks = {
      {"Z(P1(Q),1)=4", count_rational(1, 1, s) == 4},
      {"Z(P1(Q),2)=8", count_rational(1, 2, s) == 8},
      {"Z(P1(Q(i)),1)=6", count_imaginary_quadratic(Qi, 1, 1, s) == 6},
      {"Z(P1(Q(i)/Q),1)=2", count_primitive(Qi, 1, 1, s) == 2},
      {"Z(P1(Q;2),1)=6", count_quadratic_points_p1(1, s).points == 6},
      {"N_disc(8)=6", n_disc(8) == 6},
      {"delta(Q(i))=1", di.delta.exact && di.delta.exact->value == QuadIrrational(1)},
      {"delta(Q(sqrt2))^2=2", d2.delta.exact && d2.delta.exact->root == 2 && d2.delta.exact->value == QuadIrrational(2)},
  };
  bool ok = true;
  std::string failed;
  for (const auto& [name, good] : checks) {
    ok = ok && good;
    if (!good) failed += " " + name;
  }
  return {ok, ok ? "8/8 exact values" : "failed:" + failed};
}

Outcome criterion5(Schedule s) {
  std::string detail;
  bool ok = true;
  for (const long X : {1, 2, 3, 4}) {
    const QuadraticPointCount p = count_quadratic_points_p1(X, s);
    Integer total = 0;
    for (const auto& [D, c] : p.histogram) {
      total += D < 0 ? count_primitive(field_from_discriminant(D), 1, X, s) : c;
    }
    ok = ok && total == p.points;
    detail += (detail.empty() ? "" : ", ") + ("X=" + std::to_string(X) + ": " + p.points.get_str() +
                                               (total == p.points ? " = " : " != ") + total.get_str());
  }
  return {ok, detail};
}

Outcome criterion6() {
  const auto start = std::chrono::steady_clock::now();
  long rows = 0;
  bool ok = true;
  Rational worst = -1000;
  for (int m = 1; m <= 3; ++m) {
    for (int e = 2; e <= 60; ++e) {
      const Lemma44Report r = lemma44_check(m, e);
      ok = ok && r.passed;
      for (const auto& row : r.rows) {
        ok = ok && row.value <= Rational(-1, 8);
        if (row.value > worst) worst = row.value;
        ++rows;
      }
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  ok = ok && secs < 1.0;
  return {ok, std::to_string(rows) + " (m, e, g) rows, max value " + arith::to_string(worst) + ", " + fixed(secs, 3) + " s"};
}

Outcome criterion7() {
  const std::vector<std::int64_t> discs = {-3, -4, -7, -8, -11, -15, -20, -23, -24, -39,
                                           5,  8,  12, 13, 17, 21, 24, 40, 60, 65};
  std::vector<Field> fields = {Field::rationals()};
  for (const auto D : discs) fields.push_back(field_from_discriminant(D));
  long volumes_checked = 0;
  bool ok = true;
  for (const auto& K : fields) {
    for (int n = 1; n <= 5; ++n) {
      const Volumes v = volumes(standard_system(K, n));
      ok = ok && v.V.exact && *v.V.exact == PiMonomial{arith::pow(Rational(2), K.r * (n + 1)), K.s * (n + 1)};
      ++volumes_checked;
    }
  }
  std::mt19937_64 rng(2024);
  auto r = [&] { return Rational(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 5)); };
  long rescalings = 0;
  const std::vector<std::int64_t> twisted = {-20, -23, 12, 40};
  while (rescalings < 100) {
    const Field K = field_from_discriminant(twisted[rescalings % twisted.size()]);
    const auto sys = standard_system(K, 2);
    for (const auto& I : class_representatives(K)) {
      const Element lambda(K, r(), r());
      if (lambda.is_zero()) continue;
      ok = ok && class_invariant(sys, I * Ideal::principal(lambda)) == class_invariant(sys, I);
      ++rescalings;
    }
  }
  return {ok, std::to_string(volumes_checked) + " exact volumes (21 fields, n<=5), " + std::to_string(rescalings) +
                  " principal rescalings"};
}

Outcome criterion8(Schedule s) {
  const long expo = schmidt_upper_exponent(1, 2, 1);
  const Integer C = arith::pow(Integer(2), static_cast<unsigned long>(expo));
  bool ok = expo == 2 * (2 + 1 + 3) + 4 + 1 + 20 + 10;
  double worst = 0;
  for (const Rational X : {Rational(0), Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(3),
                           Rational(4), Rational(6), Rational(8), Rational(10)}) {
    const Integer Z = count_quadratic_points_p1(X, s).points;
    ok = ok && Rational(Z) <= Rational(C) * arith::pow(X, 6);
    if (X > 0) worst = std::max(worst, Z.get_d() / arith::pow(X, 6).get_d());
  }
  return {ok, "Z <= 2^" + std::to_string(expo) + " X^6 on 10 grid points, max Z/X^6 = " + fixed(worst, 3)};
}

Outcome criterion9() {
  const PartialSum a = ce_partial_sum(3, 1000, 1e-10);
  const PartialSum b = ce_partial_sum(3, 10000, 1e-10);
  const Real diff = b.sum - a.sum;
  const bool cauchy = diff.certainly_less_equal(a.tail);
  const bool slope = b.decay_slope < -1;
  return {cauchy && slope, "S(1e4)-S(1e3) = " + fixed(diff.mid(), 4) + " <= tail(1e3) = " + fixed(a.tail.upper(), 2) +
                               " [" + to_string(a.tail_provenance) + "]; decay slope " + fixed(b.decay_slope, 3)};
}

// CSV of every count behind criteria 1 to 5 under one schedule.
std::string counting_csv(Schedule s) {
  std::string out;
  out += count_table(rational_report(1, {125, 250, 500, 1000}, s, kTol)).csv();
  out += count_table(rational_report(2, {25, 50, 100, 200}, s, kTol)).csv();
  out += count_table(field_report(make_quadratic_field(-1), 1, {4, 8, 15, 30}, s, kTol)).csv();
  out += count_table(quadratic_p1_report({1, 2, 3, 4, 6, 10}, s, kTol)).csv();
  Table exact;
  exact.columns = {"quantity", "value"};
  const Field Qi = make_quadratic_field(-1);
  exact.add({"Z(P1(Q),1)", count_rational(1, 1, s).get_str()});
  exact.add({"Z(P1(Q),2)", count_rational(1, 2, s).get_str()});
  exact.add({"Z(P1(Q(i)),1)", count_imaginary_quadratic(Qi, 1, 1, s).get_str()});
  exact.add({"Z(P1(Q(i)/Q),1)", count_primitive(Qi, 1, 1, s).get_str()});
  for (const long X : {1, 2, 3, 4}) {
    const QuadraticPointCount p = count_quadratic_points_p1(X, s);
    for (const auto& [D, c] : p.histogram) {
      const std::string key = "X=" + std::to_string(X) + ",D=" + std::to_string(D);
      exact.add({"hist(" + key + ")", c.get_str()});
      if (D < 0) exact.add({"prim(" + key + ")", count_primitive(field_from_discriminant(D), 1, X, s).get_str()});
    }
  }
  out += exact.csv();
  return out;
}

Outcome criterion10() {
  const std::string ref = counting_csv({1, Partition::Block});
  std::string detail = std::to_string(ref.size()) + " bytes;";
  bool ok = true;
  for (const auto& s : {Schedule{1, Partition::Stride}, Schedule{4, Partition::Block}, Schedule{4, Partition::Stride}}) {
    const bool same = counting_csv(s) == ref;
    ok = ok && same;
    detail += " workers=" + std::to_string(s.workers) + "/" + to_string(s.partition) + (same ? " identical" : " DIFFERS");
  }
  return {ok, detail};
}

}  // namespace

int main() {
  const Schedule serial{1, Partition::Block};
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"Schanuel over Q", [&] { return criterion1(serial); }},
      {"Schanuel over Q(i)", [&] { return criterion2(serial); }},
      {"quadratic points of P^1, constant 8/zeta(3)", [&] { return criterion3(serial); }},
      {"exact small cases", [&] { return criterion4(serial); }},
      {"disjoint union over fields", [&] { return criterion5(serial); }},
      {"exponent inequality sweep", criterion6},
      {"volume identities", criterion7},
      {"explicit upper bracket", [&] { return criterion8(serial); }},
      {"convergence diagnostics", criterion9},
      {"determinism across schedules", criterion10},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += !o.pass;
    std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << " | " << criteria[i].first << " | "
              << o.detail << " | " << fixed(secs, 2) << " s" << std::endl;
  }
  return failures == 0 ? 0 : 1;
}

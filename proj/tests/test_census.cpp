#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "schanuel/census.hpp"
#include "schanuel/invariants.hpp"

using namespace schanuel;

namespace {

long gcd3(long a, long b, long c) { return std::gcd(std::gcd(std::labs(a), std::labs(b)), std::labs(c)); }

// Z_H(P^1(K), X) by listing (0:1) and every (1:alpha) with alpha = beta/m,
// m the norm of the denominator ideal (<= X^2) and |alpha| <= X.
Integer brute_imaginary_p1(const Field& K, const Rational& X) {
  if (X < 1) return 0;
  const Rational X2 = X * X;
  const long mmax = arith::floor(X2).get_si();
  const double x = X.get_d();
  std::set<std::pair<std::string, std::string>> seen;
  long count = 1;
  const double wre = K.t / 2.0, wim = std::sqrt(static_cast<double>(-K.disc)) / 2.0;
  for (long m = 1; m <= mmax; ++m) {
    const double r = m * x + 1;
    const long ymax = static_cast<long>(r / wim) + 1;
    for (long y = -ymax; y <= ymax; ++y) {
      const long xmax = static_cast<long>(r + std::abs(y * wre)) + 1;
      for (long u = -xmax; u <= xmax; ++u) {
        const double re = u + y * wre, im = y * wim;
        if (re * re + im * im > r * r) continue;
        const Element alpha = Element(K, u, y) / Element(K, m);
        if (!seen.insert({alpha.a().get_str(), alpha.b().get_str()}).second) continue;
        const HomogeneousTuple t(K, {Element(K, 1), alpha});
        if (height_leq(t, X)) ++count;
      }
    }
  }
  return count;
}

// Z_H(P^n(Q), X) from primitive integer vectors in the box, up to sign.
Integer brute_rational(int n, long X) {
  long count = 0;
  std::vector<long> v(n + 1, -X);
  while (true) {
    long g = 0;
    for (auto c : v) g = std::gcd(g, std::labs(c));
    if (g == 1) ++count;
    int i = 0;
    while (i <= n && v[i] == X) v[i++] = -X;
    if (i > n) break;
    ++v[i];
  }
  return count / 2;
}

struct BrutePoints {
  Integer points = 0;
  std::map<std::int64_t, Integer> histogram;
};

// Quadratic points of P^1 by a box wider than the certified one.
BrutePoints brute_p1(const Rational& X) {
  const Rational Y = X * X;
  const long box = 3 * arith::ceil(Y).get_si() + 3;
  BrutePoints out;
  for (long a = 1; a <= box; ++a) {
    for (long b = -box; b <= box; ++b) {
      for (long c = -box; c <= box; ++c) {
        if (c == 0 || gcd3(a, b, c) != 1) continue;
        const long D = b * b - 4 * a * c;
        if (D > 0 && arith::is_square(D)) continue;
        if (D == 0) continue;
        if (Y < mahler_measure(a, b, c)) continue;
        out.points += 2;
        out.histogram[arith::field_discriminant(arith::squarefree_kernel(D))] += 2;
      }
    }
  }
  return out;
}

// delta(K)^2 as the least Mahler measure over a complete box.
QuadIrrational brute_delta_squared(const Field& K) {
  const QuadIrrational bound = omega_height_squared(K);
  const long B = static_cast<long>(bound.to_real().upper()) + 1;
  std::optional<QuadIrrational> best;
  for (long a = 1; a <= B; ++a) {
    for (long b = -2 * B; b <= 2 * B; ++b) {
      for (long c = -B; c <= B; ++c) {
        if (c == 0 || gcd3(a, b, c) != 1) continue;
        const long D = b * b - 4 * a * c;
        if (D == 0 || arith::squarefree_kernel(D) != K.d || (D > 0 && arith::is_square(D))) continue;
        const QuadIrrational M = mahler_measure(a, b, c);
        if (!best || M < *best) best = M;
      }
    }
  }
  REQUIRE(best);
  return *best;
}

}  // namespace

TEST_CASE("exact small cases") {
  CHECK(count_rational(1, 1) == 4);
  CHECK(count_rational(1, 2) == 8);
  CHECK(count_rational(1, Rational(1, 2)) == 0);
  CHECK(count_imaginary_quadratic(make_quadratic_field(-1), 1, 1) == 6);
  CHECK(count_primitive(make_quadratic_field(-1), 1, 1) == 2);
  CHECK(count_quadratic_points_p1(1).points == 6);
  CHECK(n_disc(8) == 6);
}

TEST_CASE("rational counts against primitive vectors") {
  for (long X = 0; X <= 30; ++X) CHECK(count_rational(1, X) == brute_rational(1, X));
  for (long X = 0; X <= 10; ++X) CHECK(count_rational(2, X) == brute_rational(2, X));
  for (long X = 0; X <= 4; ++X) CHECK(count_rational(3, X) == brute_rational(3, X));
  CHECK(count_rational(1, Rational(7, 2)) == count_rational(1, 3));
}

TEST_CASE("imaginary quadratic counts against direct enumeration") {
  for (const std::int64_t D : {-4, -3, -7, -20, -23}) {
    const Field K = field_from_discriminant(D);
    for (const Rational X : {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2), Rational(5, 2), Rational(3)}) {
      CAPTURE(D);
      CAPTURE(X.get_str());
      CHECK(count_imaginary_quadratic(K, 1, X) == brute_imaginary_p1(K, X));
    }
  }
  CHECK_THROWS_AS(count_imaginary_quadratic(make_quadratic_field(5), 1, 3), Error);
}

TEST_CASE("lattice point counts in ideals") {
  for (const std::int64_t D : {-4, -20, -23}) {
    const Field K = field_from_discriminant(D);
    for (const auto& I : class_representatives(K)) {
      const auto basis = I.basis();
      for (const Rational R : {Rational(0), Rational(5), Rational(37, 2), Rational(60)}) {
        long brute = 0;
        for (long x = -40; x <= 40; ++x) {
          for (long y = -40; y <= 40; ++y) {
            const Element e = Element(K, x) * basis[0] + Element(K, y) * basis[1];
            if (e.norm() <= R) ++brute;
          }
        }
        CHECK(lattice_count(I, R) == brute);
      }
    }
  }
}

TEST_CASE("discriminant counts") {
  for (const long T : {1, 3, 4, 5, 8, 12, 100, 1000}) {
    long brute = 0;
    for (long D = -T; D <= T; ++D) brute += arith::is_fundamental_discriminant(D);
    CHECK(n_disc(T) == brute);
  }
  CHECK(n_disc(Rational(17, 2)) == n_disc(8));
}

TEST_CASE("Mahler threshold test agrees with the exact measure on a wide box") {
  for (const Rational Y : {Rational(1), Rational(5, 2), Rational(4), Rational(9)}) {
    for (long a = 1; a <= 25; ++a) {
      for (long b = -30; b <= 30; ++b) {
        for (long c = -25; c <= 25; ++c) {
          if (c == 0) continue;
          CHECK(mahler_at_most(a, b, c, Y) == (mahler_measure(a, b, c) <= QuadIrrational(Y)));
        }
      }
    }
  }
}

TEST_CASE("quadratic points of P^1 against a wider box") {
  for (const Rational X : {Rational(1), Rational(3, 2), Rational(2), Rational(5, 2), Rational(3)}) {
    CAPTURE(X.get_str());
    const QuadraticPointCount got = count_quadratic_points_p1(X);
    const BrutePoints want = brute_p1(X);
    CHECK(got.points == want.points);
    CHECK(got.histogram == want.histogram);
  }
}

TEST_CASE("delta of fields") {
  const auto qi = delta_of_field(make_quadratic_field(-1));
  REQUIRE(qi.delta.exact);
  CHECK(qi.delta.exact->value == QuadIrrational(1));
  const auto r2 = delta_of_field(make_quadratic_field(2));
  REQUIRE(r2.delta.exact);
  CHECK(r2.delta.exact->root == 2);
  CHECK(r2.delta.exact->value == QuadIrrational(2));
  CHECK(r2.delta.enclosure.overlaps(sqrt(Real(2))));
  const auto r5 = delta_of_field(make_quadratic_field(5));
  CHECK(r5.delta.exact->value == QuadIrrational(Rational(1, 2), Rational(1, 2), 5));
  CHECK(delta_of_field(make_quadratic_field(-5)).delta.exact->value == QuadIrrational(3));
  CHECK_THROWS_AS(delta_of_field(make_quadratic_field(-5), 1), Error);
  for (const auto D : arith::fundamental_discriminants(60)) {
    CAPTURE(D);
    const Field K = field_from_discriminant(D);
    const auto e = delta_of_field(K);
    CHECK(e.delta.exact->value == brute_delta_squared(K));
    CHECK(mahler_measure(e.a, e.b, e.c) == e.delta.exact->value);
    CHECK(e.witness.field() == K);
    // The same answer from a larger cap.
    CHECK(delta_of_field(K, 4).delta.exact->value == e.delta.exact->value);
    const DiscriminantBounds b = discriminant_bounds(K);
    // Equality at D = -4, so compare delta^4 exactly.
    CHECK(QuadIrrational(b.delta_lower_fourth) <= e.delta.exact->value * e.delta.exact->value);
    CHECK(b.delta_lower.overlaps(pow(Real(b.delta_lower_fourth), Real(arith::ratio(1, 4)))));
    CHECK(e.delta.enclosure.lower_point().certainly_less_equal(b.delta_upper));
  }
}

TEST_CASE("N_delta against per-field delta") {
  for (const Rational T : {Rational(1), Rational(3, 2), Rational(2), Rational(5, 2)}) {
    CAPTURE(T.get_str());
    long brute = 0;
    const Rational bound = 4 * arith::pow(T, 4);
    for (const auto D : arith::fundamental_discriminants(arith::floor(bound).get_si())) {
      const auto e = delta_of_field(field_from_discriminant(D));
      if (e.delta.exact->value <= QuadIrrational(T * T)) ++brute;
    }
    const NDeltaResult r = n_delta(T);
    CHECK(r.count == brute);
    CHECK(r.certified_bound == bound);
  }
  CHECK(n_delta(1).count == 2);
  CHECK(n_delta(2).count == 24);
  CHECK_THROWS_AS(n_delta(2, 10), Error);
}

TEST_CASE("N_delta grows at least like T^2") {
  std::vector<double> xs, ys;
  Integer previous = 0;
  for (const long T : {4, 8, 16, 32}) {
    const NDeltaResult r = n_delta(T);
    CHECK(r.count >= previous);
    previous = r.count;
    xs.push_back(std::log(static_cast<double>(T)));
    ys.push_back(std::log(r.count.get_d()));
  }
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / 4, my = std::accumulate(ys.begin(), ys.end(), 0.0) / 4;
  double sxy = 0, sxx = 0;
  for (int i = 0; i < 4; ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  MESSAGE("N_delta log-log slope on [4, 32]: " << sxy / sxx);
  CHECK(sxy / sxx >= 2 - 0.3);
}

TEST_CASE("primitive Gaussian points approach the prediction") {
  const CountReport r = primitive_report(make_quadratic_field(-1), 3, {12, 20});
  const double at12 = r.counts[0].get_d() / r.prediction[0].mid();
  const double at20 = r.counts[1].get_d() / r.prediction[1].mid();
  MESSAGE("count / prediction at X = 12: " << at12 << ", at X = 20: " << at20);
  CHECK(std::abs(at20 - 1) <= 0.10);
  CHECK(std::abs(at20 - 1) < std::abs(at12 - 1));
}

TEST_CASE("residual fits") {
  const CountReport rat = rational_report(1, {125, 250, 500, 1000});
  CHECK(rat.fitted_error_exponent <= 1.15);
  CHECK_FALSE(rat.flag);
  const CountReport gauss = field_report(make_quadratic_field(-1), 1, {4, 8, 16, 32});
  CHECK(gauss.fitted_error_exponent <= 3.15);
  CHECK_FALSE(gauss.flag);
  CountReport zero = rat;
  for (auto& r : zero.residuals) r = 0;
  const ResidualFit fit = residual_analysis(zero);
  CHECK(std::isinf(fit.slope));
  CHECK(fit.slope < 0);
  CHECK_FALSE(fit.flag);
  CountReport narrow = rat;
  narrow.grid = {100, 110, 120, 130};
  CHECK_THROWS_AS(residual_analysis(narrow), Error);
  narrow.grid = {100, 1000};
  CHECK_THROWS_AS(residual_analysis(narrow), Error);
}

TEST_CASE("counts do not depend on the schedule") {
  const Field K5 = make_quadratic_field(-5);
  const Integer r = count_rational(2, 60);
  const Integer q = count_imaginary_quadratic(K5, 2, 5);
  const QuadraticPointCount p = count_quadratic_points_p1(4);
  for (const int workers : {1, 2, 4, 8}) {
    for (const Partition part : {Partition::Block, Partition::Stride}) {
      const Schedule s{workers, part};
      CHECK(count_rational(2, 60, s) == r);
      CHECK(count_imaginary_quadratic(K5, 2, 5, s) == q);
      const QuadraticPointCount pp = count_quadratic_points_p1(4, s);
      CHECK(pp.points == p.points);
      CHECK(pp.histogram == p.histogram);
    }
  }
}

TEST_CASE("disjoint union over fields") {
  for (const long X : {1, 2, 3}) {
    const QuadraticPointCount p = count_quadratic_points_p1(X);
    Integer total = 0;
    for (const auto& [D, c] : p.histogram) {
      if (D < 0) CHECK(count_primitive(field_from_discriminant(D), 1, X) == c);
      total += c;
    }
    CHECK(total == p.points);
  }
}

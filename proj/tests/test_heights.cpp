#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <numeric>
#include <random>

#include "schanuel/heights.hpp"

using namespace schanuel;

namespace {

double numeric_mahler(long a, long b, long c) {
  const std::complex<double> disc = std::sqrt(std::complex<double>(static_cast<double>(b * b - 4 * a * c)));
  const std::complex<double> r1 = (-static_cast<double>(b) + disc) / (2.0 * a);
  const std::complex<double> r2 = (-static_cast<double>(b) - disc) / (2.0 * a);
  return std::abs(a) * std::max(1.0, std::abs(r1)) * std::max(1.0, std::abs(r2));
}

// A root of a x^2 + b x + c as an element of Q(sqrt(b^2 - 4ac)).
Element root_of(long a, long b, long c) {
  const std::int64_t D = b * b - 4 * a * c;
  const Field K = make_quadratic_field(arith::squarefree_kernel(D));
  // sqrt(D) = m sqrt(k); sqrt(k) is w when disc = 4k and 2w - t when disc = k.
  const std::int64_t k = arith::squarefree_kernel(D);
  const Integer m = arith::isqrt(Integer(static_cast<long>(D / k)));
  const Element w = Element::omega(K);
  const Element sqrt_k = K.disc == k ? w + w - Element(K, K.t) : w;
  const Element sqrt_D = Element(K, Rational(m)) * sqrt_k;
  return (Element(K, -b) + sqrt_D) / Element(K, 2 * a);
}

}  // namespace

TEST_CASE("rational heights are max of coprime coordinates") {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 300; ++i) {
    std::vector<long> v(3);
    for (auto& x : v) x = static_cast<long>(rng() % 41) - 20;
    if (v[0] == 0 && v[1] == 0 && v[2] == 0) continue;
    long g = 0, mx = 0;
    for (auto x : v) g = std::gcd(g, std::labs(x));
    for (auto x : v) mx = std::max(mx, std::labs(x) / g);
    const auto t = HomogeneousTuple::rational({Rational(v[0], 3), Rational(v[1], 3), Rational(v[2], 3)});
    CHECK(weil_height_power(t) == QuadIrrational(mx));
    CHECK(height_leq(t, mx));
    CHECK_FALSE(height_leq(t, Rational(mx) - Rational(1, 1000)));
  }
  CHECK_THROWS_AS(HomogeneousTuple::rational({0, 0}), Error);
}

TEST_CASE("heights are invariant under scaling and base extension") {
  std::mt19937_64 rng(2);
  for (const std::int64_t d : {-1, -5, -3, 2, 5, 15}) {
    const Field K = make_quadratic_field(d);
    for (int i = 0; i < 30; ++i) {
      auto r = [&] { return Rational(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 3)); };
      std::vector<Element> coords = {Element(K, r(), r()), Element(K, r(), r())};
      if (coords[0].is_zero() && coords[1].is_zero()) continue;
      const HomogeneousTuple t(K, coords);
      Element lambda(K, r(), r());
      if (lambda.is_zero()) lambda = Element(K, 7, 1);
      CHECK(weil_height_power(t.scaled(lambda)) == weil_height_power(t));
      CHECK(weil_height(t).enclosure.width() < 1e-25);
    }
    const auto q = HomogeneousTuple::rational({1, 2, Rational(-3, 4)});
    // (1 : 2 : -3/4) = (4 : 8 : -3) has H = 8 over Q and H^2 = 64 over K.
    CHECK(weil_height_power(q.lifted(K)) == QuadIrrational(64));
  }
}

TEST_CASE("Gaussian height by content ideal and archimedean size") {
  std::mt19937_64 rng(3);
  const Field K = make_quadratic_field(-1);
  for (int i = 0; i < 200; ++i) {
    auto r = [&] { return static_cast<long>(rng() % 15) - 7; };
    std::vector<Element> coords = {Element(K, r(), r()), Element(K, r(), r())};
    if (coords[0].is_zero() && coords[1].is_zero()) continue;
    // H^2 = max |x_j|^2 / N(content) for a tuple of integers.
    Rational mx = 0;
    for (const auto& x : coords) mx = std::max(mx, x.norm());
    const Rational expected = mx / content_ideal(coords).norm();
    CHECK(weil_height_power(HomogeneousTuple(K, coords)) == QuadIrrational(expected));
  }
}

TEST_CASE("Mahler measure: exact values against numeric roots") {
  CHECK(mahler_measure(1, -1, -1) == QuadIrrational(Rational(1, 2), Rational(1, 2), 5));  // golden ratio
  CHECK(mahler_measure(1, 0, -2) == QuadIrrational(2));
  CHECK(mahler_measure(1, 0, 1) == QuadIrrational(1));
  CHECK(mahler_measure(3, 1, 5) == QuadIrrational(5));
  for (long a = 1; a <= 6; ++a) {
    for (long b = -12; b <= 12; ++b) {
      for (long c = -8; c <= 8; ++c) {
        if (c == 0) continue;
        const double m = mahler_measure(a, b, c).to_real().mid();
        CHECK(std::abs(m - numeric_mahler(a, b, c)) < 1e-9 * std::max(1.0, m));
      }
    }
  }
}

TEST_CASE("root heights agree with the height of (1, alpha)") {
  for (long a = 1; a <= 4; ++a) {
    for (long b = -6; b <= 6; ++b) {
      for (long c = -6; c <= 6; ++c) {
        if (c == 0 || std::gcd(std::gcd(a, std::labs(b)), std::labs(c)) != 1) continue;
        const long D = b * b - 4 * a * c;
        if (D == 0 || arith::is_square(std::labs(D)) && D > 0) continue;
        CAPTURE(a);
        CAPTURE(b);
        CAPTURE(c);
        const Element alpha = root_of(a, b, c);
        const HomogeneousTuple t(alpha.field(), {Element(alpha.field(), 1), alpha});
        CHECK(weil_height_power(t) == mahler_measure(a, b, c));
        const HeightValue h = root_height_from_minpoly(a, b, c);
        CHECK(pow(h.enclosure, 2).overlaps(mahler_measure(a, b, c).to_real()));
      }
    }
  }
  CHECK_THROWS_AS(root_height_from_minpoly(1, 0, -4), Error);  // reducible
  CHECK_THROWS_AS(root_height_from_minpoly(2, 0, 2), Error);   // not primitive
}

TEST_CASE("standard system height is the Weil height") {
  std::mt19937_64 rng(4);
  for (const std::int64_t d : {-1, -5, 2}) {
    const Field K = make_quadratic_field(d);
    const auto sys = standard_system(K, 1);
    for (int i = 0; i < 25; ++i) {
      auto r = [&] { return static_cast<long>(rng() % 11) - 5; };
      std::vector<Element> coords = {Element(K, r(), r()), Element(K, r(), r())};
      if (coords[0].is_zero() && coords[1].is_zero()) continue;
      const HomogeneousTuple t(K, coords);
      CHECK(als_height(sys, t).enclosure.overlaps(weil_height(t).enclosure));
    }
  }
}

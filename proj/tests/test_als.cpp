#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "schanuel/als.hpp"

using namespace schanuel;

namespace {

const std::vector<std::int64_t> kDiscs = {-3, -4, -7, -8, -11, -15, -20, -23, -24, -39,
                                          5,  8,  12, 13, 17, 21, 24, 40, 60, 65};

}  // namespace

TEST_CASE("unit ball volumes") {
  CHECK(unit_ball_volume(1) == PiMonomial{2, 0});
  CHECK(unit_ball_volume(2) == PiMonomial{1, 1});
  CHECK(unit_ball_volume(3) == PiMonomial{Rational(4, 3), 1});
  CHECK(unit_ball_volume(4) == PiMonomial{Rational(1, 2), 2});
  CHECK(unit_ball_volume(5) == PiMonomial{Rational(8, 15), 2});
}

TEST_CASE("standard volume is 2^{r(n+1)} pi^{s(n+1)} exactly") {
  std::vector<Field> fields = {Field::rationals()};
  for (const auto D : kDiscs) fields.push_back(field_from_discriminant(D));
  CHECK(fields.size() == 21);
  for (const auto& K : fields) {
    for (int n = 1; n <= 5; ++n) {
      CAPTURE(K.label());
      CAPTURE(n);
      const Volumes v = volumes(standard_system(K, n));
      CHECK(v.V_fin == 1);
      REQUIRE(v.V.exact);
      CHECK(*v.V.exact == PiMonomial{arith::pow(Rational(2), K.r * (n + 1)), K.s * (n + 1)});
    }
  }
}

TEST_CASE("class invariants are unchanged by principal rescaling") {
  std::mt19937_64 rng(17);
  auto r = [&] { return Rational(static_cast<long>(rng() % 19) - 9, 1 + static_cast<long>(rng() % 4)); };
  long checks = 0;
  for (const std::int64_t D : {-4, -20, -23, 5, 12, 40}) {
    const Field K = field_from_discriminant(D);
    for (const auto& sys : {standard_system(K, 1), l2_system(K, 2)}) {
      for (const auto& I : class_representatives(K)) {
        const SqrtMonomial base = class_invariant(sys, I);
        for (int i = 0; i < 100 / 6 + 1; ++i) {
          Element lambda(K, r(), r());
          if (lambda.is_zero()) continue;
          CHECK(class_invariant(sys, I * Ideal::principal(lambda)) == base);
          ++checks;
        }
      }
    }
  }
  CHECK(checks >= 100);
}

TEST_CASE("lattice determinants match their bases") {
  for (const std::int64_t D : {-4, -15, -23, 5, 12, 13}) {
    const Field K = field_from_discriminant(D);
    for (const auto& I : class_representatives(K)) {
      const Lattice L = lattice(standard_system(K, 1), I);
      const double numeric = std::abs(L.basis.determinant());
      const double exact = L.det.to_real().mid();
      CHECK(numeric == doctest::Approx(exact).epsilon(1e-10));
      // Standard system: det Lambda(D) = (2^{-s} sqrt|disc| N(D))^{n+1}.
      const Rational s = arith::pow(Rational(2), -K.s) * I.norm();
      CHECK(L.det == SqrtMonomial{s * s, Integer(static_cast<long>(std::abs(D))), 2});
    }
  }
}

TEST_CASE("l2 volumes and constants") {
  const Field Qi = make_quadratic_field(-1);
  const Volumes v = volumes(l2_system(Qi, 1));
  REQUIRE(v.V.exact);
  CHECK(*v.V.exact == PiMonomial{Rational(1, 2), 2});  // ball in R^4
  const Volumes q = volumes(l2_system(Field::rationals(), 2));
  CHECK(*q.V.exact == PiMonomial{Rational(4, 3), 1});
  const auto sys = l2_system(Field::rationals(), 1);
  CHECK(sys.C().contains(Rational(1)));
  CHECK(sys.M() >= 1);
}

TEST_CASE("norm axioms by sampling") {
  std::mt19937_64 rng(23);
  std::uniform_real_distribution<double> u(-3, 3);
  const std::vector<InfiniteNorm> norms = {max_norm(1, 2), max_norm(2, 1), l2_norm(1, 2), l2_norm(2, 2),
                                           lp_norm(1, 1, 1, 1, 2, Real(4))};
  for (const auto& N : norms) {
    std::vector<double> zero(N.ambient_dimension(), 0.0);
    CHECK(N.evaluate(zero) == 0.0);
    for (int i = 0; i < 200; ++i) {
      std::vector<double> z(N.ambient_dimension());
      for (auto& x : z) x = u(rng);
      const double base = N.evaluate(z);
      CHECK(base > 0);
      CHECK(base >= N.c_v.get_d() * InfiniteNorm::max_modulus(z, N.d_v) * (1 - 1e-12));
      // Multiply by a scalar (a real for d_v = 1, a unimodular times modulus for d_v = 2).
      const double t = u(rng), th = u(rng);
      std::vector<double> sz(z.size());
      if (N.d_v == 1) {
        for (std::size_t j = 0; j < z.size(); ++j) sz[j] = t * z[j];
      } else {
        for (std::size_t j = 0; j < z.size(); j += 2) {
          const std::complex<double> w = std::polar(std::abs(t), th) * std::complex<double>(z[j], z[j + 1]);
          sz[j] = w.real();
          sz[j + 1] = w.imag();
        }
      }
      CHECK(N.evaluate(sz) == doctest::Approx(std::abs(t) * base).epsilon(1e-12));
    }
  }
}

TEST_CASE("declared Lipschitz data covers the boundary") {
  for (const auto& N : {max_norm(1, 1), max_norm(2, 1), l2_norm(1, 2), l2_norm(2, 1)}) {
    const CoverReport rep = lipschitz_cover_check(N, 2000);
    CHECK(rep.passed);
    CHECK(rep.max_ratio <= rep.declared_L * (1 + 1e-9));
    CHECK(sampled_c_ratio(N, 2000) >= N.c_v.get_d() - 1e-12);
  }
}

TEST_CASE("Monte Carlo volume of an l1 ball") {
  InfiniteNorm N = lp_norm(1, 1, 1, 1, 4, Real(4));
  N.volume_samples = 200000;
  const Volume v = norm_volume(N);
  CHECK_FALSE(v.exact);
  CHECK(v.enclosure.contains(Rational(2)));
  CHECK(v.enclosure.width() < 0.1);
  // Same seed, same enclosure, whatever the worker count.
  const Volume w = norm_volume(N, 4);
  CHECK(v.enclosure.lower() == w.enclosure.lower());
  CHECK(v.enclosure.upper() == w.enclosure.upper());
}

TEST_CASE("system files") {
  const auto sys = load_system_file(SCHANUEL_DATA_DIR "/twisted_system.json");
  CHECK(sys.field() == make_quadratic_field(-5));
  CHECK(sys.n() == 1);
  CHECK_FALSE(sys.is_standard());
  CHECK(sys.all_l2());
  CHECK(sys.coordinate_ideal(0).norm() == 2);
  const Volumes v = volumes(sys);
  CHECK(v.V_fin > 0);
  CHECK(v.V.exact);
  CHECK_THROWS_AS(system_from_json(R"({"field": -1, "n": 1, "finite": "other"})"), Error);
  CHECK_THROWS_AS(system_from_json(R"({"field": 5, "n": 1, "infinite": [{"kind":"max"},{"kind":"max"},{"kind":"max"}]})"),
                  Error);
  CHECK_THROWS_AS(system_from_json("{"), Error);
  const auto std5 = system_from_json(R"({"field": 5, "n": 2})");
  CHECK(std5.is_standard());
}

TEST_CASE("uniform standard family dominates its members") {
  const auto fam = standard_family(3);
  for (const auto D : kDiscs) CHECK(fam.dominates(field_from_discriminant(D)));
  CHECK(fam.constants().M == 8);
}

#include "schanuel/census.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "schanuel/invariants.hpp"

namespace schanuel {

namespace {

// Sum of f(i) over i in [0, count), one partial sum per worker.
template <class F>
Integer parallel_sum(std::size_t count, Schedule sched, F&& f) {
  const int W = std::max(sched.workers, 1);
  std::vector<Integer> partial(static_cast<std::size_t>(W), 0);
  parallel_for(static_cast<std::size_t>(W), W, [&](std::size_t w) {
    Integer acc = 0;
    for (const std::size_t i : schedule(count, W, static_cast<int>(w), sched.partition)) acc += f(i);
    partial[w] = acc;
  });
  Integer total = 0;
  for (const auto& p : partial) total += p;
  return total;
}

Integer fdiv(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

// Squarefree part of every 0 <= k <= limit.
std::vector<std::int32_t> squarefree_kernels(std::int64_t limit) {
  std::vector<std::int32_t> ker(static_cast<std::size_t>(limit) + 1);
  for (std::int64_t k = 0; k <= limit; ++k) ker[k] = static_cast<std::int32_t>(k);
  for (std::int64_t i = 2; i * i <= limit; ++i) {
    const std::int64_t sq = i * i;
    for (std::int64_t j = sq; j <= limit; j += sq) {
      while (ker[j] % sq == 0) ker[j] /= static_cast<std::int32_t>(sq);
    }
  }
  return ker;
}

// floor(Y + P/Y) for Y = num/den > 0.
std::int64_t b_bound(std::int64_t num, std::int64_t den, std::int64_t P) {
  const __int128 top = static_cast<__int128>(num) * num + static_cast<__int128>(P) * den * den;
  const __int128 bot = static_cast<__int128>(num) * den;
  __int128 q = top / bot;
  if (top % bot != 0 && ((top < 0) != (bot < 0))) --q;
  return static_cast<std::int64_t>(q);
}

std::pair<std::int64_t, std::int64_t> small_ratio(const Rational& q) {
  if (!q.get_num().fits_slong_p() || !q.get_den().fits_slong_p()) {
    throw Error(ErrorKind::InvalidArgument, "height bound too large for enumeration");
  }
  return {q.get_num().get_si(), q.get_den().get_si()};
}

Real main_term(const Real& constant, const Rational& X, int exponent) {
  return constant * Real(arith::pow(X, exponent), constant.precision());
}

std::string rat(const Rational& q) { return arith::to_string(q); }

}  // namespace

Integer count_rational(int n, const Rational& X, Schedule sched) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
  if (X < 1) return 0;
  const std::int64_t B = arith::floor(X).get_si();
  const auto mu = arith::mobius_table(B);
  // Nonzero tuples in [-B, B]^{n+1} with gcd 1, by Moebius inversion over the gcd.
  const Integer total = parallel_sum(static_cast<std::size_t>(B), sched, [&](std::size_t i) -> Integer {
    const std::int64_t d = static_cast<std::int64_t>(i) + 1;
    if (mu[d] == 0) return 0;
    const Integer side = 2 * (B / d) + 1;
    const Integer tuples = arith::pow(side, static_cast<unsigned long>(n + 1)) - 1;
    return mu[d] > 0 ? tuples : Integer(-tuples);
  });
  return total / 2;
}

Integer lattice_count(const Ideal& I, const Rational& R) {
  const Field& K = I.field();
  if (!K.is_imaginary()) throw Error(ErrorKind::InvalidArgument, "lattice counts need an imaginary quadratic field");
  const Rational Rp = R / (I.scale() * I.scale());
  if (Rp < 0) return 0;
  // Elements scale*(u + y w), u = x a + y b; N = scale^2 (u^2 + u y t + y^2 N(w)).
  const Integer P = Rp.get_num();
  const Integer Q = Rp.get_den();
  const Integer q = static_cast<long>(-K.disc);
  const Integer t = K.t;
  const Integer& a = I.a();
  const Integer& b = I.b();
  const Integer y_max = arith::isqrt(fdiv(4 * P, Q * q));
  Integer count = 0;
  for (Integer y = -y_max; y <= y_max; ++y) {
    const Integer M = Q * (4 * P - Q * y * y * q);
    if (M < 0) continue;
    const Integer s = arith::isqrt(M);
    const Integer e = 2 * Q;
    const Integer hi = fdiv(-y * t * Q + s, e);
    const Integer lo = -fdiv(y * t * Q + s, e);
    if (hi < lo) continue;
    Integer r;
    mpz_fdiv_r(r.get_mpz_t(), Integer(y * b).get_mpz_t(), a.get_mpz_t());
    count += fdiv(hi - r, a) - fdiv(lo - 1 - r, a);
  }
  return count;
}

Integer count_imaginary_quadratic(const Field& K, int n, const Rational& X, Schedule sched) {
  if (K.is_rational()) return count_rational(n, X, sched);
  if (!K.is_imaginary()) {
    throw Error(ErrorKind::UnsupportedClassNumber,
                "point counts over real quadratic fields are not enumerated (infinite unit group)");
  }
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be at least 1");
  if (X < 1) return 0;
  const Rational Y = X * X;
  const std::int64_t Ymax = arith::floor(Y).get_si();

  // Squarefree integral ideals b with N(b) <= Y and their Moebius signs.
  struct Sf {
    Ideal ideal;
    std::int64_t norm;
    int mu;
  };
  std::vector<Sf> sf{{Ideal::unit(K), 1, 1}};
  for (const std::int64_t p : arith::primes_up_to(Ymax)) {
    for (const auto& v : places_above(K, p)) {
      if (v.Np > Ymax) continue;
      const Ideal P = v.prime_ideal();
      const std::size_t existing = sf.size();
      for (std::size_t i = 0; i < existing; ++i) {
        if (sf[i].norm * v.Np > Ymax) continue;
        sf.push_back({sf[i].ideal * P, sf[i].norm * v.Np, -sf[i].mu});
      }
    }
  }

  // Each point has a representative whose content is a fixed class representative A,
  // unique up to units; Moebius over b removes tuples whose content is a proper multiple.
  const auto reps = class_representatives(K);
  std::vector<std::pair<std::size_t, std::size_t>> tasks;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    for (std::size_t j = 0; j < sf.size(); ++j) tasks.emplace_back(i, j);
  }
  const Integer total = parallel_sum(tasks.size(), sched, [&](std::size_t k) -> Integer {
    const Ideal& A = reps[tasks[k].first];
    const Sf& B = sf[tasks[k].second];
    const Rational NA = A.norm();
    const Integer L = lattice_count(A * B.ideal, Y * NA);
    const Integer tuples = arith::pow(L, static_cast<unsigned long>(n + 1)) - 1;
    return B.mu > 0 ? tuples : Integer(-tuples);
  });
  if (total % K.w != 0) throw Error(ErrorKind::InvalidArgument, "unit orbits do not divide the tuple count");
  return total / K.w;
}

Integer count_primitive(const Field& K, int n, const Rational& X, Schedule sched) {
  if (K.is_rational()) throw Error(ErrorKind::InvalidArgument, "primitive points need a quadratic field");
  return count_imaginary_quadratic(K, n, X, sched) - count_rational(n, X, sched);
}

bool mahler_at_most(std::int64_t a, std::int64_t b, std::int64_t c, const Rational& Y) {
  // M = max(a, |c|, (|b| + sqrt(D))/2) for real roots and max(a, c) for complex ones;
  // given a, |c| <= Y both collapse to |b| <= Y + ac/Y.
  if (a < 1 || c == 0) throw Error(ErrorKind::InvalidArgument, "expects a >= 1 and c != 0");
  if (Rational(a) > Y || Rational(std::abs(c)) > Y) return false;
  return Rational(std::abs(b)) <= Y + Rational(a) * Rational(c) / Y;
}

QuadraticPointCount count_quadratic_points_p1(const Rational& X, Schedule sched) {
  QuadraticPointCount out;
  out.X = X;
  out.points = 0;
  if (X < 1) return out;
  const Rational Y = X * X;
  const auto [num, den] = small_ratio(Y);
  const std::int64_t Ym = arith::floor(Y).get_si();
  // |b| <= 2Y and 4a|c| <= 4Y^2 bound the discriminants.
  const auto ker = squarefree_kernels(8 * Ym * Ym + 8);

  const int W = std::max(sched.workers, 1);
  std::vector<std::map<std::int64_t, Integer>> partial(static_cast<std::size_t>(W));
  parallel_for(static_cast<std::size_t>(W), W, [&](std::size_t w) {
    std::map<std::int64_t, long> local;
    for (const std::size_t i : schedule(static_cast<std::size_t>(Ym), W, static_cast<int>(w), sched.partition)) {
      const std::int64_t a = static_cast<std::int64_t>(i) + 1;
      for (std::int64_t c = -Ym; c <= Ym; ++c) {
        if (c == 0) continue;
        const std::int64_t bmax = b_bound(num, den, a * c);
        for (std::int64_t b = -bmax; b <= bmax; ++b) {
          const std::int64_t D = b * b - 4 * a * c;
          if (D == 0 || (D > 0 && ker[D] == 1)) continue;  // rational roots
          if (std::gcd(std::gcd(a, std::abs(b)), std::abs(c)) != 1) continue;
          const std::int64_t k = D > 0 ? ker[D] : -static_cast<std::int64_t>(ker[-D]);
          local[arith::field_discriminant(k)] += 2;
        }
      }
    }
    for (const auto& [d, v] : local) partial[w][d] += v;
  });
  for (const auto& m : partial) {
    for (const auto& [d, v] : m) {
      out.histogram[d] += v;
      out.points += v;
    }
  }
  return out;
}

QuadIrrational omega_height_squared(const Field& K) {
  if (K.is_rational()) throw Error(ErrorKind::InvalidArgument, "Q has no quadratic generator");
  return mahler_measure(1, -K.t, K.norm_omega);
}

FieldCensusEntry delta_of_field(const Field& K, const Rational& cap) {
  const QuadIrrational upper = omega_height_squared(K);
  if (QuadIrrational(cap * cap) < upper) {
    throw Error(ErrorKind::CapTooSmall, "cap " + rat(cap) + " is below H(1, w) for " + K.label());
  }
  const Rational Y = cap * cap;
  const auto [num, den] = small_ratio(Y);
  const std::int64_t Ym = arith::floor(Y).get_si();
  const std::int64_t q = std::llabs(K.disc);
  FieldCensusEntry best;
  best.field = K;
  best.disc = K.disc;
  std::optional<QuadIrrational> bestM;
  for (std::int64_t a = 1; a <= Ym; ++a) {
    for (std::int64_t c = -Ym; c <= Ym; ++c) {
      if (c == 0) continue;
      const std::int64_t bmax = b_bound(num, den, a * c);
      for (std::int64_t b = -bmax; b <= bmax; ++b) {
        const std::int64_t D = b * b - 4 * a * c;
        // The root lies in K iff D = f^2 disc.
        if (D == 0 || (D < 0) != (K.disc < 0) || D % q != 0) continue;
        const std::int64_t f2 = D / K.disc;
        if (!arith::is_square(f2)) continue;
        if (std::gcd(std::gcd(a, std::abs(b)), std::abs(c)) != 1) continue;
        const QuadIrrational M = mahler_measure(a, b, c);
        if (bestM && !(M < *bestM)) continue;
        bestM = M;
        const std::int64_t f = arith::isqrt(f2);
        best.a = a;
        best.b = b;
        best.c = c;
        best.witness = Element(K, arith::ratio(-b - f * K.t, 2 * a), arith::ratio(f, a));
      }
    }
  }
  if (!bestM) throw Error(ErrorKind::CapTooSmall, "no generator of " + K.label() + " below the cap");
  best.delta = HeightValue{sqrt(bestM->to_real()), ExactHeight{2, *bestM}};
  return best;
}

FieldCensusEntry delta_of_field(const Field& K) {
  const QuadIrrational upper = omega_height_squared(K);
  // Smallest integer cap with cap^2 >= H(1, w)^2.
  Integer cap = std::max<long>(1, static_cast<long>(std::sqrt(upper.to_real().lower())) - 1);
  while (QuadIrrational(Rational(cap * cap)) < upper) ++cap;
  return delta_of_field(K, Rational(cap));
}

NDeltaResult n_delta(const Rational& T, std::int64_t scan) {
  NDeltaResult out;
  out.T = T;
  out.scan = scan;
  out.certified_bound = 4 * arith::pow(T, 4);
  out.count = 0;
  // delta >= |disc|^{1/4} / sqrt(2), so delta <= T forces |disc| <= 4 T^4.
  if (Rational(scan) < out.certified_bound) {
    throw Error(ErrorKind::ScanTooSmall, "scan " + std::to_string(scan) + " is below the certified bound " +
                                             rat(out.certified_bound));
  }
  if (T < 1) return out;
  const Rational Y = T * T;
  const auto [num, den] = small_ratio(Y);
  const std::int64_t Ym = arith::floor(Y).get_si();
  // Fields of quadratics with M <= Y; non-primitive ones add nothing new since
  // M(g f) = g M(f). The b range depends on a and c only through P = ac.
  std::vector<bool> product(static_cast<std::size_t>(Ym * Ym) + 1, false);
  for (std::int64_t a = 1; a <= Ym; ++a) {
    for (std::int64_t c = 1; c <= Ym; ++c) product[a * c] = true;
  }
  const std::int64_t Dmax = 8 * Ym * Ym + 8;
  std::vector<bool> pos(static_cast<std::size_t>(Dmax) + 1, false);
  std::vector<bool> neg(static_cast<std::size_t>(Dmax) + 1, false);
  for (std::int64_t P = 1; P <= Ym * Ym; ++P) {
    if (!product[P]) continue;
    for (const std::int64_t sP : {P, -P}) {
      const std::int64_t bmax = b_bound(num, den, sP);
      for (std::int64_t b = 0; b <= bmax; ++b) {
        const std::int64_t D = b * b - 4 * sP;
        if (D > 0) {
          pos[D] = true;
        } else if (D < 0) {
          neg[-D] = true;
        }
      }
    }
  }
  const auto ker = squarefree_kernels(Dmax);
  std::vector<std::int64_t> fields;
  for (std::int64_t D = 1; D <= Dmax; ++D) {
    if (pos[D] && ker[D] != 1) fields.push_back(arith::field_discriminant(ker[D]));
    if (neg[D]) fields.push_back(arith::field_discriminant(-static_cast<std::int64_t>(ker[D])));
  }
  std::sort(fields.begin(), fields.end(), [](std::int64_t x, std::int64_t y) {
    return std::llabs(x) != std::llabs(y) ? std::llabs(x) < std::llabs(y) : x < y;
  });
  fields.erase(std::unique(fields.begin(), fields.end()), fields.end());
  for (const auto d : fields) out.max_disc_seen = std::max<std::int64_t>(out.max_disc_seen, std::llabs(d));
  if (Rational(out.max_disc_seen) > out.certified_bound) {
    throw Error(ErrorKind::InvalidArgument, "field beyond the certified discriminant bound");
  }
  out.count = static_cast<long>(fields.size());
  out.fields = std::move(fields);
  return out;
}

NDeltaResult n_delta(const Rational& T) {
  const Rational bound = 4 * arith::pow(T, 4);
  return n_delta(T, arith::ceil(bound).get_si());
}

Integer n_disc(const Rational& T) {
  if (T < 3) return 0;
  return static_cast<long>(arith::fundamental_discriminants(arith::floor(T).get_si()).size());
}

ResidualFit residual_analysis(const CountReport& report) {
  const std::size_t k = report.grid.size();
  if (k < 4) throw Error(ErrorKind::DegenerateGrid, "residual fits need at least 4 grid points");
  const auto [lo, hi] = std::minmax_element(report.grid.begin(), report.grid.end());
  if (*hi < 4 * *lo || *lo <= 0) throw Error(ErrorKind::DegenerateGrid, "grid must span a factor of at least 4");
  std::vector<double> x, y;
  for (std::size_t i = 0; i < k; ++i) {
    const double r = std::abs(report.residuals[i]);
    if (r == 0) continue;
    x.push_back(std::log(report.grid[i].get_d()));
    y.push_back(std::log(r));
  }
  ResidualFit fit;
  fit.points_used = static_cast<long>(x.size());
  if (x.size() < 2) {
    fit.slope = -std::numeric_limits<double>::infinity();
    return fit;
  }
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxy = 0, sxx = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
  }
  fit.slope = sxx == 0 ? 0 : sxy / sxx;
  fit.constant = std::exp(my - fit.slope * mx);
  fit.flag = fit.slope > report.error_exponent + 0.15;
  return fit;
}

namespace {

void finish(CountReport& r, const Real& constant) {
  for (std::size_t i = 0; i < r.grid.size(); ++i) {
    r.prediction.push_back(main_term(constant, r.grid[i], r.main_exponent));
    r.residuals.push_back(Rational(r.counts[i]).get_d() - r.prediction.back().mid());
  }
  try {
    const ResidualFit fit = residual_analysis(r);
    r.fitted_error_exponent = fit.slope;
    r.flag = fit.flag;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::DegenerateGrid) throw;
    r.fitted_error_exponent = std::numeric_limits<double>::quiet_NaN();
  }
}

std::vector<Rational> sorted_grid(std::vector<Rational> grid) {
  if (grid.empty()) throw Error(ErrorKind::InvalidArgument, "empty grid");
  std::sort(grid.begin(), grid.end());
  return grid;
}

}  // namespace

CountReport rational_report(int n, const std::vector<Rational>& grid, Schedule sched, double tol) {
  CountReport r;
  r.description = "Z_H(P^" + std::to_string(n) + "(Q), X)";
  r.grid = sorted_grid(grid);
  r.schedule = sched;
  r.main_exponent = n + 1;
  r.error_exponent = n;
  r.metadata = {{"field", "Q"}, {"n", std::to_string(n)}, {"e", "1"}, {"system", "standard"},
                {"log_factor", n == 1 ? "yes" : "no"}};
  for (const auto& X : r.grid) r.counts.push_back(count_rational(n, X, sched));
  finish(r, schanuel_constant(schanuel_input(Field::rationals(), n, tol)));
  return r;
}

CountReport field_report(const Field& K, int n, const std::vector<Rational>& grid, Schedule sched, double tol) {
  CountReport r;
  r.description = "Z_H(P^" + std::to_string(n) + "(" + K.label() + "), X)";
  r.grid = sorted_grid(grid);
  r.schedule = sched;
  r.main_exponent = K.degree() * (n + 1);
  r.error_exponent = r.main_exponent - 1;
  r.metadata = {{"field", K.label()}, {"n", std::to_string(n)}, {"e", "1"}, {"system", "standard"},
                {"log_factor", K.degree() == 1 && n == 1 ? "yes" : "no"}};
  for (const auto& X : r.grid) r.counts.push_back(count_imaginary_quadratic(K, n, X, sched));
  finish(r, schanuel_constant(schanuel_input(K, n, tol)));
  return r;
}

CountReport primitive_report(const Field& K, int n, const std::vector<Rational>& grid, Schedule sched, double tol) {
  CountReport r;
  r.description = "Z_H(P^" + std::to_string(n) + "(" + K.label() + "/Q), X)";
  r.grid = sorted_grid(grid);
  r.schedule = sched;
  r.main_exponent = 2 * (n + 1);
  r.error_exponent = r.main_exponent - 1;
  r.metadata = {{"field", K.label()}, {"n", std::to_string(n)}, {"e", "2"}, {"system", "standard"},
                {"log_factor", "no"}};
  for (const auto& X : r.grid) r.counts.push_back(count_primitive(K, n, X, sched));
  finish(r, schanuel_constant(schanuel_input(K, n, tol)));
  return r;
}

CountReport quadratic_p1_report(const std::vector<Rational>& grid, Schedule sched, double tol) {
  CountReport r;
  r.description = "Z_H(P^1(Q;2), X)";
  r.grid = sorted_grid(grid);
  r.schedule = sched;
  r.main_exponent = 6;
  r.error_exponent = 5;
  r.metadata = {{"field", "Q"}, {"n", "1"}, {"e", "2"}, {"system", "standard"}, {"log_factor", "no"}};
  for (const auto& X : r.grid) r.counts.push_back(count_quadratic_points_p1(X, sched).points);
  finish(r, schmidt_quadratic_constant(1, tol));
  return r;
}

}  // namespace schanuel

#include "schanuel/als.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <set>
#include <sstream>
#include <thread>

namespace schanuel {

namespace {

constexpr double kTwoPi = 2 * std::numbers::pi;

Rational factorial(long k) {
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
  return Rational(f);
}

Real real_from_double(double x) {
  Rational q;
  mpq_set_d(q.get_mpq_t(), x);
  return Real(q);
}

}  // namespace

// ---------------------------------------------------------------- monomials

Real PiMonomial::to_real(mpfr_prec_t precision) const {
  return Real(coeff, precision) * pow(Real::pi(precision), static_cast<long>(pi_power));
}

std::string PiMonomial::to_string() const {
  std::string s = arith::to_string(coeff);
  if (pi_power == 0) return s;
  return s + "*pi^" + std::to_string(pi_power);
}

Real SqrtMonomial::to_real(mpfr_prec_t precision) const {
  return Real(coeff, precision) * pow(sqrt(Real(radicand, precision)), static_cast<long>(power));
}

SqrtMonomial operator*(const SqrtMonomial& x, const SqrtMonomial& y) {
  if (x.power != 0 && y.power != 0 && x.radicand != y.radicand) {
    throw Error(ErrorKind::InvalidArgument, "sqrt monomials with different radicands");
  }
  const Integer rad = x.power != 0 ? x.radicand : y.radicand;
  SqrtMonomial r{x.coeff * y.coeff, rad, x.power + y.power};
  if (r.power == 0) r.radicand = 1;
  return r;
}

std::string SqrtMonomial::to_string() const {
  std::string s = arith::to_string(coeff);
  if (power == 0 || radicand == 1) return s;
  return s + "*sqrt(" + radicand.get_str() + ")^" + std::to_string(power);
}

PiMonomial unit_ball_volume(int k) {
  if (k < 1) throw Error(ErrorKind::InvalidArgument, "ball dimension must be positive");
  if (k % 2 == 0) return {1 / factorial(k / 2), k / 2};
  const int m = (k - 1) / 2;
  return {arith::pow(Rational(2), k) * factorial(m) / factorial(k), m};
}

// ---------------------------------------------------------------- norms

std::string to_string(NormKind kind) {
  switch (kind) {
    case NormKind::Max: return "max";
    case NormKind::L2: return "l2";
    case NormKind::Lp: return "lp";
    case NormKind::Custom: return "custom";
  }
  return "?";
}

namespace {

// |z_j|_v for coordinate j of a point of R^{d_v (n+1)}.
Real modulus(const std::vector<Real>& z, int d_v, int j) {
  if (d_v == 1) return abs(z[j]);
  return sqrt(z[2 * j] * z[2 * j] + z[2 * j + 1] * z[2 * j + 1]);
}

double modulus(const std::vector<double>& z, int d_v, int j) {
  if (d_v == 1) return std::abs(z[j]);
  return std::hypot(z[2 * j], z[2 * j + 1]);
}

// x^p for an enclosure of a nonnegative number and p > 0.
Real pow_nonnegative(const Real& x, const Real& p) {
  if (x.certainly_positive()) return pow(x, p);
  if (x.upper() <= 0) return Real(0L, x.precision());
  return Real::hull(Real(0L, x.precision()), pow(x.upper_point(), p));
}

}  // namespace

double InfiniteNorm::max_modulus(const std::vector<double>& z, int d_v) {
  double m = 0;
  const int k = static_cast<int>(z.size()) / d_v;
  for (int j = 0; j < k; ++j) m = std::max(m, modulus(z, d_v, j));
  return m;
}

Real InfiniteNorm::evaluate(const std::vector<Real>& z) const {
  if (static_cast<int>(z.size()) != ambient_dimension()) {
    throw Error(ErrorKind::DimensionMismatch, "norm evaluated on a vector of the wrong length");
  }
  const int k = n + 1;
  switch (kind) {
    case NormKind::Max: {
      Real m = modulus(z, d_v, 0);
      for (int j = 1; j < k; ++j) m = max(m, modulus(z, d_v, j));
      return m;
    }
    case NormKind::L2: {
      Real s(0L, z.front().precision());
      for (const auto& x : z) s += x * x;
      return sqrt(s);
    }
    case NormKind::Lp: {
      const Real pr(p, z.front().precision());
      Real s(0L, z.front().precision());
      for (int j = 0; j < k; ++j) s += pow_nonnegative(modulus(z, d_v, j), pr);
      return pow_nonnegative(s, Real(1L, z.front().precision()) / pr);
    }
    case NormKind::Custom:
      return evaluator(z);
  }
  return Real(0L);
}

double InfiniteNorm::evaluate(const std::vector<double>& z) const {
  const int k = n + 1;
  switch (kind) {
    case NormKind::Max: return max_modulus(z, d_v);
    case NormKind::L2: {
      double s = 0;
      for (const double x : z) s += x * x;
      return std::sqrt(s);
    }
    case NormKind::Lp: {
      const double pd = p.get_d();
      double s = 0;
      for (int j = 0; j < k; ++j) s += std::pow(modulus(z, d_v, j), pd);
      return std::pow(s, 1 / pd);
    }
    case NormKind::Custom: {
      if (sampler) return sampler(z);
      std::vector<Real> zr;
      zr.reserve(z.size());
      for (const double x : z) zr.push_back(real_from_double(x).with_precision(64));
      return evaluator(zr).mid();
    }
  }
  return 0;
}

InfiniteNorm max_norm(int d_v, int n) {
  InfiniteNorm N;
  N.kind = NormKind::Max;
  N.d_v = d_v;
  N.n = n;
  if (d_v == 1) {
    N.M_v = 2L * n + 2;
    N.L_v = Real(2);
  } else {
    N.M_v = n + 1;
    N.L_v = 2 * Real::pi() * sqrt(Real(2L * n + 1));
  }
  return N;
}

InfiniteNorm l2_norm(int d_v, int n, const Real& C) {
  InfiniteNorm N;
  N.kind = NormKind::L2;
  N.d_v = d_v;
  N.n = n;
  N.M_v = 1;
  // 8 d_v^2 (n+1)^{5/2} C
  N.L_v = Real(8L * d_v * d_v) * pow(sqrt(Real(n + 1L)), 5L) * C;
  return N;
}

InfiniteNorm lp_norm(int d_v, int n, const Rational& p, const Rational& c_v, long M_v, const Real& L_v) {
  if (p < 1) throw Error(ErrorKind::InvalidArgument, "lp norms need p >= 1");
  if (c_v <= 0 || c_v > 1) throw Error(ErrorKind::InvalidArgument, "c_v must lie in (0, 1]");
  InfiniteNorm N;
  N.kind = NormKind::Lp;
  N.d_v = d_v;
  N.n = n;
  N.p = p;
  N.c_v = c_v;
  N.M_v = M_v;
  N.L_v = L_v;
  return N;
}

InfiniteNorm custom_norm(int d_v, int n, std::function<Real(const std::vector<Real>&)> evaluator,
                         const Rational& c_v, long M_v, const Real& L_v) {
  if (c_v <= 0 || c_v > 1) throw Error(ErrorKind::InvalidArgument, "c_v must lie in (0, 1]");
  InfiniteNorm N;
  N.kind = NormKind::Custom;
  N.d_v = d_v;
  N.n = n;
  N.c_v = c_v;
  N.M_v = M_v;
  N.L_v = L_v;
  N.evaluator = std::move(evaluator);
  return N;
}

Volume norm_volume(const InfiniteNorm& norm, int workers) {
  const int D = norm.ambient_dimension();
  const int k = norm.n + 1;
  if (norm.kind == NormKind::Max) {
    const PiMonomial v = norm.d_v == 1 ? PiMonomial{arith::pow(Rational(2), k), 0} : PiMonomial{1, k};
    return {v, v.to_real()};
  }
  if (norm.kind == NormKind::L2) {
    const PiMonomial v = unit_ball_volume(D);
    return {v, v.to_real()};
  }
  // Monte Carlo over the box [-1/c, 1/c]^D, which contains the unit ball of N.
  const double half = 1.0 / norm.c_v.get_d();
  const long chunk = 10000;
  const long chunks = (norm.volume_samples + chunk - 1) / chunk;
  std::vector<long> hits(static_cast<std::size_t>(chunks), 0);
  auto work = [&](int worker) {
    for (long c = worker; c < chunks; c += workers) {
      std::mt19937_64 rng(norm.seed * 1000003ULL + static_cast<std::uint64_t>(c));
      std::uniform_real_distribution<double> U(-half, half);
      std::vector<double> z(static_cast<std::size_t>(D));
      const long count = std::min(chunk, norm.volume_samples - c * chunk);
      long h = 0;
      for (long i = 0; i < count; ++i) {
        for (auto& x : z) x = U(rng);
        if (norm.evaluate(z) < 1) ++h;
      }
      hits[static_cast<std::size_t>(c)] = h;
    }
  };
  workers = std::max(1, workers);
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(work, w);
  work(0);
  for (auto& t : pool) t.join();
  long total = 0;
  for (const long h : hits) total += h;
  const double S = static_cast<double>(norm.volume_samples);
  const double box = std::pow(2 * half, D);
  const double phat = total / S;
  const double se = std::sqrt(std::max(phat * (1 - phat), 1.0 / S) / S);
  const double mid = box * phat;
  const double rad = box * (4 * se + 1.0 / S);
  const Real enc = Real::hull(real_from_double(std::max(0.0, mid - rad)), real_from_double(mid + rad));
  return {std::nullopt, enc};
}

// ---------------------------------------------------------------- systems

AdelicLipschitzSystem::AdelicLipschitzSystem(const Field& field, int n, std::vector<InfiniteNorm> infinite,
                                             std::vector<Ideal> twist, std::string name)
    : field_(field), n_(n), name_(std::move(name)), infinite_(std::move(infinite)), twist_(std::move(twist)) {
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "dimension n must be positive");
  const auto places = infinite_places(field);
  if (infinite_.size() != places.size()) {
    throw Error(ErrorKind::DimensionMismatch, "need one norm per infinite place");
  }
  for (std::size_t i = 0; i < places.size(); ++i) {
    if (infinite_[i].d_v != places[i].d_v || infinite_[i].n != n) {
      throw Error(ErrorKind::DimensionMismatch, "norm does not match its place or dimension");
    }
  }
  if (!twist_.empty()) {
    if (static_cast<int>(twist_.size()) != n + 1) {
      throw Error(ErrorKind::DimensionMismatch, "twist needs one ideal per coordinate");
    }
    for (const auto& I : twist_) {
      if (I.field() != field) throw Error(ErrorKind::InvalidArgument, "twist ideal from another field");
    }
  }
  c_fin_power_ = 1;
  for (const auto& v : exceptional_places()) c_fin_power_ *= 1 / finite_c(v).power_dv(v.d_v);
  C_fin_ = pow(Real(c_fin_power_), Real(arith::ratio(1, field.degree())));
  if (c_fin_power_ == 1) C_fin_ = Real(1);
  C_inf_ = Real(1);
  for (const auto& N : infinite_) C_inf_ = max(C_inf_, Real(1 / N.c_v));
  C_ = C_fin_ * C_inf_;
  for (auto& N : infinite_) {
    if (N.kind == NormKind::L2) N = l2_norm(N.d_v, n, C_);
  }
  M_ = 0;
  L_ = infinite_.front().L_v;
  for (const auto& N : infinite_) {
    M_ = std::max(M_, N.M_v);
    L_ = max(L_, N.L_v);
  }
}

bool AdelicLipschitzSystem::is_standard() const { return twist_.empty() && all_max(); }

bool AdelicLipschitzSystem::all_max() const {
  return std::all_of(infinite_.begin(), infinite_.end(), [](const auto& N) { return N.kind == NormKind::Max; });
}

bool AdelicLipschitzSystem::all_l2() const {
  return std::all_of(infinite_.begin(), infinite_.end(), [](const auto& N) { return N.kind == NormKind::L2; });
}

Real AdelicLipschitzSystem::A(int me) const {
  return pow(Real(M_), static_cast<long>(me)) * pow(C_ * (L_ + Real(1)), static_cast<long>(me * (n_ + 1) - 1));
}

Ideal AdelicLipschitzSystem::coordinate_ideal(int j) const {
  if (twist_.empty()) return Ideal::unit(field_);
  return twist_.at(static_cast<std::size_t>(j));
}

std::vector<FinitePlace> AdelicLipschitzSystem::exceptional_places() const {
  std::set<std::int64_t> primes;
  for (const auto& I : twist_) {
    const Rational N = I.norm();
    for (const Integer& m : {Integer(N.get_num()), Integer(N.get_den())}) {
      for (const auto& [p, e] : arith::factorize(m.get_si())) primes.insert(p);
    }
  }
  std::vector<FinitePlace> out;
  for (const auto p : primes) {
    for (const auto& v : places_above(field_, p)) {
      const bool twisted = std::any_of(twist_.begin(), twist_.end(), [&v](const Ideal& I) { return ord(I, v) != 0; });
      if (twisted) out.push_back(v);
    }
  }
  return out;
}

FiniteAbsValue AdelicLipschitzSystem::finite_c(const FinitePlace& v) const {
  // |A_j|_v^{-1} = Np^{ord/d_v}; c_v is the smallest of these, capped at 1.
  int lowest = 0;
  for (const auto& I : twist_) lowest = std::min(lowest, ord(I, v));
  FiniteAbsValue c;
  c.base = v.Np;
  c.exponent = arith::ratio(lowest, v.d_v);
  return c;
}

AdelicLipschitzSystem standard_system(const Field& field, int n) {
  std::vector<InfiniteNorm> norms;
  for (const auto& v : infinite_places(field)) norms.push_back(max_norm(v.d_v, n));
  return AdelicLipschitzSystem(field, n, std::move(norms), {}, "standard");
}

AdelicLipschitzSystem l2_system(const Field& field, int n) {
  std::vector<InfiniteNorm> norms;
  for (const auto& v : infinite_places(field)) norms.push_back(l2_norm(v.d_v, n));
  return AdelicLipschitzSystem(field, n, std::move(norms), {}, "l2");
}

namespace {

using nlohmann::json;

Rational json_rational(const json& j) {
  if (j.is_number_integer()) return Rational(Integer(static_cast<long>(j.get<std::int64_t>())));
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.find('.') != std::string::npos || s.find('e') != std::string::npos) return arith::parse_decimal(s);
    return arith::parse_rational(s);
  }
  if (j.is_number()) {
    Rational q;
    mpq_set_d(q.get_mpq_t(), j.get<double>());
    return q;
  }
  throw Error(ErrorKind::ParseError, "expected a number, got " + j.dump());
}

Field json_field(const json& j) {
  if (j.is_string() && j.get<std::string>() == "Q") return Field::rationals();
  if (j.is_number_integer()) return make_quadratic_field(j.get<std::int64_t>());
  if (j.is_object() && j.contains("d")) {
    const auto d = j.at("d").get<std::int64_t>();
    return d == 1 ? Field::rationals() : make_quadratic_field(d);
  }
  throw Error(ErrorKind::ParseError, "field must be \"Q\", an integer d or {\"d\": d}");
}

}  // namespace

AdelicLipschitzSystem system_from_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, std::string("system file: ") + e.what());
  }
  try {
    const Field field = json_field(doc.at("field"));
    const int n = doc.at("n").get<int>();
    const std::string name = doc.value("name", std::string("file"));
    if (doc.contains("finite") && doc.at("finite").get<std::string>() != "diagonal") {
      throw Error(ErrorKind::UnsupportedFinitePart, "only diagonal ideal twists are supported at finite places");
    }
    const auto places = infinite_places(field);
    json inf = doc.value("infinite", json::array({json{{"kind", "max"}}}));
    if (inf.size() == 1 && places.size() > 1) inf.push_back(inf[0]);
    if (inf.size() != places.size()) throw Error(ErrorKind::DimensionMismatch, "need one norm per infinite place");
    std::vector<InfiniteNorm> norms;
    for (std::size_t i = 0; i < places.size(); ++i) {
      const auto& spec = inf[i];
      const std::string kind = spec.at("kind").get<std::string>();
      const int d_v = places[i].d_v;
      if (kind == "max") {
        norms.push_back(max_norm(d_v, n));
      } else if (kind == "l2") {
        norms.push_back(l2_norm(d_v, n));
      } else if (kind == "lp") {
        InfiniteNorm N = lp_norm(d_v, n, json_rational(spec.at("p")), json_rational(spec.at("c_v")),
                                 spec.at("M_v").get<long>(), Real(json_rational(spec.at("L_v"))));
        N.volume_samples = spec.value("samples", N.volume_samples);
        N.seed = spec.value("seed", N.seed);
        norms.push_back(std::move(N));
      } else {
        throw Error(ErrorKind::ParseError, "unknown norm kind '" + kind + "'");
      }
    }
    std::vector<Ideal> twist;
    if (doc.contains("twist")) {
      for (const auto& coord : doc.at("twist")) {
        std::vector<Element> gens;
        for (const auto& g : coord) {
          const Rational a = json_rational(g.at(0));
          const Rational b = g.size() > 1 ? json_rational(g.at(1)) : Rational(0);
          gens.emplace_back(field, a, b);
        }
        twist.push_back(Ideal::generated_by(field, gens));
      }
    }
    return AdelicLipschitzSystem(field, n, std::move(norms), std::move(twist), name);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("system file: ") + e.what());
  }
}

AdelicLipschitzSystem load_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open system file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return system_from_json(buf.str());
}

// ---------------------------------------------------------------- lattices and volumes

Lattice lattice(const AdelicLipschitzSystem& system, const Ideal& D) {
  const Field& K = system.field();
  const int d = K.degree();
  const int k = system.n() + 1;
  Lattice L;
  L.basis = Eigen::MatrixXd::Zero(d * k, d * k);
  Rational coeff = 1;
  for (int j = 0; j < k; ++j) {
    const Ideal I = system.coordinate_ideal(j) * D;
    const auto basis = I.basis();
    for (int b = 0; b < d; ++b) {
      const Element& e = basis[static_cast<std::size_t>(b)];
      const auto emb = e.embeddings(64);
      const int col = j * d + b;
      if (K.is_imaginary()) {
        L.basis(j * d, col) = emb[0].re.mid();
        L.basis(j * d + 1, col) = emb[0].im.mid();
      } else {
        for (int i = 0; i < d; ++i) L.basis(j * d + i, col) = emb[static_cast<std::size_t>(i)].re.mid();
      }
      std::vector<Element> gen(static_cast<std::size_t>(k), Element(K, 0));
      gen[static_cast<std::size_t>(j)] = e;
      L.generators.push_back(std::move(gen));
    }
    // det sigma(I) = 2^{-s} sqrt|disc| N(I)
    coeff *= I.norm() / arith::pow(Rational(2), K.s);
  }
  L.det = SqrtMonomial{coeff, Integer(static_cast<long>(std::abs(K.disc))), K.is_rational() ? 0 : k};
  if (L.det.power == 0) L.det.radicand = 1;
  return L;
}

SqrtMonomial class_invariant(const AdelicLipschitzSystem& system, const Ideal& D) {
  const SqrtMonomial det = lattice(system, D).det;
  return det * SqrtMonomial{1 / arith::pow(D.norm(), system.n() + 1), 1, 0};
}

Volumes volumes(const AdelicLipschitzSystem& system, int workers) {
  const Field& K = system.field();
  const int k = system.n() + 1;
  const auto reps = class_representatives(K);
  if (reps.empty()) throw Error(ErrorKind::MissingClassData, "no class representatives for " + K.label());
  // V^fin = 2^{-s(n+1)} |disc|^{(n+1)/2} h^{-1} sum_D Delta(D)^{-1}; the average
  // over the representative list equals h^{-1} sum over classes.
  std::optional<SqrtMonomial> sum;
  for (const auto& D : reps) {
    const SqrtMonomial inv = class_invariant(system, D).inverse();
    if (!sum) {
      sum = inv;
    } else {
      if (sum->power != inv.power || sum->radicand != inv.radicand) {
        throw Error(ErrorKind::InvalidArgument, "class invariants of different shapes");
      }
      sum->coeff += inv.coeff;
    }
  }
  const SqrtMonomial front{arith::pow(Rational(2), -K.s * k) / Rational(static_cast<long>(reps.size())),
                           Integer(static_cast<long>(std::abs(K.disc))), K.is_rational() ? 0 : k};
  const SqrtMonomial vfin = front * *sum;
  if (vfin.power != 0) throw Error(ErrorKind::InvalidArgument, "V^fin is not rational");
  Volumes out;
  out.V_fin = vfin.coeff;
  PiMonomial exact_inf{1, 0};
  bool exact = true;
  Real inf(1);
  for (const auto& N : system.infinite()) {
    const Volume v = norm_volume(N, workers);
    inf *= v.enclosure;
    if (v.exact) {
      exact_inf = exact_inf * *v.exact;
    } else {
      exact = false;
    }
  }
  out.V_inf = {exact ? std::optional<PiMonomial>(exact_inf) : std::nullopt, exact ? exact_inf.to_real() : inf};
  if (exact) {
    const PiMonomial V = exact_inf * PiMonomial{out.V_fin, 0};
    out.V = {V, V.to_real()};
  } else {
    out.V = {std::nullopt, out.V_inf.enclosure * Real(out.V_fin)};
  }
  return out;
}

// ---------------------------------------------------------------- Lipschitz covers

namespace {

struct Parameterization {
  long maps = 0;
  int domain = 0;
  // Image of u in [0,1]^domain under map m.
  std::function<std::vector<double>(long, const std::vector<double>&)> forward;
  // A map and parameter whose image should be the given boundary point.
  std::function<std::pair<long, std::vector<double>>(const std::vector<double>&)> preimage;
};

double frac(double x) { return x - std::floor(x); }

Parameterization cube_faces(int D, const std::function<double(const std::vector<double>&)>& radial) {
  Parameterization P;
  P.maps = 2L * D;
  P.domain = D - 1;
  P.forward = [D, radial](long m, const std::vector<double>& u) {
    const int axis = static_cast<int>(m / 2);
    std::vector<double> y(static_cast<std::size_t>(D));
    int k = 0;
    for (int i = 0; i < D; ++i) y[i] = i == axis ? (m % 2 ? -1.0 : 1.0) : 2 * u[k++] - 1;
    if (radial) {
      const double r = radial(y);
      for (auto& x : y) x /= r;
    }
    return y;
  };
  P.preimage = [D](const std::vector<double>& z) {
    int axis = 0;
    for (int i = 1; i < D; ++i) {
      if (std::abs(z[i]) > std::abs(z[axis])) axis = i;
    }
    const double scale = std::abs(z[axis]);
    std::vector<double> u;
    for (int i = 0; i < D; ++i) {
      if (i != axis) u.push_back(std::clamp((z[i] / scale + 1) / 2, 0.0, 1.0));
    }
    return std::make_pair(2L * axis + (z[axis] < 0 ? 1 : 0), u);
  };
  return P;
}

Parameterization polydisc(int k) {
  Parameterization P;
  P.maps = k;
  P.domain = 2 * k - 1;
  P.forward = [k](long m, const std::vector<double>& u) {
    std::vector<double> z(static_cast<std::size_t>(2 * k));
    z[2 * m] = std::cos(kTwoPi * u[0]);
    z[2 * m + 1] = std::sin(kTwoPi * u[0]);
    int idx = 1;
    for (int j = 0; j < k; ++j) {
      if (j == m) continue;
      const double r = u[idx];
      const double t = u[idx + 1];
      idx += 2;
      z[2 * j] = r * std::cos(kTwoPi * t);
      z[2 * j + 1] = r * std::sin(kTwoPi * t);
    }
    return z;
  };
  P.preimage = [k](const std::vector<double>& z) {
    long m = 0;
    for (int j = 1; j < k; ++j) {
      if (std::hypot(z[2 * j], z[2 * j + 1]) > std::hypot(z[2 * m], z[2 * m + 1])) m = j;
    }
    std::vector<double> u{frac(std::atan2(z[2 * m + 1], z[2 * m]) / kTwoPi)};
    for (int j = 0; j < k; ++j) {
      if (j == m) continue;
      u.push_back(std::clamp(std::hypot(z[2 * j], z[2 * j + 1]), 0.0, 1.0));
      u.push_back(frac(std::atan2(z[2 * j + 1], z[2 * j]) / kTwoPi));
    }
    return std::make_pair(m, u);
  };
  return P;
}

// Hyperspherical coordinates: angles pi*u_1..pi*u_{D-2}, 2pi*u_{D-1}.
Parameterization sphere(int D) {
  Parameterization P;
  P.maps = 1;
  P.domain = D - 1;
  P.forward = [D](long, const std::vector<double>& u) {
    std::vector<double> x(static_cast<std::size_t>(D));
    double s = 1;
    for (int i = 0; i < D - 1; ++i) {
      const double phi = (i == D - 2 ? kTwoPi : std::numbers::pi) * u[i];
      x[i] = s * std::cos(phi);
      s *= std::sin(phi);
    }
    x[D - 1] = s;
    return x;
  };
  P.preimage = [D](const std::vector<double>& x) {
    std::vector<double> u(static_cast<std::size_t>(D - 1));
    for (int i = 0; i < D - 2; ++i) {
      double tail = 0;
      for (int j = i; j < D; ++j) tail += x[j] * x[j];
      const double c = tail > 0 ? std::clamp(x[i] / std::sqrt(tail), -1.0, 1.0) : 1.0;
      u[i] = std::acos(c) / std::numbers::pi;
    }
    u[D - 2] = frac(std::atan2(x[D - 1], x[D - 2]) / kTwoPi);
    return std::make_pair(0L, u);
  };
  return P;
}

Parameterization parameterization(const InfiniteNorm& N) {
  const int D = N.ambient_dimension();
  if (N.kind == NormKind::Max) return N.d_v == 1 ? cube_faces(D, nullptr) : polydisc(N.n + 1);
  if (N.kind == NormKind::L2) return sphere(D);
  return cube_faces(D, [&N](const std::vector<double>& y) { return N.evaluate(y); });
}

double distance(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(s);
}

std::string point_string(const std::vector<double>& z) {
  std::ostringstream os;
  os.precision(17);
  os << "(";
  for (std::size_t i = 0; i < z.size(); ++i) os << (i ? ", " : "") << z[i];
  os << ")";
  return os.str();
}

}  // namespace

CoverReport lipschitz_cover_check(const InfiniteNorm& norm, long samples, std::uint64_t seed) {
  CoverReport rep;
  rep.samples = samples;
  rep.declared_L = norm.L_v.upper();
  const Parameterization P = parameterization(norm);
  rep.maps = P.maps;
  if (samples <= 0) return rep;
  if (P.maps > norm.M_v) {
    throw Error(ErrorKind::CoverageFailure, "boundary needs " + std::to_string(P.maps) +
                                                " maps but M_v = " + std::to_string(norm.M_v));
  }
  const int D = norm.ambient_dimension();
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> G;
  std::uniform_real_distribution<double> U(0, 1);
  std::vector<double> z(static_cast<std::size_t>(D));
  const double tol = 1e-9;
  for (long s = 0; s < samples; ++s) {
    for (auto& x : z) x = G(rng);
    const double r = norm.evaluate(z);
    for (auto& x : z) x /= r;
    const auto [m, u] = P.preimage(z);
    const double dist = distance(P.forward(m, u), z);
    rep.max_distance = std::max(rep.max_distance, dist);
    if (dist > tol) {
      rep.passed = false;
      throw Error(ErrorKind::CoverageFailure, "boundary point " + point_string(z) + " is " +
                                                  std::to_string(dist) + " away from every declared map");
    }
    // A far pair and a near pair in the domain of a random map.
    const long map = static_cast<long>(U(rng) * static_cast<double>(P.maps)) % P.maps;
    std::vector<double> a(static_cast<std::size_t>(P.domain));
    std::vector<double> b(a.size());
    std::vector<double> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
      a[i] = U(rng);
      b[i] = U(rng);
      c[i] = std::clamp(a[i] + 1e-4 * (U(rng) - 0.5), 0.0, 1.0);
    }
    const auto fa = P.forward(map, a);
    for (const auto* other : {&b, &c}) {
      const double du = distance(a, *other);
      if (du < 1e-12) continue;
      const double ratio = distance(fa, P.forward(map, *other)) / du;
      rep.max_ratio = std::max(rep.max_ratio, ratio);
      if (ratio > rep.declared_L * (1 + 1e-9)) {
        rep.passed = false;
        throw Error(ErrorKind::CoverageFailure, "Lipschitz ratio " + std::to_string(ratio) + " exceeds L_v = " +
                                                    std::to_string(rep.declared_L) + " near " +
                                                    point_string(fa));
      }
    }
  }
  return rep;
}

double sampled_c_ratio(const InfiniteNorm& norm, long samples, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> G;
  std::vector<double> z(static_cast<std::size_t>(norm.ambient_dimension()));
  double lowest = std::numeric_limits<double>::infinity();
  for (long s = 0; s < samples; ++s) {
    for (auto& x : z) x = G(rng);
    lowest = std::min(lowest, norm.evaluate(z) / InfiniteNorm::max_modulus(z, norm.d_v));
  }
  return lowest;
}

// ---------------------------------------------------------------- families

UniformSystemFamily::UniformSystemFamily(std::string name, Builder builder, int n, FamilyConstants constants)
    : name_(std::move(name)), builder_(std::move(builder)), n_(n), constants_(std::move(constants)) {}

bool UniformSystemFamily::dominates(const Field& field) const {
  const AdelicLipschitzSystem S = member(field);
  return !constants_.C.certainly_less(S.C()) && S.M() <= constants_.M && !constants_.L.certainly_less(S.L());
}

Real UniformSystemFamily::A(int me) const {
  const auto& c = constants_;
  return pow(Real(c.M), static_cast<long>(me)) * pow(c.C * (c.L + Real(1)), static_cast<long>(me * (n_ + 1) - 1));
}

UniformSystemFamily standard_family(int n) {
  return UniformSystemFamily("standard", standard_system, n,
                             FamilyConstants{Real(1), 2L * n + 2, 2 * Real::pi() * sqrt(Real(2L * n + 1))});
}

}  // namespace schanuel

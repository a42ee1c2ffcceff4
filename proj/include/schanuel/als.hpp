#pragma once

// Adelic-Lipschitz systems: a norm at every infinite place, max norms twisted
// by per-coordinate ideals at the finite places, the constants c_v, C, M, L,
// the lattices Lambda(D) and the volumes V^fin, V^inf, V.

#include <Eigen/Dense>

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "schanuel/nfq.hpp"
#include "schanuel/real.hpp"

namespace schanuel {

/// coeff * pi^pi_power.
struct PiMonomial {
  Rational coeff = 1;
  int pi_power = 0;

  Real to_real(mpfr_prec_t precision = Real::kDefaultPrecision) const;
  friend PiMonomial operator*(const PiMonomial& x, const PiMonomial& y) {
    return {x.coeff * y.coeff, x.pi_power + y.pi_power};
  }
  friend bool operator==(const PiMonomial& x, const PiMonomial& y) {
    return x.coeff == y.coeff && x.pi_power == y.pi_power;
  }
  std::string to_string() const;
};

/// coeff * sqrt(radicand)^power.
struct SqrtMonomial {
  Rational coeff = 1;
  Integer radicand = 1;
  int power = 0;

  Real to_real(mpfr_prec_t precision = Real::kDefaultPrecision) const;
  SqrtMonomial inverse() const { return {1 / coeff, radicand, -power}; }
  friend SqrtMonomial operator*(const SqrtMonomial& x, const SqrtMonomial& y);
  friend bool operator==(const SqrtMonomial& x, const SqrtMonomial& y) {
    return x.coeff == y.coeff && x.radicand == y.radicand && x.power == y.power;
  }
  std::string to_string() const;
};

/// Volume with an exact form when one is known.
struct Volume {
  std::optional<PiMonomial> exact;
  Real enclosure;
};

/// Volume of the euclidean unit ball in R^k.
PiMonomial unit_ball_volume(int k);

enum class NormKind { Max, L2, Lp, Custom };
std::string to_string(NormKind kind);

/// N_v on K_v^{n+1}, seen on R^{d_v (n+1)} (complex coordinates as re, im pairs).
struct InfiniteNorm {
  NormKind kind = NormKind::Max;
  int d_v = 1;
  int n = 1;
  /// Exponent for Lp.
  Rational p = 2;
  /// N_v(z) >= c_v max_j |z_j|_v.
  Rational c_v = 1;
  long M_v = 1;
  Real L_v = Real(2);
  std::function<Real(const std::vector<Real>&)> evaluator;
  std::function<double(const std::vector<double>&)> sampler;
  /// Monte Carlo settings for custom volumes.
  std::uint64_t seed = 1;
  long volume_samples = 200000;

  int ambient_dimension() const { return d_v * (n + 1); }
  Real evaluate(const std::vector<Real>& z) const;
  double evaluate(const std::vector<double>& z) const;
  /// max_j |z_j|_v.
  static double max_modulus(const std::vector<double>& z, int d_v);
};

InfiniteNorm max_norm(int d_v, int n);
/// l2 norm; L_v depends on the system constant C, passed in.
InfiniteNorm l2_norm(int d_v, int n, const Real& C = Real(1));
InfiniteNorm lp_norm(int d_v, int n, const Rational& p, const Rational& c_v, long M_v, const Real& L_v);
InfiniteNorm custom_norm(int d_v, int n, std::function<Real(const std::vector<Real>&)> evaluator,
                         const Rational& c_v, long M_v, const Real& L_v);

/// Closed form for max and l2, Monte Carlo (4 standard errors folded in) otherwise.
Volume norm_volume(const InfiniteNorm& norm, int workers = 1);

class AdelicLipschitzSystem {
 public:
  /// twist: empty for the standard finite part, else one ideal per coordinate.
  AdelicLipschitzSystem(const Field& field, int n, std::vector<InfiniteNorm> infinite,
                        std::vector<Ideal> twist = {}, std::string name = "custom");

  const Field& field() const { return field_; }
  int n() const { return n_; }
  const std::string& name() const { return name_; }
  const std::vector<InfiniteNorm>& infinite() const { return infinite_; }
  const std::vector<Ideal>& twist() const { return twist_; }
  bool is_standard() const;
  bool all_max() const;
  bool all_l2() const;

  /// c_v^{-d_v} at each twisted finite place, multiplied: (C^fin)^d exactly.
  const Rational& c_fin_power() const { return c_fin_power_; }
  const Real& C_fin() const { return C_fin_; }
  const Real& C_inf() const { return C_inf_; }
  const Real& C() const { return C_; }
  long M() const { return M_; }
  const Real& L() const { return L_; }
  /// M^{me} (C (L + 1))^{me(n+1) - 1}.
  Real A(int me) const;

  /// Finite places whose N_v differs from the max norm.
  std::vector<FinitePlace> exceptional_places() const;
  /// c_v at a finite place, exactly: min(1, min_j |A_j|_v^{-1}) = Np^exponent.
  FiniteAbsValue finite_c(const FinitePlace& v) const;
  /// Ideal of coordinate j (the unit ideal without a twist).
  Ideal coordinate_ideal(int j) const;

 private:
  Field field_;
  int n_;
  std::string name_;
  std::vector<InfiniteNorm> infinite_;
  std::vector<Ideal> twist_;
  Rational c_fin_power_ = 1;
  Real C_fin_;
  Real C_inf_;
  Real C_;
  long M_ = 0;
  Real L_;
};

AdelicLipschitzSystem standard_system(const Field& field, int n);
AdelicLipschitzSystem l2_system(const Field& field, int n);
/// Parse the JSON system description.
AdelicLipschitzSystem system_from_json(const std::string& text);
AdelicLipschitzSystem load_system_file(const std::string& path);

struct Lattice {
  /// Columns are basis vectors of Lambda(D) in R^{d(n+1)}.
  Eigen::MatrixXd basis;
  /// Basis as tuples of field elements (coordinate j of generator i).
  std::vector<std::vector<Element>> generators;
  SqrtMonomial det;
};

Lattice lattice(const AdelicLipschitzSystem& system, const Ideal& D);
SqrtMonomial class_invariant(const AdelicLipschitzSystem& system, const Ideal& D);

struct Volumes {
  Rational V_fin;
  Volume V_inf;
  Volume V;
};

Volumes volumes(const AdelicLipschitzSystem& system, int workers = 1);

struct CoverReport {
  long samples = 0;
  long maps = 0;
  double max_distance = 0;
  double max_ratio = 0;
  double declared_L = 0;
  bool passed = true;
};

/// Samples boundary points of {N_v < 1} and checks they lie on the declared
/// parameterizations, whose empirical Lipschitz ratios must stay below L_v.
CoverReport lipschitz_cover_check(const InfiniteNorm& norm, long samples, std::uint64_t seed = 7);

/// Samples N_v(z) >= c_v max|z_j|_v; returns the smallest observed ratio.
double sampled_c_ratio(const InfiniteNorm& norm, long samples, std::uint64_t seed = 11);

struct FamilyConstants {
  Real C;
  long M;
  Real L;
};

/// A system per field in a collection, with constants dominating every member.
class UniformSystemFamily {
 public:
  using Builder = std::function<AdelicLipschitzSystem(const Field&, int)>;
  UniformSystemFamily(std::string name, Builder builder, int n, FamilyConstants constants);

  AdelicLipschitzSystem member(const Field& field) const { return builder_(field, n_); }
  const FamilyConstants& constants() const { return constants_; }
  const std::string& name() const { return name_; }
  int n() const { return n_; }
  /// Whether the member's own constants are dominated by the family's.
  bool dominates(const Field& field) const;
  Real A(int me) const;

 private:
  std::string name_;
  Builder builder_;
  int n_;
  FamilyConstants constants_;
};

/// Standard family on all quadratic fields: (C, M, L) = (1, 2n+2, 2 pi sqrt(2n+1)).
UniformSystemFamily standard_family(int n);

}  // namespace schanuel

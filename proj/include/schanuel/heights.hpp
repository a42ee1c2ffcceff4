#pragma once

// Weil heights of tuples over Q and quadratic fields, exact threshold tests,
// heights of quadratic irrationalities from their minimal polynomials, and
// heights attached to adelic-Lipschitz systems.

#include <optional>
#include <string>
#include <vector>

#include "schanuel/als.hpp"
#include "schanuel/nfq.hpp"
#include "schanuel/quadirr.hpp"
#include "schanuel/real.hpp"

namespace schanuel {

struct HomogeneousTuple {
  Field field;
  std::vector<Element> coords;

  HomogeneousTuple(const Field& field, std::vector<Element> coords);
  /// Rational coordinates in Q.
  static HomogeneousTuple rational(const std::vector<Rational>& coords);
  int n() const { return static_cast<int>(coords.size()) - 1; }
  HomogeneousTuple scaled(const Element& lambda) const;
  /// Same coordinates viewed in a quadratic field containing them.
  HomogeneousTuple lifted(const Field& K) const;
};

/// H^root = value.
struct ExactHeight {
  int root = 1;
  QuadIrrational value;
  friend bool operator==(const ExactHeight& x, const ExactHeight& y) {
    return x.root == y.root && x.value == y.value;
  }
};

struct HeightValue {
  Real enclosure;
  std::optional<ExactHeight> exact;
  std::string to_string() const;
};

/// H^d exactly, d the field degree.
QuadIrrational weil_height_power(const HomogeneousTuple& t);
HeightValue weil_height(const HomogeneousTuple& t);
/// H(t) <= X, decided exactly (ties count as <=).
bool height_leq(const HomogeneousTuple& t, const Rational& X);

/// Mahler measure of a x^2 + b x + c (a != 0), exact.
QuadIrrational mahler_measure(const Integer& a, const Integer& b, const Integer& c);
/// Height H(1, alpha) = M(f)^{1/2} of a root of a primitive irreducible quadratic.
HeightValue root_height_from_minpoly(const Integer& a, const Integer& b, const Integer& c);

/// Product of N_v(sigma_v t)^{d_v/d} over all places of the system's field.
HeightValue als_height(const AdelicLipschitzSystem& system, const HomogeneousTuple& t);

}  // namespace schanuel

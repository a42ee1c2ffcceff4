#pragma once

// Q and quadratic fields Q(sqrt(d)): exact elements on the integral basis
// {1, w}, fractional ideals in two-element Hermite form, places with their
// normalized absolute values, and the invariants h, R, w, disc.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schanuel/arith.hpp"
#include "schanuel/quadirr.hpp"
#include "schanuel/real.hpp"

namespace schanuel {

/// Q (d == 1) or the quadratic field Q(sqrt(d)).
struct Field {
  std::int64_t d = 1;
  std::int64_t disc = 1;
  int r = 1;
  int s = 0;
  int w = 2;
  /// w = (t + sqrt(disc)) / 2 satisfies w^2 = t*w - norm_omega.
  int t = 0;
  std::int64_t norm_omega = 0;

  static Field rationals() { return Field{}; }
  int degree() const { return d == 1 ? 1 : 2; }
  bool is_rational() const { return d == 1; }
  bool is_imaginary() const { return d < 0; }
  bool is_real_quadratic() const { return d > 1; }
  std::string label() const;

  friend bool operator==(const Field& a, const Field& b) { return a.d == b.d; }
  friend bool operator!=(const Field& a, const Field& b) { return a.d != b.d; }
};

Field make_quadratic_field(std::int64_t d);
/// Field with the given fundamental discriminant.
Field field_from_discriminant(std::int64_t disc);

struct Complex {
  Real re;
  Real im;
  Real abs() const { return sqrt(re * re + im * im); }
};

/// a + b*w in the given field (b == 0 for Q).
class Element {
 public:
  Element() = default;
  Element(const Field& field, const Rational& a, const Rational& b = 0);
  static Element omega(const Field& field) { return Element(field, 0, 1); }

  const Field& field() const { return field_; }
  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  bool is_zero() const { return a_ == 0 && b_ == 0; }
  bool is_rational() const { return b_ == 0; }
  bool is_integral() const { return a_.get_den() == 1 && b_.get_den() == 1; }

  Rational norm() const;
  Rational trace() const;
  Element conjugate() const;
  Element inverse() const;
  /// Smallest positive integer m with m*x integral.
  Integer denominator() const;

  /// Real embedding i (0 or 1) as an exact quadratic irrational; not for imaginary fields.
  QuadIrrational real_embedding(int index) const;
  /// sigma_1..sigma_{r+s}: both real embeddings, or the one complex embedding.
  std::vector<Complex> embeddings(mpfr_prec_t precision = Real::kDefaultPrecision) const;

  Element operator-() const { return Element(field_, -a_, -b_); }
  friend Element operator+(const Element& x, const Element& y);
  friend Element operator-(const Element& x, const Element& y);
  friend Element operator*(const Element& x, const Element& y);
  friend Element operator/(const Element& x, const Element& y);
  friend bool operator==(const Element& x, const Element& y) {
    return x.field_ == y.field_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Element& x, const Element& y) { return !(x == y); }

  std::string to_string() const;

 private:
  Field field_;
  Rational a_ = 0;
  Rational b_ = 0;
};

/// Fractional ideal scale * [a, b + w] with a >= 1 and 0 <= b < a
/// (for Q: scale * Z with a = 1, b = 0).
class Ideal {
 public:
  Ideal() = default;
  static Ideal unit(const Field& field);
  static Ideal principal(const Element& x);
  /// Ideal generated by the given elements; zeros are ignored.
  static Ideal generated_by(const Field& field, const std::vector<Element>& gens);

  const Field& field() const { return field_; }
  const Rational& scale() const { return scale_; }
  const Integer& a() const { return a_; }
  const Integer& b() const { return b_; }

  Rational norm() const;
  bool contains(const Element& x) const;
  bool is_integral() const;
  /// Z-basis {scale*a, scale*(b + w)} (one element for Q).
  std::vector<Element> basis() const;

  Ideal conjugate() const;
  Ideal inverse() const;
  /// Sum (gcd) of two ideals.
  friend Ideal operator+(const Ideal& x, const Ideal& y);
  friend Ideal operator*(const Ideal& x, const Ideal& y);
  friend bool operator==(const Ideal& x, const Ideal& y) {
    return x.field_ == y.field_ && x.scale_ == y.scale_ && x.a_ == y.a_ && x.b_ == y.b_;
  }
  friend bool operator!=(const Ideal& x, const Ideal& y) { return !(x == y); }

  std::string to_string() const;

 private:
  friend Ideal hermite_ideal(const Field&, const std::vector<Element>&);
  Field field_;
  Rational scale_ = 1;
  Integer a_ = 1;
  Integer b_ = 0;
};

/// Ideal gcd of the coordinates of a nonzero tuple.
Ideal content_ideal(const std::vector<Element>& tuple);

enum class PrimeKind { Rational, Split, Inert, Ramified };
std::string to_string(PrimeKind kind);

struct FinitePlace {
  Field field;
  std::int64_t p = 2;
  PrimeKind kind = PrimeKind::Rational;
  int index = 0;
  std::int64_t Np = 2;
  int e = 1;
  int f = 1;
  int d_v = 1;
  /// w is congruent to root modulo the prime (unused for inert primes).
  std::int64_t root = 0;

  Ideal prime_ideal() const;
};

struct InfinitePlace {
  Field field;
  int index = 0;
  int d_v = 1;
};

std::vector<FinitePlace> places_above(const Field& field, std::int64_t p);
std::vector<InfinitePlace> infinite_places(const Field& field);

/// ord_p(x) for x != 0.
int ord(const Element& x, const FinitePlace& v);
int ord(const Ideal& I, const FinitePlace& v);

/// |x|_v = Np^exponent exactly, or zero.
struct FiniteAbsValue {
  bool zero = false;
  std::int64_t base = 1;
  Rational exponent = 0;
  /// |x|_v^{d_v} = Np^{-ord}, an exact rational.
  Rational power_dv(int d_v) const;
  Real to_real(mpfr_prec_t precision = Real::kDefaultPrecision) const;
};

FiniteAbsValue absolute_value(const Element& x, const FinitePlace& v);
Real absolute_value(const Element& x, const InfinitePlace& v,
                    mpfr_prec_t precision = Real::kDefaultPrecision);

/// Finite places where the element (nonzero) has nonzero order.
std::vector<FinitePlace> support(const Element& x);

struct BinaryForm {
  std::int64_t a;
  std::int64_t b;
  std::int64_t c;
};

/// Reduced primitive forms of the field discriminant (imaginary: one per
/// class; real: all reduced forms, grouped into cycles by narrow_cycles).
std::vector<BinaryForm> reduced_forms(std::int64_t disc);
/// Cycles of reduced indefinite forms under the reduction operator.
std::vector<std::vector<BinaryForm>> narrow_cycles(std::int64_t disc);

struct UnitData {
  QuadIrrational epsilon;  // fundamental unit > 1, as x + y*sqrt(disc)
  int norm = -1;
  int period = 0;
};

/// Fundamental unit via the continued fraction of (b0 + sqrt(disc))/2.
UnitData fundamental_unit(const Field& field);
std::int64_t class_number(const Field& field);
std::int64_t narrow_class_number(const Field& field);
Real regulator(const Field& field, mpfr_prec_t precision = Real::kDefaultPrecision);

/// Integral ideals whose classes cover the class group (narrow classes for
/// real fields, so each wide class appears equally often).
std::vector<Ideal> class_representatives(const Field& field);

enum class Provenance { Computed, Supplied, MeasuredEnvelope };
std::string to_string(Provenance p);

struct FieldInvariants {
  std::string label;
  int degree = 1;
  Integer disc = 1;
  int r = 1;
  int s = 0;
  Integer h = 1;
  Real R = Real(1);
  int w = 2;
  Provenance provenance = Provenance::Computed;
  /// The quadratic (or rational) field behind computed invariants.
  std::optional<Field> field;
};

FieldInvariants compute_invariants(const Field& field);
/// Parse "label, degree, disc, r, s, h, R, w" records.
std::vector<FieldInvariants> parse_invariants(const std::string& text);
std::vector<FieldInvariants> load_invariants_file(const std::string& path);

}  // namespace schanuel

#include "schanuel/arith.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

namespace schanuel {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidD: return "InvalidD";
    case ErrorKind::NotSquarefree: return "NotSquarefree";
    case ErrorKind::InvalidPrime: return "InvalidPrime";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::NotPrimitive: return "NotPrimitive";
    case ErrorKind::UnsupportedFinitePart: return "UnsupportedFinitePart";
    case ErrorKind::MissingClassData: return "MissingClassData";
    case ErrorKind::CoverageFailure: return "CoverageFailure";
    case ErrorKind::NotFundamental: return "NotFundamental";
    case ErrorKind::UnsupportedDegree: return "UnsupportedDegree";
    case ErrorKind::MissingZeta: return "MissingZeta";
    case ErrorKind::UnsupportedRegime: return "UnsupportedRegime";
    case ErrorKind::InvalidG: return "InvalidG";
    case ErrorKind::UnsupportedClassNumber: return "UnsupportedClassNumber";
    case ErrorKind::CapTooSmall: return "CapTooSmall";
    case ErrorKind::ScanTooSmall: return "ScanTooSmall";
    case ErrorKind::DegenerateGrid: return "DegenerateGrid";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(message), kind_(kind) {}

namespace arith {

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw Error(ErrorKind::InvalidArgument, "isqrt of negative number");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(n)));
  while (r > 0 && static_cast<__int128>(r) * r > n) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

Integer isqrt(const Integer& n) {
  if (sgn(n) < 0) throw Error(ErrorKind::InvalidArgument, "isqrt of negative number");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(std::int64_t n) {
  if (n < 0) return false;
  const auto r = isqrt(n);
  return r * r == n;
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0 || n % 3 == 0) return false;
  for (std::int64_t q = 5; q * q <= n; q += 6) {
    if (n % q == 0 || n % (q + 2) == 0) return false;
  }
  return true;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n) {
  std::vector<std::pair<std::int64_t, int>> out;
  if (n < 0) n = -n;
  for (std::int64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool is_squarefree(std::int64_t n) {
  if (n == 0) return false;
  for (const auto& [p, e] : factorize(n)) {
    if (e > 1) return false;
  }
  return true;
}

std::int64_t squarefree_kernel(std::int64_t n) {
  if (n == 0) return 0;
  std::int64_t k = n < 0 ? -1 : 1;
  for (const auto& [p, e] : factorize(n)) {
    if (e % 2) k *= p;
  }
  return k;
}

int kronecker(std::int64_t a, std::int64_t n) {
  if (n <= 0) throw Error(ErrorKind::InvalidArgument, "kronecker: n must be positive");
  int result = 1;
  while (n % 2 == 0) {
    n /= 2;
    const std::int64_t r = ((a % 8) + 8) % 8;
    if (r % 2 == 0) return 0;
    if (r == 3 || r == 5) result = -result;
  }
  // Jacobi symbol for odd n.
  std::int64_t x = ((a % n) + n) % n;
  std::int64_t m = n;
  while (x != 0) {
    while (x % 2 == 0) {
      x /= 2;
      const std::int64_t r = m % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(x, m);
    if (x % 4 == 3 && m % 4 == 3) result = -result;
    x %= m;
  }
  return m == 1 ? result : 0;
}

bool is_fundamental_discriminant(std::int64_t disc) {
  if (disc == 0 || disc == 1) return false;
  const std::int64_t r = ((disc % 4) + 4) % 4;
  if (r == 1) return is_squarefree(disc);
  if (r != 0) return false;
  const std::int64_t m = disc / 4;
  const std::int64_t mr = ((m % 4) + 4) % 4;
  return (mr == 2 || mr == 3) && is_squarefree(m);
}

std::int64_t field_discriminant(std::int64_t d) {
  return (((d % 4) + 4) % 4 == 1) ? d : 4 * d;
}

std::vector<std::int64_t> primes_up_to(std::int64_t n) {
  std::vector<std::int64_t> primes;
  if (n < 2) return primes;
  std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
  for (std::int64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::int64_t j = i * i; j <= n; j += i) composite[j] = true;
  }
  return primes;
}

std::vector<std::int64_t> fundamental_discriminants(std::int64_t bound) {
  std::vector<std::int64_t> out;
  if (bound < 3) return out;
  const auto mu = mobius_table(bound);
  auto squarefree = [&](std::int64_t m) { return mu[static_cast<std::size_t>(m < 0 ? -m : m)] != 0; };
  for (std::int64_t a = 3; a <= bound; ++a) {
    for (const std::int64_t disc : {-a, a}) {
      const std::int64_t r = ((disc % 4) + 4) % 4;
      bool ok = false;
      if (r == 1) {
        ok = squarefree(disc);
      } else if (r == 0) {
        const std::int64_t m = disc / 4;
        const std::int64_t mr = ((m % 4) + 4) % 4;
        ok = (mr == 2 || mr == 3) && squarefree(m);
      }
      if (ok) out.push_back(disc);
    }
  }
  return out;
}

std::vector<std::int8_t> mobius_table(std::int64_t n) {
  std::vector<std::int8_t> mu(static_cast<std::size_t>(std::max<std::int64_t>(n, 1)) + 1, 1);
  mu[0] = 0;
  std::vector<bool> composite(mu.size(), false);
  for (std::int64_t i = 2; i <= n; ++i) {
    if (composite[i]) continue;
    for (std::int64_t j = i; j <= n; j += i) {
      if (j > i) composite[j] = true;
      mu[j] = static_cast<std::int8_t>(-mu[j]);
    }
    if (i <= n / i) {
      for (std::int64_t j = i * i; j <= n; j += i * i) mu[j] = 0;
    }
  }
  return mu;
}

int valuation(const Integer& x, std::int64_t p) {
  if (x == 0) throw Error(ErrorKind::InvalidArgument, "valuation of zero");
  Integer y = x;
  const Integer pp = static_cast<long>(p);
  int v = 0;
  while (mpz_divisible_p(y.get_mpz_t(), pp.get_mpz_t())) {
    mpz_divexact(y.get_mpz_t(), y.get_mpz_t(), pp.get_mpz_t());
    ++v;
  }
  return v;
}

int valuation(const Rational& x, std::int64_t p) {
  return valuation(Integer(x.get_num()), p) - valuation(Integer(x.get_den()), p);
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::InvalidArgument, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw Error(ErrorKind::InvalidArgument, "0 to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Rational r(pow(Integer(base.get_num()), static_cast<unsigned long>(exponent)),
             pow(Integer(base.get_den()), static_cast<unsigned long>(exponent)));
  r.canonicalize();
  return r;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(),
                                   [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto s = trim(text);
  const auto slash = s.find('/');
  const auto num = s.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view("1") : s.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw Error(ErrorKind::ParseError,
                "expected an exact rational 'p/q' or integer, got '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  Rational q{Integer(n, 10), Integer(std::string(den), 10)};
  if (q.get_den() == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  q.canonicalize();
  return q;
}

Rational parse_decimal(std::string_view text) {
  auto s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string digits;
  long exponent = 0;
  bool seen_point = false;
  std::size_t i = 0;
  for (; i < s.size(); ++i) {
    const char c = s[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      digits.push_back(c);
      if (seen_point) --exponent;
    } else if (c == '.' && !seen_point) {
      seen_point = true;
    } else {
      break;
    }
  }
  if (i < s.size()) {
    if ((s[i] != 'e' && s[i] != 'E') || i + 1 >= s.size()) {
      throw Error(ErrorKind::ParseError, "malformed decimal '" + std::string(text) + "'");
    }
    const auto exp_part = s.substr(i + 1);
    if (!is_integer_literal(exp_part)) {
      throw Error(ErrorKind::ParseError, "malformed decimal exponent in '" + std::string(text) + "'");
    }
    exponent += std::stol(std::string(exp_part));
  }
  if (digits.empty()) throw Error(ErrorKind::ParseError, "malformed decimal '" + std::string(text) + "'");
  Rational q(Integer(digits, 10), 1);
  q *= pow(Rational(10), exponent);
  if (negative) q = -q;
  return q;
}

int significant_digits(std::string_view text) {
  auto s = trim(text);
  int count = 0;
  bool leading = true;
  for (const char c : s) {
    if (c == 'e' || c == 'E') break;
    if (!std::isdigit(static_cast<unsigned char>(c))) continue;
    if (leading && c == '0') continue;
    leading = false;
    ++count;
  }
  return count;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

}  // namespace arith
}  // namespace schanuel

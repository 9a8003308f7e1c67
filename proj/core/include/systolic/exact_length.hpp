#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace systolic {

using Rational = mpq_class;

/// A basis element sqrt(radicand) * pi^pi_power with a square-free radicand.
struct Monomial {
  std::uint64_t radicand = 1;
  int pi_power = 0;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

/// Closed interval with outward-rounded double endpoints.
struct Enclosure {
  double lower = 0.0;
  double upper = 0.0;
};

/// Exact real number of the form  sum_i c_i * sqrt(d_i) * pi^e_i  with
/// rational c_i, square-free d_i and integer e_i.
///
/// Every length, radius and area in the model lives in this ring:
/// sqrt(28) = 2*sqrt(7), the chimney radius (sqrt(28)-4)/(2 pi) and the
/// clearance sqrt(3)/sqrt(28) are all finite sums of such monomials.
///
/// Equality of values is equality of the normalised term maps. The square
/// roots of distinct square-free integers are linearly independent over Q and
/// pi is transcendental, so two different normal forms always denote
/// different reals; compare() relies on this to terminate.
class ExactLength {
 public:
  ExactLength() = default;
  ExactLength(long value);  // NOLINT(google-explicit-constructor)
  explicit ExactLength(const Rational& value);

  /// sqrt(value) for a non-negative rational, reduced to c*sqrt(d).
  static ExactLength sqrt_of(const Rational& value);
  /// coefficient * pi^power.
  static ExactLength pi(const Rational& coefficient = 1, int power = 1);
  static ExactLength term(const Rational& coefficient, std::uint64_t radicand, int pi_power);

  [[nodiscard]] bool is_zero() const { return terms_.empty(); }
  [[nodiscard]] const std::map<Monomial, Rational>& terms() const { return terms_; }
  /// Coefficient of the given monomial (zero if absent).
  [[nodiscard]] Rational coefficient(std::uint64_t radicand, int pi_power) const;
  /// True iff the value is rational (only the monomial 1 is present).
  [[nodiscard]] bool is_rational() const;

  ExactLength& operator+=(const ExactLength& other);
  ExactLength& operator-=(const ExactLength& other);
  ExactLength& operator*=(const Rational& factor);
  ExactLength& operator/=(const Rational& divisor);

  friend ExactLength operator+(ExactLength lhs, const ExactLength& rhs) { return lhs += rhs; }
  friend ExactLength operator-(ExactLength lhs, const ExactLength& rhs) { return lhs -= rhs; }
  friend ExactLength operator-(ExactLength value);
  friend ExactLength operator*(const ExactLength& lhs, const ExactLength& rhs);
  friend ExactLength operator*(ExactLength lhs, const Rational& rhs) { return lhs *= rhs; }
  friend ExactLength operator*(const Rational& lhs, ExactLength rhs) { return rhs *= lhs; }
  friend ExactLength operator/(ExactLength lhs, const Rational& rhs) { return lhs /= rhs; }

  /// Structural equality, which coincides with equality of values.
  friend bool operator==(const ExactLength& lhs, const ExactLength& rhs) = default;

  /// Sign of the represented real: -1, 0 or +1.
  [[nodiscard]] int sign() const;
  /// Rigorous enclosure of the value at the given working precision (bits).
  [[nodiscard]] Enclosure enclose(long precision_bits = 64) const;
  [[nodiscard]] double to_double() const;

  /// Canonical text form, e.g. "2*sqrt(7)" or "1*sqrt(7)*pi^-1 + -2*pi^-1".
  [[nodiscard]] std::string to_string() const;
  /// Parses the canonical form; also accepts zero terms such as "0*pi",
  /// which are dropped. Throws std::invalid_argument on malformed input.
  static ExactLength parse(std::string_view text);

 private:
  void add_term(const Monomial& monomial, const Rational& coefficient);

  std::map<Monomial, Rational> terms_;
};

/// Total order consistent with the real values.
std::strong_ordering compare(const ExactLength& lhs, const ExactLength& rhs);

inline bool operator<(const ExactLength& lhs, const ExactLength& rhs) {
  return compare(lhs, rhs) == std::strong_ordering::less;
}
inline bool operator>(const ExactLength& lhs, const ExactLength& rhs) { return rhs < lhs; }
inline bool operator<=(const ExactLength& lhs, const ExactLength& rhs) { return !(rhs < lhs); }
inline bool operator>=(const ExactLength& lhs, const ExactLength& rhs) { return !(lhs < rhs); }

/// Largest k with k*k dividing value; returns {k, value / k^2}.
std::pair<std::uint64_t, std::uint64_t> split_square(std::uint64_t value);

}  // namespace systolic

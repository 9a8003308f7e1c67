#include "systolic/exact_length.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

#include <mpfr.h>

namespace systolic {
namespace {

constexpr long kStartPrecision = 64;
constexpr long kMaxPrecision = 4096;

std::uint64_t to_u64(const mpz_class& value) {
  if (sgn(value) < 0 || mpz_sizeinbase(value.get_mpz_t(), 2) > 63) {
    throw std::overflow_error("radicand does not fit in 63 bits");
  }
  return mpz_get_ui(value.get_mpz_t());
}

// RAII wrapper; MPFR values are not copyable.
class Real {
 public:
  explicit Real(long precision) { mpfr_init2(value_, precision); }
  ~Real() { mpfr_clear(value_); }
  Real(const Real&) = delete;
  Real& operator=(const Real&) = delete;
  mpfr_ptr get() { return value_; }
  mpfr_srcptr get() const { return value_; }

 private:
  mpfr_t value_;
};

// Enclosure [lo, hi] of |sqrt(d) * pi^e| at the given precision.
void enclose_monomial(const Monomial& m, long precision, Real& lo, Real& hi) {
  Real pi_lo(precision), pi_hi(precision), tmp(precision);
  mpfr_set_ui(lo.get(), 1, MPFR_RNDD);
  mpfr_set_ui(hi.get(), 1, MPFR_RNDU);
  if (m.radicand != 1) {
    mpfr_sqrt_ui(lo.get(), m.radicand, MPFR_RNDD);
    mpfr_sqrt_ui(hi.get(), m.radicand, MPFR_RNDU);
  }
  if (m.pi_power == 0) return;
  mpfr_const_pi(pi_lo.get(), MPFR_RNDD);
  mpfr_const_pi(pi_hi.get(), MPFR_RNDU);
  const unsigned long power = static_cast<unsigned long>(m.pi_power > 0 ? m.pi_power : -m.pi_power);
  if (m.pi_power > 0) {
    mpfr_pow_ui(tmp.get(), pi_lo.get(), power, MPFR_RNDD);
    mpfr_mul(lo.get(), lo.get(), tmp.get(), MPFR_RNDD);
    mpfr_pow_ui(tmp.get(), pi_hi.get(), power, MPFR_RNDU);
    mpfr_mul(hi.get(), hi.get(), tmp.get(), MPFR_RNDU);
  } else {
    mpfr_pow_ui(tmp.get(), pi_hi.get(), power, MPFR_RNDU);
    mpfr_div(lo.get(), lo.get(), tmp.get(), MPFR_RNDD);
    mpfr_pow_ui(tmp.get(), pi_lo.get(), power, MPFR_RNDD);
    mpfr_div(hi.get(), hi.get(), tmp.get(), MPFR_RNDU);
  }
}

// Encloses the whole sum; returns {lo, hi} in caller-provided reals.
void enclose_sum(const std::map<Monomial, Rational>& terms, long precision, Real& sum_lo,
                 Real& sum_hi) {
  mpfr_set_zero(sum_lo.get(), 1);
  mpfr_set_zero(sum_hi.get(), 1);
  Real mag_lo(precision), mag_hi(precision), t_lo(precision), t_hi(precision);
  for (const auto& [monomial, coeff] : terms) {
    enclose_monomial(monomial, precision, mag_lo, mag_hi);
    const mpz_srcptr num = coeff.get_num_mpz_t();
    const mpz_srcptr den = coeff.get_den_mpz_t();
    if (sgn(coeff) > 0) {
      mpfr_mul_z(t_lo.get(), mag_lo.get(), num, MPFR_RNDD);
      mpfr_div_z(t_lo.get(), t_lo.get(), den, MPFR_RNDD);
      mpfr_mul_z(t_hi.get(), mag_hi.get(), num, MPFR_RNDU);
      mpfr_div_z(t_hi.get(), t_hi.get(), den, MPFR_RNDU);
    } else {
      mpfr_mul_z(t_lo.get(), mag_hi.get(), num, MPFR_RNDD);
      mpfr_div_z(t_lo.get(), t_lo.get(), den, MPFR_RNDD);
      mpfr_mul_z(t_hi.get(), mag_lo.get(), num, MPFR_RNDU);
      mpfr_div_z(t_hi.get(), t_hi.get(), den, MPFR_RNDU);
    }
    mpfr_add(sum_lo.get(), sum_lo.get(), t_lo.get(), MPFR_RNDD);
    mpfr_add(sum_hi.get(), sum_hi.get(), t_hi.get(), MPFR_RNDU);
  }
}

std::string trim(std::string_view text) {
  std::string out;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  }
  return out;
}

std::vector<std::string> split(const std::string& text, char delimiter) {
  std::vector<std::string> parts;
  std::string current;
  for (char c : text) {
    if (c == delimiter) {
      parts.push_back(current);
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  parts.push_back(current);
  return parts;
}

Rational parse_rational(const std::string& token) {
  if (token.empty()) throw std::invalid_argument("empty coefficient");
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-' && c != '/') {
      throw std::invalid_argument("bad coefficient: " + token);
    }
  }
  Rational value;
  if (value.set_str(token, 10) != 0) throw std::invalid_argument("bad coefficient: " + token);
  value.canonicalize();
  return value;
}

long parse_integer(const std::string& token) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    throw std::invalid_argument("bad integer: " + token);
  }
  if (used != token.size()) throw std::invalid_argument("bad integer: " + token);
  return value;
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> split_square(std::uint64_t value) {
  if (value == 0) return {0, 1};
  std::uint64_t outside = 1;
  std::uint64_t inside = 1;
  for (std::uint64_t f = 2; f <= value / f; ++f) {
    int multiplicity = 0;
    while (value % f == 0) {
      value /= f;
      ++multiplicity;
    }
    for (int i = 0; i < multiplicity / 2; ++i) outside *= f;
    if (multiplicity % 2 == 1) inside *= f;
  }
  inside *= value;
  return {outside, inside};
}

ExactLength::ExactLength(long value) : ExactLength(Rational(value)) {}

ExactLength::ExactLength(const Rational& value) { add_term(Monomial{}, value); }

ExactLength ExactLength::sqrt_of(const Rational& value) {
  if (sgn(value) < 0) throw std::domain_error("sqrt of a negative rational");
  ExactLength result;
  if (sgn(value) == 0) return result;
  // sqrt(p/q) = sqrt(p*q) / q
  const mpz_class product = value.get_num() * value.get_den();
  const auto [outside, inside] = split_square(to_u64(product));
  result.add_term(Monomial{inside, 0}, Rational(mpz_class(outside), value.get_den()));
  return result;
}

ExactLength ExactLength::pi(const Rational& coefficient, int power) {
  return term(coefficient, 1, power);
}

ExactLength ExactLength::term(const Rational& coefficient, std::uint64_t radicand, int pi_power) {
  if (radicand == 0) return {};
  const auto [outside, inside] = split_square(radicand);
  ExactLength result;
  result.add_term(Monomial{inside, pi_power}, coefficient * Rational(mpz_class(outside)));
  return result;
}

Rational ExactLength::coefficient(std::uint64_t radicand, int pi_power) const {
  const auto it = terms_.find(Monomial{radicand, pi_power});
  return it == terms_.end() ? Rational(0) : it->second;
}

bool ExactLength::is_rational() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Monomial{});
}

void ExactLength::add_term(const Monomial& monomial, const Rational& coefficient) {
  if (sgn(coefficient) == 0) return;
  Rational value = coefficient;
  value.canonicalize();
  auto [it, inserted] = terms_.try_emplace(monomial, value);
  if (!inserted) {
    it->second += value;
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

ExactLength& ExactLength::operator+=(const ExactLength& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

ExactLength& ExactLength::operator-=(const ExactLength& other) {
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

ExactLength& ExactLength::operator*=(const Rational& factor) {
  if (sgn(factor) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= factor;
  return *this;
}

ExactLength& ExactLength::operator/=(const Rational& divisor) {
  if (sgn(divisor) == 0) throw std::domain_error("division by zero");
  for (auto& [m, c] : terms_) c /= divisor;
  return *this;
}

ExactLength operator-(ExactLength value) {
  for (auto& [m, c] : value.terms_) c = -c;
  return value;
}

ExactLength operator*(const ExactLength& lhs, const ExactLength& rhs) {
  ExactLength result;
  for (const auto& [m1, c1] : lhs.terms_) {
    for (const auto& [m2, c2] : rhs.terms_) {
      const std::uint64_t g = std::gcd(m1.radicand, m2.radicand);
      const std::uint64_t a = m1.radicand / g;
      const std::uint64_t b = m2.radicand / g;
      if (b != 0 && a > std::numeric_limits<std::uint64_t>::max() / b) {
        throw std::overflow_error("radicand product overflows");
      }
      // sqrt(d1 d2) = g * sqrt((d1/g)(d2/g)); the cofactor stays square-free.
      result.add_term(Monomial{a * b, m1.pi_power + m2.pi_power},
                      c1 * c2 * Rational(mpz_class(static_cast<unsigned long>(g))));
    }
  }
  return result;
}

Enclosure ExactLength::enclose(long precision_bits) const {
  Real lo(precision_bits), hi(precision_bits);
  enclose_sum(terms_, precision_bits, lo, hi);
  return {mpfr_get_d(lo.get(), MPFR_RNDD), mpfr_get_d(hi.get(), MPFR_RNDU)};
}

double ExactLength::to_double() const {
  Real lo(kStartPrecision), hi(kStartPrecision);
  enclose_sum(terms_, kStartPrecision, lo, hi);
  return mpfr_get_d(lo.get(), MPFR_RNDN);
}

int ExactLength::sign() const {
  if (terms_.empty()) return 0;
  if (is_rational()) return sgn(terms_.begin()->second);
  for (long precision = kStartPrecision; precision <= kMaxPrecision; precision *= 2) {
    Real lo(precision), hi(precision);
    enclose_sum(terms_, precision, lo, hi);
    if (mpfr_sgn(lo.get()) > 0) return 1;
    if (mpfr_sgn(hi.get()) < 0) return -1;
  }
  throw std::runtime_error("ExactLength::sign: no separation at " +
                           std::to_string(kMaxPrecision) + " bits for " + to_string());
}

std::strong_ordering compare(const ExactLength& lhs, const ExactLength& rhs) {
  if (lhs == rhs) return std::strong_ordering::equal;
  const int s = (lhs - rhs).sign();
  return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
}

std::string ExactLength::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) out << " + ";
    first = false;
    out << c.get_str();
    if (m.radicand != 1) out << "*sqrt(" << m.radicand << ")";
    if (m.pi_power == 1) {
      out << "*pi";
    } else if (m.pi_power != 0) {
      out << "*pi^" << m.pi_power;
    }
  }
  return out.str();
}

ExactLength ExactLength::parse(std::string_view text) {
  const std::string compact = trim(text);
  if (compact.empty()) throw std::invalid_argument("empty ExactLength text");
  ExactLength result;
  for (const std::string& term_text : split(compact, '+')) {
    if (term_text.empty()) throw std::invalid_argument("empty term in: " + compact);
    Rational coeff(1);
    std::uint64_t radicand = 1;
    int pi_power = 0;
    bool seen_coefficient = false;
    for (const std::string& factor : split(term_text, '*')) {
      if (factor.rfind("sqrt(", 0) == 0 && factor.back() == ')') {
        const long d = parse_integer(factor.substr(5, factor.size() - 6));
        if (d < 0) throw std::invalid_argument("negative radicand: " + factor);
        radicand *= static_cast<std::uint64_t>(d);
      } else if (factor == "pi") {
        pi_power += 1;
      } else if (factor.rfind("pi^", 0) == 0) {
        pi_power += static_cast<int>(parse_integer(factor.substr(3)));
      } else if (!seen_coefficient) {
        coeff = parse_rational(factor);
        seen_coefficient = true;
      } else {
        throw std::invalid_argument("unexpected factor: " + factor);
      }
    }
    result += term(coeff, radicand, pi_power);
  }
  return result;
}

}  // namespace systolic

#include "drg/numeric.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <limits>
#include <stdexcept>

namespace drg {

std::string to_string(const Integer& value) { return value.get_str(); }

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) {
    return value.get_num().get_str();
  }
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational ratio(const Integer& num, const Integer& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational out(num, den);
  out.canonicalize();
  return out;
}

Rational parse_rational(const std::string& text) {
  Rational result;
  if (result.set_str(text, 10) != 0 || text.empty()) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  result.canonicalize();
  return result;
}

long to_long(const Integer& value) {
  if (!value.fits_slong_p()) {
    throw std::overflow_error("integer " + value.get_str() + " does not fit in a long");
  }
  return value.get_si();
}

bool is_integral(const Rational& value) { return value.get_den() == 1; }

Integer floor(const Rational& value) {
  Integer result;
  mpz_fdiv_q(result.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return result;
}

Integer ceil(const Rational& value) {
  Integer result;
  mpz_cdiv_q(result.get_mpz_t(), value.get_num_mpz_t(), value.get_den_mpz_t());
  return result;
}

nlohmann::ordered_json to_json(const Integer& value) {
  if (value.fits_slong_p()) {
    return static_cast<std::int64_t>(value.get_si());
  }
  return value.get_str();
}

std::string approx(const Rational& value, int digits) {
  std::array<char, 64> buffer{};
  std::snprintf(buffer.data(), buffer.size(), "%.*g", digits, value.get_d());
  return buffer.data();
}

Interval operator+(const Interval& lhs, const Interval& rhs) {
  return {lhs.lo + rhs.lo, lhs.hi + rhs.hi};
}

Interval operator-(const Interval& lhs, const Interval& rhs) {
  return {lhs.lo - rhs.hi, lhs.hi - rhs.lo};
}

Interval operator*(const Interval& lhs, const Interval& rhs) {
  const std::array<Rational, 4> products{lhs.lo * rhs.lo, lhs.lo * rhs.hi, lhs.hi * rhs.lo,
                                         lhs.hi * rhs.hi};
  const auto [lo, hi] = std::minmax_element(products.begin(), products.end());
  return {*lo, *hi};
}

Interval operator*(const Rational& scalar, const Interval& rhs) {
  if (scalar >= 0) {
    return {scalar * rhs.lo, scalar * rhs.hi};
  }
  return {scalar * rhs.hi, scalar * rhs.lo};
}

Interval operator+(const Rational& scalar, const Interval& rhs) {
  return {scalar + rhs.lo, scalar + rhs.hi};
}

Interval operator/(const Interval& lhs, const Interval& rhs) {
  if (rhs.contains(0)) {
    throw std::domain_error("interval division by an interval containing zero");
  }
  const Interval inverse{Rational(1) / rhs.hi, Rational(1) / rhs.lo};
  return lhs * inverse;
}

Interval square(const Interval& value) {
  if (value.lo >= 0) {
    return {value.lo * value.lo, value.hi * value.hi};
  }
  if (value.hi <= 0) {
    return {value.hi * value.hi, value.lo * value.lo};
  }
  const Rational far = std::max(Rational(-value.lo), value.hi);
  return {0, far * far};
}

}  // namespace drg

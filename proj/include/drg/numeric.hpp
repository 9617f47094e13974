#pragma once

#include <gmpxx.h>

#include <json.hpp>

#include <string>

namespace drg {

using Integer = mpz_class;
using Rational = mpq_class;

std::string to_string(const Integer& value);

/// "p" for integral values, "p/q" otherwise (always canonical).
std::string to_string(const Rational& value);

Rational parse_rational(const std::string& text);

/// num/den in canonical form. Throws std::domain_error when den is 0.
Rational ratio(const Integer& num, const Integer& den);

/// Throws std::overflow_error when the value does not fit a long.
long to_long(const Integer& value);

bool is_integral(const Rational& value);

Integer floor(const Rational& value);
Integer ceil(const Rational& value);

/// Integers that fit in int64 are emitted as JSON numbers, larger ones as
/// decimal strings so the output stays exact.
nlohmann::ordered_json to_json(const Integer& value);

/// Display-only decimal rendering; never used for decisions.
std::string approx(const Rational& value, int digits = 12);

/// Closed interval [lo, hi] with rational endpoints.
struct Interval {
  Rational lo;
  Rational hi;

  static Interval point(const Rational& value) { return {value, value}; }

  Rational width() const { return hi - lo; }
  Rational midpoint() const { return (lo + hi) / 2; }
  bool contains(const Rational& value) const { return lo <= value && value <= hi; }
};

Interval operator+(const Interval& lhs, const Interval& rhs);
Interval operator-(const Interval& lhs, const Interval& rhs);
Interval operator*(const Interval& lhs, const Interval& rhs);
Interval operator*(const Rational& scalar, const Interval& rhs);
Interval operator+(const Rational& scalar, const Interval& rhs);
/// Division by an interval that excludes zero.
Interval operator/(const Interval& lhs, const Interval& rhs);
Interval square(const Interval& value);

}  // namespace drg

#pragma once

#include "drg/numeric.hpp"

#include <vector>

namespace drg {

/// Dense univariate polynomials, coefficients stored constant term first.
/// The zero polynomial is the empty vector.
using IntPoly = std::vector<Integer>;
using RatPoly = std::vector<Rational>;

int degree(const IntPoly& p);
int degree(const RatPoly& p);

Rational evaluate(const IntPoly& p, const Rational& x);
Integer evaluate(const IntPoly& p, const Integer& x);
Rational evaluate(const RatPoly& p, const Rational& x);

RatPoly to_rational(const IntPoly& p);
RatPoly derivative(const RatPoly& p);
RatPoly remainder(const RatPoly& dividend, const RatPoly& divisor);

/// Exact division by (x - root); the caller guarantees root is a root.
IntPoly deflate(const IntPoly& p, const Integer& root);

int sign(const Rational& value);

/// Sturm sequence of a square-free polynomial. Variation counts give the
/// number of distinct real roots in half-open intervals (a, b].
class SturmChain {
 public:
  explicit SturmChain(const RatPoly& p);
  explicit SturmChain(const IntPoly& p) : SturmChain(to_rational(p)) {}

  int variations_at(const Rational& x) const;
  int variations_at_neg_inf() const;
  int variations_at_pos_inf() const;

  /// Distinct roots in (lo, hi].
  int count_roots(const Rational& lo, const Rational& hi) const {
    return variations_at(lo) - variations_at(hi);
  }
  int count_all() const { return variations_at_neg_inf() - variations_at_pos_inf(); }

 private:
  std::vector<RatPoly> chain_;
};

/// Cauchy bound: every real root r satisfies |r| < bound.
Rational root_bound(const IntPoly& p);

}  // namespace drg

#pragma once

#include "drg/arrays.hpp"
#include "drg/numeric.hpp"
#include "drg/polynomial.hpp"

#include <json.hpp>

#include <vector>

namespace drg {

/// det(xI - L1) for the tridiagonal intersection matrix L1 of an array.
/// Monic of degree D+1, integer coefficients, constant term first.
struct CharPoly {
  IntPoly coeffs;
};

CharPoly char_poly(const IntersectionArray& array);

/// A certified real root: either an exact rational value or an open
/// interval (lo, hi) with rational endpoints that contains exactly one root
/// of the characteristic polynomial and no rational root of it.
struct Root {
  enum class Kind { Exact, Isolated };

  Kind kind = Kind::Exact;
  Rational value;     // Exact only
  Interval interval;  // Isolated: open interval; Exact: the point [value, value]

  bool is_exact() const { return kind == Kind::Exact; }
  /// Midpoint of the enclosure; display and floating-point oracles only.
  Rational representative() const { return is_exact() ? value : interval.midpoint(); }
};

struct SpectrumReport {
  CharPoly poly;
  /// Monic integer factor of `poly` left after removing the rational roots.
  /// Has no rational roots; every Isolated root is one of its roots.
  IntPoly irrational_factor;
  /// D+1 distinct roots, strictly decreasing; roots.front() is k.
  std::vector<Root> roots;

  const Root& theta_min() const { return roots.back(); }
  bool all_rational() const;
};

/// Exact rational roots (integer divisors of the constant term inside the
/// spectral radius bound) plus Sturm-isolated irrational roots, refined below
/// width 1e-12. Throws InfeasibleError("RootCountMismatch") if fewer than
/// D+1 distinct real roots exist and AnomalyError("RefinementBudgetExceeded")
/// if the bisection cap is hit.
SpectrumReport eigenvalues(const IntersectionArray& array);

/// Maximum bisection steps spent on any single root.
inline constexpr int kRefinementBudget = 256;

/// Shrinks an Isolated root's interval below `max_width` using the sign of
/// `factor` (which must have no rational roots).
void refine(Root& root, const IntPoly& factor, const Rational& max_width,
            int budget = kRefinementBudget);

/// The exact facts behind "theta_min = -3".
struct MinusThreeCertificate {
  Integer value_at_minus3;  // p(-3)
  int roots_below = 0;      // distinct roots strictly below -3 (Sturm count)
  bool holds() const { return value_at_minus3 == 0 && roots_below == 0; }
};

MinusThreeCertificate certify_minus3(const IntersectionArray& array);

/// p(-3) = 0 and no root of p lies in (-inf, -3); no floating point.
bool is_theta_min_minus3(const IntersectionArray& array);

/// Number of distinct roots of p strictly below x.
int count_roots_below(const IntPoly& p, const Rational& x);

struct Multiplicity {
  bool exact = true;
  Rational value;     // exact only
  Interval interval;  // certified enclosure (a point when exact)
  bool integral = false;
  Integer integer_value;  // meaningful when integral
};

/// m_j = v / sum_i k_i u_i(theta_j)^2 with u_0 = 1, u_1 = theta/k and the
/// three-term recurrence of L1. Exact for rational roots; interval enclosures
/// refined until narrower than 1/4 otherwise. Does not throw on
/// non-integral values; see `multiplicities`.
std::vector<Multiplicity> compute_multiplicities(const IntersectionArray& array,
                                                 const SpectrumReport& report);

/// As compute_multiplicities, but throws InfeasibleError("InfeasibleMultiplicity")
/// naming the first eigenvalue whose multiplicity is not an integer.
std::vector<Multiplicity> multiplicities(const IntersectionArray& array,
                                         const SpectrumReport& report);

struct DelsarteBound {
  bool exact = true;
  Rational value;     // exact only
  Interval interval;  // enclosure (point when exact)
  bool integral = false;
  /// theta_min = -1: the bound degenerates to 1 + k (complete graphs only).
  bool degenerate = false;
};

/// 1 - k/theta_min.
DelsarteBound delsarte_bound(const Rational& k, const Rational& theta_min);
DelsarteBound delsarte_bound(const IntersectionArray& array, const SpectrumReport& report);
DelsarteBound delsarte_bound(const IntersectionArray& array);

nlohmann::ordered_json to_json(const Root& root);
nlohmann::ordered_json to_json(const Multiplicity& m);
nlohmann::ordered_json to_json(const DelsarteBound& bound);
nlohmann::ordered_json to_json(const SpectrumReport& report);

}  // namespace drg

#include "drg/spectrum.hpp"

#include "drg/errors.hpp"

#include <algorithm>
#include <functional>

namespace drg {

namespace {

const Rational& presentation_width() {
  static const Rational width(Integer(1), Integer("1000000000000"));
  return width;
}

/// Roots of `q` in (lo, hi) by Sturm bisection; `q` has no rational roots so
/// midpoints are never roots.
void isolate(const SturmChain& chain, const Rational& lo, const Rational& hi, int count,
             int depth, std::vector<Interval>& out) {
  if (count == 0) return;
  if (count == 1) {
    out.push_back({lo, hi});
    return;
  }
  if (depth > kRefinementBudget) {
    throw AnomalyError("RefinementBudgetExceeded",
                       "root isolation exceeded " + std::to_string(kRefinementBudget) +
                           " bisection steps");
  }
  const Rational mid = (lo + hi) / 2;
  const int left = chain.count_roots(lo, mid);
  isolate(chain, lo, mid, left, depth + 1, out);
  isolate(chain, mid, hi, count - left, depth + 1, out);
}

void bisect_once(Root& root, const IntPoly& factor) {
  const Rational mid = root.interval.midpoint();
  const int s_mid = sign(evaluate(factor, mid));
  const int s_lo = sign(evaluate(factor, root.interval.lo));
  if (s_mid == 0) {
    throw AnomalyError("RefinementBudgetExceeded",
                       "rational midpoint " + to_string(mid) + " is a root of the irrational factor");
  }
  if (s_mid == s_lo) {
    root.interval.lo = mid;
  } else {
    root.interval.hi = mid;
  }
}

/// Rational shell sizes and v, without the integrality requirement.
struct RationalShells {
  std::vector<Rational> k;
  Rational v;
};

RationalShells rational_shells(const IntersectionArray& array) {
  RationalShells out;
  out.k.emplace_back(1);
  out.v = 1;
  for (int i = 1; i <= array.diameter(); ++i) {
    Rational next = out.k.back() * Rational(array.b_at(i - 1)) / Rational(array.c_at(i));
    out.v += next;
    out.k.push_back(std::move(next));
  }
  return out;
}

/// The value sum_i k_i u_i(theta)^2 for an exact theta.
Rational norm_sum(const IntersectionArray& array, const RationalShells& shells,
                  const Rational& theta) {
  Rational prev = 1;
  Rational cur = theta / Rational(array.k());
  Rational sum = shells.k[0] + shells.k[1] * cur * cur;
  for (int i = 1; i < array.diameter(); ++i) {
    Rational next =
        ((theta - Rational(array.a_at(i))) * cur - Rational(array.c_at(i)) * prev) /
        Rational(array.b_at(i));
    sum += shells.k[i + 1] * next * next;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return sum;
}

Interval norm_sum(const IntersectionArray& array, const RationalShells& shells,
                  const Interval& theta) {
  Interval prev = Interval::point(1);
  Interval cur = Rational(1) / Rational(array.k()) * theta;
  Interval sum = Interval::point(shells.k[0]) + shells.k[1] * square(cur);
  for (int i = 1; i < array.diameter(); ++i) {
    const Interval shifted = Rational(-array.a_at(i)) + theta;
    Interval next = Rational(1) / Rational(array.b_at(i)) *
                    (shifted * cur - Rational(array.c_at(i)) * prev);
    sum = sum + shells.k[i + 1] * square(next);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return sum;
}

}  // namespace

CharPoly char_poly(const IntersectionArray& array) {
  // Leading principal minors of xI - L1.
  IntPoly before{Integer(1)};
  IntPoly current{-array.a_at(0), Integer(1)};
  for (int i = 1; i <= array.diameter(); ++i) {
    const Integer ai = array.a_at(i);
    const Integer product = array.b_at(i - 1) * array.c_at(i);
    IntPoly next(current.size() + 1, Integer(0));
    for (std::size_t j = 0; j < current.size(); ++j) {
      next[j + 1] += current[j];
      next[j] -= ai * current[j];
    }
    for (std::size_t j = 0; j < before.size(); ++j) next[j] -= product * before[j];
    before = std::move(current);
    current = std::move(next);
  }
  return {current};
}

bool SpectrumReport::all_rational() const {
  return std::all_of(roots.begin(), roots.end(), [](const Root& r) { return r.is_exact(); });
}

void refine(Root& root, const IntPoly& factor, const Rational& max_width, int budget) {
  if (root.is_exact()) return;
  int steps = 0;
  while (root.interval.width() >= max_width) {
    if (steps++ >= budget) {
      throw AnomalyError("RefinementBudgetExceeded",
                         "root refinement exceeded " + std::to_string(budget) + " steps");
    }
    bisect_once(root, factor);
  }
}

SpectrumReport eigenvalues(const IntersectionArray& array) {
  SpectrumReport report;
  report.poly = char_poly(array);
  IntPoly remaining = report.poly.coeffs;

  // L1 is non-negative with every row summing to k, so every eigenvalue lies
  // in [-k, k]; a rational root of a monic integer polynomial is an integer
  // dividing the constant term.
  const long bound = to_long(array.k());
  std::vector<Integer> rational_roots;
  if (remaining.front() == 0) {
    rational_roots.emplace_back(0);
    remaining = deflate(remaining, 0);
  }
  for (long d = 1; d <= bound && degree(remaining) > 0; ++d) {
    for (const Integer& candidate : {Integer(d), Integer(-d)}) {
      if (remaining.front() % candidate != 0) continue;
      if (evaluate(remaining, candidate) == 0) {
        rational_roots.push_back(candidate);
        remaining = deflate(remaining, candidate);
      }
    }
  }
  report.irrational_factor = remaining;

  std::vector<Interval> isolated;
  if (degree(remaining) > 0) {
    const SturmChain chain(remaining);
    const Rational limit(bound + 1);
    isolate(chain, -limit, limit, chain.count_roots(-limit, limit), 0, isolated);
  }

  const auto found = rational_roots.size() + isolated.size();
  if (found != static_cast<std::size_t>(array.diameter() + 1)) {
    throw InfeasibleError("RootCountMismatch",
                          "found " + std::to_string(found) + " distinct real roots, expected " +
                              std::to_string(array.diameter() + 1));
  }

  for (const auto& r : rational_roots) {
    report.roots.push_back({Root::Kind::Exact, Rational(r), Interval::point(Rational(r))});
  }
  for (const auto& iv : isolated) {
    Root root{Root::Kind::Isolated, Rational(0), iv};
    refine(root, remaining, presentation_width());
    // Keep enclosures clear of the rational roots so ordering is exact.
    int steps = 0;
    while (std::any_of(rational_roots.begin(), rational_roots.end(), [&](const Integer& r) {
      return root.interval.lo < r && r < root.interval.hi;
    })) {
      if (steps++ >= kRefinementBudget) {
        throw AnomalyError("RefinementBudgetExceeded", "cannot separate roots");
      }
      bisect_once(root, remaining);
    }
    report.roots.push_back(root);
  }
  std::sort(report.roots.begin(), report.roots.end(), [](const Root& lhs, const Root& rhs) {
    return lhs.representative() > rhs.representative();
  });

  const Root& top = report.roots.front();
  if (!top.is_exact() || top.value != Rational(array.k())) {
    throw AnomalyError("RootCountMismatch", "largest root is not k = " + array.k().get_str());
  }
  return report;
}

int count_roots_below(const IntPoly& p, const Rational& x) {
  if (evaluate(p, x) == 0) {
    // Rational roots of a monic integer polynomial are integers.
    const IntPoly q = deflate(p, x.get_num());
    const SturmChain chain(q);
    return chain.variations_at_neg_inf() - chain.variations_at(x);
  }
  const SturmChain chain(p);
  return chain.variations_at_neg_inf() - chain.variations_at(x);
}

MinusThreeCertificate certify_minus3(const IntersectionArray& array) {
  const auto poly = char_poly(array);
  MinusThreeCertificate cert;
  cert.value_at_minus3 = evaluate(poly.coeffs, Integer(-3));
  cert.roots_below = count_roots_below(poly.coeffs, Rational(-3));
  return cert;
}

bool is_theta_min_minus3(const IntersectionArray& array) { return certify_minus3(array).holds(); }

std::vector<Multiplicity> compute_multiplicities(const IntersectionArray& array,
                                                 const SpectrumReport& report) {
  const auto shells = rational_shells(array);
  const Rational quarter(1, 4);
  std::vector<Multiplicity> out;
  for (const auto& original : report.roots) {
    Multiplicity m;
    if (original.is_exact()) {
      m.exact = true;
      m.value = shells.v / norm_sum(array, shells, original.value);
      m.interval = Interval::point(m.value);
      m.integral = is_integral(m.value);
      if (m.integral) m.integer_value = m.value.get_num();
    } else {
      Root root = original;
      m.exact = false;
      int steps = 0;
      while (true) {
        m.interval = Interval::point(shells.v) / norm_sum(array, shells, root.interval);
        if (m.interval.width() < quarter) break;
        if (steps++ >= kRefinementBudget) {
          throw AnomalyError("RefinementBudgetExceeded",
                             "multiplicity enclosure for root near " +
                                 approx(original.representative()) + " stays wider than 1/4");
        }
        bisect_once(root, report.irrational_factor);
      }
      const Integer candidate = ceil(m.interval.lo);
      m.integral = Rational(candidate) <= m.interval.hi;
      if (m.integral) m.integer_value = candidate;
    }
    out.push_back(std::move(m));
  }
  return out;
}

std::vector<Multiplicity> multiplicities(const IntersectionArray& array,
                                         const SpectrumReport& report) {
  auto result = compute_multiplicities(array, report);
  for (std::size_t j = 0; j < result.size(); ++j) {
    if (!result[j].integral) {
      const auto& root = report.roots[j];
      const std::string where = root.is_exact() ? to_string(root.value)
                                                : "~" + approx(root.representative());
      const std::string what = result[j].exact ? to_string(result[j].value)
                                               : "in [" + to_string(result[j].interval.lo) +
                                                     ", " + to_string(result[j].interval.hi) +
                                                     "]";
      throw InfeasibleError("InfeasibleMultiplicity",
                            "multiplicity of eigenvalue " + where + " is " + what +
                                ", not an integer");
    }
  }
  return result;
}

DelsarteBound delsarte_bound(const Rational& k, const Rational& theta_min) {
  if (theta_min >= 0) {
    throw InputError("InvalidArray", "smallest eigenvalue must be negative");
  }
  DelsarteBound out;
  out.exact = true;
  out.value = 1 - k / theta_min;
  out.interval = Interval::point(out.value);
  out.integral = is_integral(out.value);
  out.degenerate = theta_min == -1;
  return out;
}

DelsarteBound delsarte_bound(const IntersectionArray& array, const SpectrumReport& report) {
  const Root& theta = report.theta_min();
  if (theta.is_exact()) return delsarte_bound(Rational(array.k()), theta.value);
  DelsarteBound out;
  out.exact = false;
  // An irrational theta_min gives an irrational bound.
  out.interval = Rational(1) + Rational(-1) * (Interval::point(Rational(array.k())) / theta.interval);
  out.integral = false;
  return out;
}

DelsarteBound delsarte_bound(const IntersectionArray& array) {
  return delsarte_bound(array, eigenvalues(array));
}

nlohmann::ordered_json to_json(const Root& root) {
  nlohmann::ordered_json out;
  if (root.is_exact()) {
    out["type"] = "rational";
    out["value"] = to_string(root.value);
  } else {
    out["type"] = "interval";
    out["lo"] = to_string(root.interval.lo);
    out["hi"] = to_string(root.interval.hi);
  }
  out["approx"] = approx(root.representative());
  return out;
}

nlohmann::ordered_json to_json(const Multiplicity& m) {
  nlohmann::ordered_json out;
  if (m.exact) {
    out["type"] = "rational";
    out["value"] = to_string(m.value);
  } else {
    out["type"] = "interval";
    out["lo"] = to_string(m.interval.lo);
    out["hi"] = to_string(m.interval.hi);
  }
  out["integral"] = m.integral;
  return out;
}

nlohmann::ordered_json to_json(const DelsarteBound& bound) {
  nlohmann::ordered_json out;
  if (bound.exact) {
    out["type"] = "rational";
    out["value"] = to_string(bound.value);
  } else {
    out["type"] = "interval";
    out["lo"] = to_string(bound.interval.lo);
    out["hi"] = to_string(bound.interval.hi);
  }
  out["integral"] = bound.integral;
  out["degenerate"] = bound.degenerate;
  return out;
}

nlohmann::ordered_json to_json(const SpectrumReport& report) {
  nlohmann::ordered_json out;
  auto coeffs = nlohmann::ordered_json::array();
  for (const auto& c : report.poly.coeffs) coeffs.push_back(to_json(c));
  out["char_poly"] = coeffs;
  auto roots = nlohmann::ordered_json::array();
  for (const auto& r : report.roots) roots.push_back(to_json(r));
  out["roots"] = roots;
  out["theta_min"] = to_json(report.theta_min());
  return out;
}

}  // namespace drg

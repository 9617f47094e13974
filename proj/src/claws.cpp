#include "drg/claws.hpp"

#include "drg/spectrum.hpp"

#include <algorithm>

namespace drg {

WindowResult window_condition(const IntersectionArray& array) {
  WindowResult out;
  const Integer a1 = array.a_at(1);
  out.k = array.k();
  out.lower = std::max(Rational(3), ratio(8 * (a1 + 1), 3));
  out.upper = 4 * a1 + 10 - 6 * array.c_at(2);
  out.satisfied = out.lower < Rational(out.k) && out.k < out.upper;
  return out;
}

Rational mu_bound(const IntersectionArray& array) {
  return ratio(4 * array.a_at(1) + 10 - array.k(), 6);
}

ClawVerdict ruleout(const IntersectionArray& array) {
  ClawVerdict out;
  const auto window = window_condition(array);
  out.window_satisfied = window.satisfied;
  out.lower_bound = window.lower;
  out.upper_bound = window.upper;
  out.mu_bound = mu_bound(array);

  const Integer& k = array.k();
  const Integer a1 = array.a_at(1);
  const Integer c2 = array.c_at(2);
  const auto cert = certify_minus3(array);

  const bool big_k = Rational(k) > window.lower;
  out.premises.push_back({"k > max{3, 8(a_1+1)/3}",
                          "k = " + k.get_str() + ", bound = " + to_string(window.lower), big_k});
  out.premises.push_back({"a_1 >= 1", "a_1 = " + a1.get_str(), a1 >= 1});
  out.premises.push_back({"theta_min != -3",
                          "p(-3) = " + cert.value_at_minus3.get_str() + ", roots below -3 = " +
                              std::to_string(cert.roots_below),
                          !cert.holds()});
  out.premises.push_back({"c_2 < (4a_1+10-k)/6",
                          "c_2 = " + c2.get_str() + ", bound = " + to_string(out.mu_bound),
                          Rational(c2) < out.mu_bound});

  const bool all = std::all_of(out.premises.begin(), out.premises.end(),
                               [](const Premise& p) { return p.holds; });
  out.verdict = all ? ClawVerdictKind::Nonexistent : ClawVerdictKind::Inconclusive;
  return out;
}

const std::vector<IntersectionArray>& table7_arrays() {
  static const std::vector<IntersectionArray> arrays{
      make_array({55, 36, 11}, {1, 4, 45}),
      make_array({56, 36, 9}, {1, 3, 48}),
      make_array({65, 44, 11}, {1, 4, 55}),
      make_array({81, 56, 24, 1}, {1, 3, 56, 81}),
      make_array({117, 80, 32, 1}, {1, 4, 80, 117}),
      make_array({117, 80, 30, 1}, {1, 6, 80, 117}),
      make_array({189, 128, 45, 1}, {1, 9, 128, 189}),
  };
  return arrays;
}

std::string to_string(ClawVerdictKind kind) {
  return kind == ClawVerdictKind::Nonexistent ? "nonexistent" : "inconclusive";
}

nlohmann::ordered_json to_json(const WindowResult& window) {
  nlohmann::ordered_json out;
  out["satisfied"] = window.satisfied;
  out["lower"] = to_string(window.lower);
  out["upper"] = to_json(window.upper);
  out["k"] = to_json(window.k);
  return out;
}

nlohmann::ordered_json to_json(const ClawVerdict& verdict) {
  nlohmann::ordered_json out;
  out["verdict"] = to_string(verdict.verdict);
  out["window_satisfied"] = verdict.window_satisfied;
  out["lower_bound"] = to_string(verdict.lower_bound);
  out["upper_bound"] = to_json(verdict.upper_bound);
  out["mu_bound"] = to_string(verdict.mu_bound);
  auto premises = nlohmann::ordered_json::array();
  for (const auto& p : verdict.premises) {
    premises.push_back({{"name", p.name}, {"value", p.value}, {"holds", p.holds}});
  }
  out["premises"] = premises;
  return out;
}

}  // namespace drg

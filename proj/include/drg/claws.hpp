#pragma once

#include "drg/arrays.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace drg {

/// max{3, 8(a_1+1)/3} < k < 4a_1 + 10 - 6c_2, compared exactly.
struct WindowResult {
  bool satisfied = false;
  Rational lower;
  Integer upper;
  Integer k;
};

WindowResult window_condition(const IntersectionArray& array);

/// (4a_1 + 10 - k)/6: a graph containing a 4-claw has c_2 at least this.
Rational mu_bound(const IntersectionArray& array);

struct Premise {
  std::string name;
  std::string value;
  bool holds = false;
};

enum class ClawVerdictKind { Nonexistent, Inconclusive };

struct ClawVerdict {
  bool window_satisfied = false;
  Rational lower_bound;
  Integer upper_bound;
  Rational mu_bound;
  ClawVerdictKind verdict = ClawVerdictKind::Inconclusive;
  /// k > max{3, 8(a_1+1)/3}; a_1 >= 1; theta_min != -3; c_2 < mu_bound.
  std::vector<Premise> premises;
};

/// Nonexistent iff every premise holds: such a graph would have no 4-claw
/// unless geometric with theta_min = -3 (impossible here), so it has one,
/// and then c_2 would have to reach mu_bound.
ClawVerdict ruleout(const IntersectionArray& array);

/// The seven arrays excluded by the 4-claw argument, in order (i)..(vii).
const std::vector<IntersectionArray>& table7_arrays();

std::string to_string(ClawVerdictKind kind);

nlohmann::ordered_json to_json(const WindowResult& window);
nlohmann::ordered_json to_json(const ClawVerdict& verdict);

}  // namespace drg

#pragma once

#include "drg/arrays.hpp"
#include "drg/claws.hpp"

#include <json.hpp>

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace drg {

enum class Theorem { Gdrg, Maincor };

using FamilyParams = std::vector<std::pair<std::string, long>>;

/// One matched or generated instance of a classification case.
struct FamilyCase {
  Theorem theorem = Theorem::Gdrg;
  std::string label;  // e.g. "gdrg-viii", "maincor-vi"
  FamilyParams params;
  std::string name;  // named graph, when the case is a finite list entry
  IntersectionArray array;

  long param(const std::string& key) const;
  friend bool operator==(const FamilyCase&, const FamilyCase&) = default;
};

/// All case labels in theorem order: gdrg-i..gdrg-xii, maincor-i..maincor-xi.
const std::vector<std::string>& case_labels();

/// Parameter names each case expects, in order.
const std::vector<std::string>& case_parameters(const std::string& label);

struct KnownArray {
  std::string name;
  IntersectionArray array;
};

/// The eight cubic arrays (k = 3) in a fixed order.
const std::vector<KnownArray>& cubic_table();

/// Generates the array of a case from its parameters. Besides the case
/// labels, "gen2Dgon" (params D, s, t) produces the order-(s,t) generalized
/// 2D-gon template. For "gdrg-i" the parameter is "index" into cubic_table().
/// Throws InputError("ParamOutOfRange") or InputError("UnknownCase").
FamilyCase gen_family(const std::string& label, const std::map<std::string, long>& params);

/// Every gdrg case whose template reproduces the array with in-range
/// parameters. Empty when the smallest eigenvalue is not -3.
std::vector<FamilyCase> classify_gdrg(const IntersectionArray& array);

enum class MaincorStatus { NotInWindow, Matched, ClassificationGap };

struct MaincorResult {
  MaincorStatus status = MaincorStatus::NotInWindow;
  WindowResult window;
  std::vector<FamilyCase> cases;
};

MaincorResult classify_maincor(const IntersectionArray& array);

struct EnumerationLimits {
  long max_k = 3;
  /// Diameter cap for the templates whose head h is unbounded.
  int max_d = 8;
};

/// Every in-range instance with k <= max_k (and D <= max_d), in case order
/// then lexicographic parameter order. Each instance is checked with the
/// tau/psi round trip; a failure there throws AnomalyError.
std::vector<FamilyCase> enumerate_families(const EnumerationLimits& limits,
                                           const std::vector<std::string>& labels = {});

std::string to_string(Theorem theorem);
std::string to_string(MaincorStatus status);

nlohmann::ordered_json to_json(const FamilyCase& fc);
nlohmann::ordered_json to_json(const MaincorResult& result);

}  // namespace drg

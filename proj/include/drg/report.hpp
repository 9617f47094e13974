#pragma once

#include "drg/arrays.hpp"
#include "drg/classify.hpp"
#include "drg/graphs.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace drg {

/// A machine-readable result plus, when something contradicted a theorem,
/// the anomaly that should turn into exit code 3.
struct Report {
  nlohmann::ordered_json body;
  std::optional<std::string> anomaly;
};

struct AnalyzeOptions {
  bool timing = false;
};

/// derive -> spectrum -> geometry -> claws -> classify. Stage failures that
/// are properties of the input (non-integral shells, inconsistent geometry)
/// are recorded in the report. An in-window array with theta_min = -3,
/// consistent geometry, satisfied bounds and integral multiplicities that
/// matches no case is an anomaly.
Report analyze(const IntersectionArray& array, const AnalyzeOptions& options = {});

/// Rule-out rows for the seven table arrays; any row that is not
/// Nonexistent is an anomaly.
Report ruleout_table7();

/// Single-array rule-out verdict.
Report ruleout_report(const IntersectionArray& array);

/// gdrg matches and the maincor verdict.
Report classify_report(const IntersectionArray& array);

/// Family instances with k <= max_k.
Report families_report(const EnumerationLimits& limits, const std::vector<std::string>& labels);

/// check_drg, find_claw(4), delsarte_cover, verify_lines, local_check and
/// classification for a concrete graph.
Report verify_graph(const Graph& g);

/// Indented "key: value" rendering of a report body.
std::string render_text(const nlohmann::ordered_json& body);

}  // namespace drg

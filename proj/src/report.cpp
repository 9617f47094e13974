#include "drg/report.hpp"

#include "drg/claws.hpp"
#include "drg/geometry.hpp"
#include "drg/spectrum.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

namespace drg {

namespace {

using Json = nlohmann::ordered_json;

Json error_json(const Error& e) { return {{"error", e.kind()}, {"message", e.what()}}; }

class Stopwatch {
 public:
  Stopwatch(bool enabled, Json& sink) : enabled_(enabled), sink_(sink) {}

  template <typename Fn>
  void stage(const std::string& name, Fn&& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    if (enabled_) {
      const std::chrono::duration<double, std::milli> spent = std::chrono::steady_clock::now() - start;
      sink_[name] = spent.count();
    }
  }

 private:
  bool enabled_;
  Json& sink_;
};

Json cases_json(const std::vector<FamilyCase>& cases) {
  Json out = Json::array();
  for (const auto& fc : cases) out.push_back(to_json(fc));
  return out;
}

Json ruleout_row(const IntersectionArray& array) {
  Json row;
  row["array"] = format(array);
  const auto verdict = ruleout(array);
  const Json fields = to_json(verdict);
  for (const auto& [key, value] : fields.items()) row[key] = value;
  return row;
}

Json classification_json(const IntersectionArray& array) {
  Json out;
  out["gdrg"] = cases_json(classify_gdrg(array));
  out["maincor"] = to_json(classify_maincor(array));
  return out;
}

}  // namespace

Report analyze(const IntersectionArray& array, const AnalyzeOptions& options) {
  Report report;
  Json& body = report.body;
  Json timing = Json::object();
  Stopwatch watch(options.timing, timing);

  body["input"] = format(array);
  body["array"] = to_json(array);

  watch.stage("derive", [&] {
    try {
      body["derived"] = to_json(derive(array));
    } catch (const InfeasibleError& e) {
      body["derived"] = error_json(e);
    }
  });

  std::optional<SpectrumReport> spectrum;
  bool integral_multiplicities = false;
  watch.stage("spectrum", [&] {
    try {
      spectrum = eigenvalues(array);
      Json out = to_json(*spectrum);
      const auto cert = certify_minus3(array);
      out["theta_min_is_minus3"] = cert.holds();
      const auto mults = compute_multiplicities(array, *spectrum);
      Json list = Json::array();
      integral_multiplicities = true;
      for (const auto& m : mults) {
        list.push_back(to_json(m));
        integral_multiplicities = integral_multiplicities && m.integral;
      }
      out["multiplicities"] = list;
      out["delsarte_bound"] = to_json(delsarte_bound(array, *spectrum));
      body["spectrum"] = out;
    } catch (const InfeasibleError& e) {
      body["spectrum"] = error_json(e);
    }
  });

  std::optional<GeometricParams> geometry;
  bool bounds_ok = false;
  watch.stage("geometry", [&] {
    try {
      geometry = solve_tau_psi(array);
      Json out = to_json(*geometry);
      Json violations = Json::array();
      for (const auto& v : check_bounds(*geometry, array)) violations.push_back(to_json(v));
      bounds_ok = violations.empty();
      out["bound_violations"] = violations;
      try {
        out["local_structure"] = to_string(local_structure_kind(*geometry, array));
      } catch (const GeometryInconsistent& e) {
        out["local_structure"] = error_json(e);
      }
      body["geometry"] = out;
    } catch (const GeometryInconsistent& e) {
      body["geometry"] = to_json(e);
    }
  });

  WindowResult window;
  watch.stage("claws", [&] {
    window = window_condition(array);
    body["window"] = to_json(window);
    const auto verdict = ruleout(array);
    body["ruleout"] = to_json(verdict);
  });

  watch.stage("classify", [&] {
    Json out;
    out["gdrg"] = cases_json(classify_gdrg(array));
    const auto maincor = classify_maincor(array);
    out["maincor"] = to_json(maincor);
    if (maincor.status == MaincorStatus::ClassificationGap) {
      const bool minus3 = certify_minus3(array).holds();
      // Only a fully feasible geometric candidate contradicts the theorem.
      const bool candidate = minus3 && geometry && bounds_ok && integral_multiplicities;
      out["gap_excluded_by"] = !minus3              ? "theta_min != -3"
                               : !geometry          ? "geometric parameters inconsistent"
                               : !bounds_ok         ? "geometric bounds violated"
                               : !integral_multiplicities ? "non-integral multiplicities"
                                                          : "none";
      if (candidate) {
        report.anomaly = "ClassificationGap: " + format(array) +
                         " is in the window, geometric with theta_min = -3 and matches no case";
      }
    }
    body["classification"] = out;
  });

  if (options.timing) body["timing_ms"] = timing;
  return report;
}

Report ruleout_table7() {
  Report report;
  report.body = Json::array();
  const char* labels[] = {"i", "ii", "iii", "iv", "v", "vi", "vii"};
  int index = 0;
  for (const auto& array : table7_arrays()) {
    Json row;
    row["row"] = labels[index++];
    const Json fields = ruleout_row(array);
    for (const auto& [key, value] : fields.items()) row[key] = value;
    if (row["verdict"] != to_string(ClawVerdictKind::Nonexistent)) {
      report.anomaly = "table row " + row["row"].get<std::string>() + " (" + format(array) +
                       ") is not ruled out";
    }
    report.body.push_back(row);
  }
  return report;
}

Report ruleout_report(const IntersectionArray& array) {
  return Report{ruleout_row(array), std::nullopt};
}

Report classify_report(const IntersectionArray& array) {
  Json body;
  body["array"] = format(array);
  body["theta_min_is_minus3"] = certify_minus3(array).holds();
  const Json fields = classification_json(array);
  for (const auto& [key, value] : fields.items()) body[key] = value;
  return Report{body, std::nullopt};
}

Report families_report(const EnumerationLimits& limits, const std::vector<std::string>& labels) {
  Json body = Json::array();
  for (const auto& fc : enumerate_families(limits, labels)) body.push_back(to_json(fc));
  return Report{body, std::nullopt};
}

Report verify_graph(const Graph& g) {
  Report report;
  Json& body = report.body;
  body["vertices"] = g.order();
  body["edges"] = g.edge_count();

  std::optional<IntersectionArray> array;
  try {
    array = check_drg(g);
    body["array"] = format(*array);
  } catch (const Error& e) {
    if (dynamic_cast<const AnomalyError*>(&e)) throw;
    body["array"] = error_json(e);
  }

  if (array) {
    try {
      body["theta_min"] = to_json(eigenvalues(*array).theta_min());
    } catch (const InfeasibleError& e) {
      body["theta_min"] = error_json(e);
    }
  } else {
    body["theta_min"] = nullptr;
  }

  const auto claw = find_claw(g, 4);
  body["claw4"] = claw ? to_json(*claw) : Json(nullptr);

  if (array) {
    try {
      body["cover"] = to_json(delsarte_cover(g, *array));
    } catch (const InfeasibleError& e) {
      body["cover"] = error_json(e);
    }
    try {
      body["lines"] = to_json(verify_lines(g, *array));
    } catch (const InfeasibleError& e) {
      body["lines"] = error_json(e);
    } catch (const InputError& e) {
      body["lines"] = error_json(e);
    }
  } else {
    body["cover"] = nullptr;
    body["lines"] = nullptr;
  }

  body["local"] = to_json(local_check(g));
  body["classification"] = array ? classification_json(*array) : Json(nullptr);
  return report;
}

namespace {

bool scalar_list(const Json& value) {
  return value.is_array() && std::all_of(value.begin(), value.end(),
                                         [](const Json& item) { return !item.is_structured(); });
}

void render(std::ostringstream& out, const Json& value, int indent) {
  const std::string pad(indent * 2, ' ');
  if (value.is_object()) {
    for (const auto& [key, item] : value.items()) {
      if (item.is_structured() && !item.empty() && !scalar_list(item)) {
        out << pad << key << ":\n";
        render(out, item, indent + 1);
      } else {
        out << pad << key << ": " << (item.is_string() ? item.get<std::string>() : item.dump())
            << '\n';
      }
    }
  } else if (value.is_array()) {
    if (scalar_list(value)) {
      out << pad << value.dump() << '\n';
      return;
    }
    for (const auto& item : value) {
      out << pad << "-\n";
      render(out, item, indent + 1);
    }
  } else {
    out << pad << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
  }
}

}  // namespace

std::string render_text(const Json& body) {
  std::ostringstream out;
  render(out, body, 0);
  return out.str();
}

}  // namespace drg

#include "drg/classify.hpp"

#include "drg/errors.hpp"
#include "drg/geometry.hpp"
#include "drg/spectrum.hpp"

#include <algorithm>
#include <optional>
#include <tuple>

namespace drg {

namespace {

using Params = std::map<std::string, long>;

struct Row {
  long c;
  long a;
  long b;
};

[[noreturn]] void out_of_range(const std::string& label, const std::string& why) {
  throw InputError("ParamOutOfRange", label + ": " + why);
}

/// Builds an array from its (c_i, a_i, b_i) rows, i = 1..D.
IntersectionArray from_rows(long k, const std::vector<Row>& rows) {
  std::vector<Integer> b{Integer(k)};
  std::vector<Integer> c;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].c + rows[i].a + rows[i].b != k) {
      throw AnomalyError("RowSumMismatch", "template row " + std::to_string(i + 1) +
                                               " does not sum to k = " + std::to_string(k));
    }
    c.emplace_back(rows[i].c);
    if (i + 1 < rows.size()) b.emplace_back(rows[i].b);
  }
  return IntersectionArray(std::move(b), std::move(c));
}

IntersectionArray steiner(long alpha) {
  return from_rows(3 * alpha - 9, {{1, alpha, 2 * alpha - 10}, {9, 3 * alpha - 18, 0}});
}

IntersectionArray latin_square(long alpha) {
  return from_rows(3 * alpha - 3, {{1, alpha, 2 * alpha - 4}, {6, 3 * alpha - 9, 0}});
}

IntersectionArray generalized_polygon(long d, long s, long t) {
  const long k = s * (t + 1);
  std::vector<Row> rows(d - 1, Row{1, s - 1, s * t});
  rows.push_back({t + 1, k - t - 1, 0});
  return from_rows(k, rows);
}

IntersectionArray johnson3(long alpha) {
  // J(alpha, 3): b_i = (3-i)(alpha-3-i), c_i = i^2.
  const long k = 3 * (alpha - 3);
  return from_rows(k, {{1, alpha - 2, 2 * (alpha - 4)},
                       {4, 2 * alpha - 8, alpha - 5},
                       {9, 3 * alpha - 18, 0}});
}

IntersectionArray case_viii(long alpha, long beta) {
  return from_rows(3 * alpha + 3, {{1, alpha, 2 * alpha + 2},
                                   {2, 2 * alpha + beta - 1, alpha + 2 - beta},
                                   {3 * beta, 3 * alpha - 3 * beta + 3, 0}});
}

std::vector<Row> head_rows(long h, long alpha) {
  return std::vector<Row>(h, Row{1, alpha, 2 * alpha + 2});
}

IntersectionArray case_x(long h, long alpha, long beta) {
  auto rows = head_rows(h, alpha);
  rows.push_back({2, 2 * alpha + beta - 1, alpha - beta + 2});
  rows.push_back({3 * beta, 3 * alpha - 3 * beta + 3, 0});
  return from_rows(3 * alpha + 3, rows);
}

IntersectionArray case_xi(long h, long alpha, long beta) {
  auto rows = head_rows(h, alpha);
  rows.push_back({1, alpha + 2 * beta - 2, 2 * alpha - 2 * beta + 4});
  rows.push_back({3 * beta, 3 * alpha - 3 * beta + 3, 0});
  return from_rows(3 * alpha + 3, rows);
}

IntersectionArray case_xii(long h, long d, long alpha, long beta) {
  auto rows = head_rows(h, alpha);
  rows.push_back({1, alpha + 2, 2 * alpha});
  // Rows h+2..D-2; empty when D = h+3.
  for (long i = h + 2; i <= d - 2; ++i) rows.push_back({4, 2 * alpha - 1, alpha});
  rows.push_back({4, 2 * alpha + beta - 3, alpha - beta + 2});
  rows.push_back({3 * beta, 3 * alpha - 3 * beta + 3, 0});
  return from_rows(3 * alpha + 3, rows);
}

const IntersectionArray& hexagon_2_2() {
  static const auto array = make_array({6, 4, 4}, {1, 1, 3});
  return array;
}
const IntersectionArray& hexagon_8_2() {
  static const auto array = make_array({24, 16, 16}, {1, 1, 3});
  return array;
}
const IntersectionArray& octagon_4_2() {
  static const auto array = make_array({12, 8, 8, 8}, {1, 1, 1, 3});
  return array;
}
const IntersectionArray& halved_foster() {
  static const auto array = make_array({6, 4, 2, 1}, {1, 1, 4, 6});
  return array;
}

/// One classification case: parameter names, range check, generator, and
/// extraction of candidate parameters from an array.
struct CaseSpec {
  std::string label;
  Theorem theorem;
  std::vector<std::string> params;
  std::function<std::optional<std::string>(const Params&)> range_error;
  std::function<IntersectionArray(const Params&)> generate;
  std::function<std::optional<Params>(const IntersectionArray&)> extract;
  std::function<void(const EnumerationLimits&, const std::function<void(const Params&)>&)>
      enumerate;
};

std::optional<std::string> fail_if(bool bad, const std::string& why) {
  return bad ? std::optional<std::string>(why) : std::nullopt;
}

bool steiner_admissible(long alpha) { return alpha % 3 == 0 || alpha % 3 == 2; }

std::optional<long> small(const Integer& value) {
  if (!value.fits_slong_p()) return std::nullopt;
  return value.get_si();
}

std::optional<Params> extract_alpha_a1(const IntersectionArray& arr, int diameter) {
  if (arr.diameter() != diameter) return std::nullopt;
  auto a1 = small(arr.a_at(1));
  if (!a1) return std::nullopt;
  return Params{{"alpha", *a1}};
}

std::optional<Params> extract_head_family(const IntersectionArray& arr, bool with_d) {
  auto a1 = small(arr.a_at(1));
  const Integer cd = arr.c_at(arr.diameter());
  if (!a1 || cd % 3 != 0) return std::nullopt;
  Params p{{"h", head(arr)}, {"alpha", *a1}, {"beta", small(cd / 3).value_or(0)}};
  if (with_d) p["D"] = arr.diameter();
  return p;
}

std::optional<Params> extract_fixed(const IntersectionArray& arr, const IntersectionArray& ref) {
  if (arr == ref) return Params{};
  return std::nullopt;
}

void enumerate_fixed(const EnumerationLimits& lim, const IntersectionArray& ref,
                     const std::function<void(const Params&)>& emit) {
  if (ref.k() <= lim.max_k && ref.diameter() <= lim.max_d) emit({});
}

CaseSpec steiner_case(std::string label, Theorem thm, long min_alpha) {
  return {
      label, thm, {"alpha"},
      [label, min_alpha](const Params& p) {
        const long alpha = p.at("alpha");
        if (alpha < min_alpha) return fail_if(true, "alpha >= " + std::to_string(min_alpha));
        return fail_if(!steiner_admissible(alpha), "alpha = 0 or 2 (mod 3)");
      },
      [](const Params& p) { return steiner(p.at("alpha")); },
      [](const IntersectionArray& arr) { return extract_alpha_a1(arr, 2); },
      [min_alpha](const EnumerationLimits& lim, const std::function<void(const Params&)>& emit) {
        if (lim.max_d < 2) return;
        for (long alpha = min_alpha; 3 * alpha - 9 <= lim.max_k; ++alpha) {
          if (steiner_admissible(alpha)) emit({{"alpha", alpha}});
        }
      }};
}

CaseSpec latin_case(std::string label, Theorem thm, long min_alpha) {
  return {label, thm, {"alpha"},
          [min_alpha](const Params& p) {
            return fail_if(p.at("alpha") < min_alpha, "alpha >= " + std::to_string(min_alpha));
          },
          [](const Params& p) { return latin_square(p.at("alpha")); },
          [](const IntersectionArray& arr) { return extract_alpha_a1(arr, 2); },
          [min_alpha](const EnumerationLimits& lim,
                      const std::function<void(const Params&)>& emit) {
            if (lim.max_d < 2) return;
            for (long alpha = min_alpha; 3 * alpha - 3 <= lim.max_k; ++alpha) {
              emit({{"alpha", alpha}});
            }
          }};
}

CaseSpec johnson_case(std::string label, Theorem thm, long min_alpha) {
  return {label, thm, {"alpha"},
          [min_alpha](const Params& p) {
            return fail_if(p.at("alpha") < min_alpha, "alpha >= " + std::to_string(min_alpha));
          },
          [](const Params& p) { return johnson3(p.at("alpha")); },
          [](const IntersectionArray& arr) -> std::optional<Params> {
            if (arr.diameter() != 3 || arr.k() % 3 != 0) return std::nullopt;
            auto k = small(arr.k());
            if (!k) return std::nullopt;
            return Params{{"alpha", *k / 3 + 3}};
          },
          [min_alpha](const EnumerationLimits& lim,
                      const std::function<void(const Params&)>& emit) {
            if (lim.max_d < 3) return;
            for (long alpha = min_alpha; 3 * alpha - 9 <= lim.max_k; ++alpha) {
              emit({{"alpha", alpha}});
            }
          }};
}

CaseSpec viii_case(std::string label, Theorem thm, long min_alpha) {
  return {label, thm, {"alpha", "beta"},
          [min_alpha](const Params& p) {
            const long alpha = p.at("alpha");
            const long beta = p.at("beta");
            if (alpha < min_alpha) return fail_if(true, "alpha >= " + std::to_string(min_alpha));
            return fail_if(!(alpha >= beta && beta >= 1), "alpha >= beta >= 1");
          },
          [](const Params& p) { return case_viii(p.at("alpha"), p.at("beta")); },
          [](const IntersectionArray& arr) -> std::optional<Params> {
            if (arr.diameter() != 3 || arr.k() % 3 != 0 || arr.c_at(3) % 3 != 0) {
              return std::nullopt;
            }
            auto k = small(arr.k());
            auto c3 = small(arr.c_at(3));
            if (!k || !c3) return std::nullopt;
            return Params{{"alpha", (*k - 3) / 3}, {"beta", *c3 / 3}};
          },
          [min_alpha](const EnumerationLimits& lim,
                      const std::function<void(const Params&)>& emit) {
            if (lim.max_d < 3) return;
            for (long alpha = min_alpha; 3 * alpha + 3 <= lim.max_k; ++alpha) {
              for (long beta = 1; beta <= alpha; ++beta) emit({{"alpha", alpha}, {"beta", beta}});
            }
          }};
}

CaseSpec x_case(std::string label, Theorem thm) {
  return {label, thm, {"h", "alpha", "beta"},
          [](const Params& p) {
            if (p.at("h") < 2) return fail_if(true, "D = h+2 >= 4");
            return fail_if(!(p.at("alpha") >= p.at("beta") && p.at("beta") >= 2),
                           "alpha >= beta >= 2");
          },
          [](const Params& p) { return case_x(p.at("h"), p.at("alpha"), p.at("beta")); },
          [](const IntersectionArray& arr) -> std::optional<Params> {
            auto p = extract_head_family(arr, false);
            if (!p || arr.diameter() != p->at("h") + 2) return std::nullopt;
            return p;
          },
          [](const EnumerationLimits& lim, const std::function<void(const Params&)>& emit) {
            for (long h = 2; h + 2 <= lim.max_d; ++h) {
              for (long alpha = 2; 3 * alpha + 3 <= lim.max_k; ++alpha) {
                for (long beta = 2; beta <= alpha; ++beta) {
                  emit({{"h", h}, {"alpha", alpha}, {"beta", beta}});
                }
              }
            }
          }};
}

CaseSpec xi_case(std::string label, Theorem thm) {
  return {label, thm, {"h", "alpha", "beta"},
          [](const Params& p) {
            if (p.at("h") < 1) return fail_if(true, "D = h+2 >= 3");
            return fail_if(!(p.at("alpha") >= p.at("beta") && p.at("beta") >= 2),
                           "alpha >= beta >= 2");
          },
          [](const Params& p) { return case_xi(p.at("h"), p.at("alpha"), p.at("beta")); },
          [](const IntersectionArray& arr) -> std::optional<Params> {
            auto p = extract_head_family(arr, false);
            if (!p || arr.diameter() != p->at("h") + 2) return std::nullopt;
            return p;
          },
          [](const EnumerationLimits& lim, const std::function<void(const Params&)>& emit) {
            for (long h = 1; h + 2 <= lim.max_d; ++h) {
              for (long alpha = 2; 3 * alpha + 3 <= lim.max_k; ++alpha) {
                for (long beta = 2; beta <= alpha; ++beta) {
                  emit({{"h", h}, {"alpha", alpha}, {"beta", beta}});
                }
              }
            }
          }};
}

CaseSpec xii_case(std::string label, Theorem thm) {
  return {label, thm, {"h", "D", "alpha", "beta"},
          [](const Params& p) {
            if (p.at("h") < 1) return fail_if(true, "h >= 1");
            if (p.at("D") < p.at("h") + 3) return fail_if(true, "D >= h+3");
            if (p.at("beta") != 2 && p.at("beta") != 3) return fail_if(true, "beta in {2,3}");
            return fail_if(p.at("alpha") < p.at("beta"), "alpha >= beta");
          },
          [](const Params& p) {
            return case_xii(p.at("h"), p.at("D"), p.at("alpha"), p.at("beta"));
          },
          [](const IntersectionArray& arr) { return extract_head_family(arr, true); },
          [](const EnumerationLimits& lim, const std::function<void(const Params&)>& emit) {
            for (long h = 1; h + 3 <= lim.max_d; ++h) {
              for (long d = h + 3; d <= lim.max_d; ++d) {
                for (long alpha = 2; 3 * alpha + 3 <= lim.max_k; ++alpha) {
                  for (long beta = 2; beta <= std::min(3L, alpha); ++beta) {
                    emit({{"h", h}, {"D", d}, {"alpha", alpha}, {"beta", beta}});
                  }
                }
              }
            }
          }};
}

CaseSpec fixed_case(std::string label, Theorem thm, const IntersectionArray& ref) {
  return {label, thm, {},
          [](const Params&) { return std::optional<std::string>(); },
          [&ref](const Params&) { return ref; },
          [&ref](const IntersectionArray& arr) { return extract_fixed(arr, ref); },
          [&ref](const EnumerationLimits& lim, const std::function<void(const Params&)>& emit) {
            enumerate_fixed(lim, ref, emit);
          }};
}

CaseSpec cubic_case() {
  return {"gdrg-i", Theorem::Gdrg, {"index"},
          [](const Params& p) {
            const long index = p.at("index");
            return fail_if(index < 0 || index >= static_cast<long>(cubic_table().size()),
                           "index in 0.." + std::to_string(cubic_table().size() - 1));
          },
          [](const Params& p) { return cubic_table().at(p.at("index")).array; },
          [](const IntersectionArray& arr) -> std::optional<Params> {
            const auto& table = cubic_table();
            for (std::size_t i = 0; i < table.size(); ++i) {
              if (table[i].array == arr) return Params{{"index", static_cast<long>(i)}};
            }
            return std::nullopt;
          },
          [](const EnumerationLimits& lim, const std::function<void(const Params&)>& emit) {
            const auto& table = cubic_table();
            for (std::size_t i = 0; i < table.size(); ++i) {
              if (table[i].array.k() <= lim.max_k && table[i].array.diameter() <= lim.max_d) {
                emit({{"index", static_cast<long>(i)}});
              }
            }
          }};
}

CaseSpec polygon_case() {
  static const std::vector<std::pair<long, long>> allowed{{2, 2}, {2, 4}, {3, 8}};
  return {"gdrg-iv", Theorem::Gdrg, {"D", "s"},
          [](const Params& p) {
            const std::pair<long, long> key{p.at("D"), p.at("s")};
            return fail_if(std::find(allowed.begin(), allowed.end(), key) == allowed.end(),
                           "(D,s) in {(2,2),(2,4),(3,8)}");
          },
          [](const Params& p) { return generalized_polygon(p.at("D"), p.at("s"), 2); },
          [](const IntersectionArray& arr) -> std::optional<Params> {
            if (arr.k() % 3 != 0) return std::nullopt;
            auto k = small(arr.k());
            if (!k) return std::nullopt;
            return Params{{"D", arr.diameter()}, {"s", *k / 3}};
          },
          [](const EnumerationLimits& lim, const std::function<void(const Params&)>& emit) {
            for (const auto& [d, s] : allowed) {
              if (3 * s <= lim.max_k && d <= lim.max_d) emit({{"D", d}, {"s", s}});
            }
          }};
}

const std::vector<CaseSpec>& all_cases() {
  static const std::vector<CaseSpec> cases = [] {
    std::vector<CaseSpec> out;
    out.push_back(cubic_case());
    out.push_back(steiner_case("gdrg-ii", Theorem::Gdrg, 6));
    out.push_back(latin_case("gdrg-iii", Theorem::Gdrg, 4));
    out.push_back(polygon_case());
    out.push_back(fixed_case("gdrg-v", Theorem::Gdrg, hexagon_2_2()));
    out.push_back(fixed_case("gdrg-vi", Theorem::Gdrg, octagon_4_2()));
    out.push_back(johnson_case("gdrg-vii", Theorem::Gdrg, 6));
    out.push_back(viii_case("gdrg-viii", Theorem::Gdrg, 1));
    out.push_back(fixed_case("gdrg-ix", Theorem::Gdrg, halved_foster()));
    out.push_back(x_case("gdrg-x", Theorem::Gdrg));
    out.push_back(xi_case("gdrg-xi", Theorem::Gdrg));
    out.push_back(xii_case("gdrg-xii", Theorem::Gdrg));
    out.push_back(steiner_case("maincor-i", Theorem::Maincor, 36));
    out.push_back(latin_case("maincor-ii", Theorem::Maincor, 24));
    out.push_back(fixed_case("maincor-iii", Theorem::Maincor, hexagon_8_2()));
    out.push_back(fixed_case("maincor-iv", Theorem::Maincor, hexagon_2_2()));
    out.push_back(fixed_case("maincor-v", Theorem::Maincor, octagon_4_2()));
    out.push_back(johnson_case("maincor-vi", Theorem::Maincor, 20));
    out.push_back(viii_case("maincor-vii", Theorem::Maincor, 6));
    out.push_back(fixed_case("maincor-viii", Theorem::Maincor, halved_foster()));
    out.push_back(x_case("maincor-ix", Theorem::Maincor));
    out.push_back(xi_case("maincor-x", Theorem::Maincor));
    out.push_back(xii_case("maincor-xi", Theorem::Maincor));
    return out;
  }();
  return cases;
}

const CaseSpec& find_case(const std::string& label) {
  for (const auto& spec : all_cases()) {
    if (spec.label == label) return spec;
  }
  throw InputError("UnknownCase", "unknown family case '" + label + "'");
}

FamilyCase make_case(const CaseSpec& spec, const Params& params) {
  FamilyParams ordered;
  for (const auto& name : spec.params) ordered.emplace_back(name, params.at(name));
  FamilyCase out{spec.theorem, spec.label, std::move(ordered), "", spec.generate(params)};
  if (spec.label == "gdrg-i") out.name = cubic_table().at(params.at("index")).name;
  return out;
}

std::vector<FamilyCase> match(const IntersectionArray& array, Theorem theorem) {
  std::vector<FamilyCase> out;
  for (const auto& spec : all_cases()) {
    if (spec.theorem != theorem) continue;
    const auto params = spec.extract(array);
    if (!params || spec.range_error(*params)) continue;
    try {
      auto candidate = make_case(spec, *params);
      if (candidate.array == array) out.push_back(std::move(candidate));
    } catch (const InputError&) {
      // The template produced no valid array for these parameters.
    }
  }
  return out;
}

}  // namespace

long FamilyCase::param(const std::string& key) const {
  for (const auto& [name, value] : params) {
    if (name == key) return value;
  }
  throw InputError("UnknownParameter", label + " has no parameter '" + key + "'");
}

const std::vector<std::string>& case_labels() {
  static const std::vector<std::string> labels = [] {
    std::vector<std::string> out;
    for (const auto& spec : all_cases()) out.push_back(spec.label);
    return out;
  }();
  return labels;
}

const std::vector<std::string>& case_parameters(const std::string& label) {
  return find_case(label).params;
}

const std::vector<KnownArray>& cubic_table() {
  static const std::vector<KnownArray> table{
      {"K33", make_array({3, 2}, {1, 3})},
      {"H(3,2)", make_array({3, 2, 1}, {1, 2, 3})},
      {"Heawood", make_array({3, 2, 2}, {1, 1, 3})},
      {"Pappus", make_array({3, 2, 2, 1}, {1, 1, 2, 3})},
      {"Desargues", make_array({3, 2, 2, 1, 1}, {1, 1, 2, 2, 3})},
      {"Tutte 8-cage", make_array({3, 2, 2, 2}, {1, 1, 1, 3})},
      {"Tutte 12-cage", make_array({3, 2, 2, 2, 2, 2}, {1, 1, 1, 1, 1, 3})},
      {"Foster", make_array({3, 2, 2, 2, 2, 1, 1, 1}, {1, 1, 1, 1, 2, 2, 2, 3})},
  };
  return table;
}

FamilyCase gen_family(const std::string& label, const std::map<std::string, long>& params) {
  if (label == "gen2Dgon") {
    for (const char* key : {"D", "s", "t"}) {
      if (!params.count(key)) out_of_range(label, std::string("missing parameter ") + key);
    }
    const long d = params.at("D");
    const long s = params.at("s");
    const long t = params.at("t");
    if (d < 2 || s < 1 || t < 1) out_of_range(label, "D >= 2, s >= 1, t >= 1");
    return {Theorem::Gdrg, label, {{"D", d}, {"s", s}, {"t", t}}, "",
            generalized_polygon(d, s, t)};
  }
  const auto& spec = find_case(label);
  for (const auto& key : spec.params) {
    if (!params.count(key)) out_of_range(label, "missing parameter " + key);
  }
  for (const auto& [key, value] : params) {
    if (std::find(spec.params.begin(), spec.params.end(), key) == spec.params.end()) {
      out_of_range(label, "unexpected parameter " + key);
    }
  }
  if (auto why = spec.range_error(params)) out_of_range(label, "requires " + *why);
  return make_case(spec, params);
}

std::vector<FamilyCase> classify_gdrg(const IntersectionArray& array) {
  if (!is_theta_min_minus3(array)) return {};
  return match(array, Theorem::Gdrg);
}

MaincorResult classify_maincor(const IntersectionArray& array) {
  MaincorResult out;
  out.window = window_condition(array);
  if (!out.window.satisfied) {
    out.status = MaincorStatus::NotInWindow;
    return out;
  }
  out.cases = match(array, Theorem::Maincor);
  out.status = out.cases.empty() ? MaincorStatus::ClassificationGap : MaincorStatus::Matched;
  return out;
}

std::vector<FamilyCase> enumerate_families(const EnumerationLimits& limits,
                                           const std::vector<std::string>& labels) {
  if (limits.max_k < 3) {
    throw InputError("ParamOutOfRange", "max_k must be at least 3");
  }
  for (const auto& label : labels) find_case(label);

  std::vector<FamilyCase> out;
  for (const auto& spec : all_cases()) {
    if (!labels.empty() && std::find(labels.begin(), labels.end(), spec.label) == labels.end()) {
      continue;
    }
    std::vector<Params> grid;
    spec.enumerate(limits, [&](const Params& p) { grid.push_back(p); });
    std::vector<FamilyCase> instances;
    for (const auto& p : grid) instances.push_back(make_case(spec, p));
    std::sort(instances.begin(), instances.end(),
              [](const FamilyCase& lhs, const FamilyCase& rhs) { return lhs.params < rhs.params; });
    for (auto& fc : instances) {
      const auto gp = solve_tau_psi(fc.array);
      if (!(reconstruct_array(gp, fc.array.k()) == fc.array)) {
        throw AnomalyError("RoundTripFailure",
                           fc.label + " instance " + format(fc.array) + " fails the tau/psi round trip");
      }
      out.push_back(std::move(fc));
    }
  }
  return out;
}

std::string to_string(Theorem theorem) {
  return theorem == Theorem::Gdrg ? "gdrg" : "maincor";
}

std::string to_string(MaincorStatus status) {
  switch (status) {
    case MaincorStatus::NotInWindow: return "NotInWindow";
    case MaincorStatus::Matched: return "Matched";
    case MaincorStatus::ClassificationGap: return "ClassificationGap";
  }
  return "?";
}

nlohmann::ordered_json to_json(const FamilyCase& fc) {
  nlohmann::ordered_json out;
  out["theorem"] = to_string(fc.theorem);
  out["case"] = fc.label;
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : fc.params) params[name] = value;
  out["params"] = params;
  if (!fc.name.empty()) out["name"] = fc.name;
  out["array"] = format(fc.array);
  return out;
}

nlohmann::ordered_json to_json(const MaincorResult& result) {
  nlohmann::ordered_json out;
  out["status"] = to_string(result.status);
  out["window"] = to_json(result.window);
  auto cases = nlohmann::ordered_json::array();
  for (const auto& fc : result.cases) cases.push_back(to_json(fc));
  out["cases"] = cases;
  return out;
}

}  // namespace drg

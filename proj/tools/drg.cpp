// drg: command-line front end. Exit codes: 0 success, 2 input error,
// 3 anomaly (internal state contradicting a theorem).

#include "drg/report.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitInput = 2;
constexpr int kExitAnomaly = 3;

struct Output {
  bool json = false;
};

int emit(const drg::Report& report, const Output& output) {
  if (output.json) {
    std::cout << report.body.dump(2) << '\n';
  } else {
    std::cout << drg::render_text(report.body);
  }
  if (report.anomaly) {
    std::cerr << "anomaly: " << *report.anomaly << '\n';
    return kExitAnomaly;
  }
  return 0;
}

drg::Graph read_graph(const std::string& source) {
  if (source == "-") return drg::read_edgelist(std::cin);
  return drg::load_edgelist(source);
}

void write_graph(const drg::Graph& g, const std::string& path) {
  if (path.empty() || path == "-") {
    drg::write_edgelist(std::cout, g);
    return;
  }
  std::ofstream out(path);
  if (!out) throw drg::InputError("IoError", "cannot write '" + path + "'");
  drg::write_edgelist(out, g);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Intersection-array analysis and witness-graph verification"};
  app.require_subcommand(1);

  Output output;
  std::string array_text;
  bool no_monotonicity = false;
  auto array_options = [&] {
    drg::ArrayOptions options;
    options.enforce_monotonicity = !no_monotonicity;
    return options;
  };

  auto* analyze = app.add_subcommand("analyze", "Full pipeline report for one array");
  bool timing = false;
  analyze->add_option("array", array_text, "e.g. \"{6,4,2;1,2,3}\"")->required();
  analyze->add_flag("--json", output.json, "JSON output");
  analyze->add_flag("--no-monotonicity", no_monotonicity, "Skip the b/c monotonicity check");
  analyze->add_flag("--timing", timing, "Add per-stage wall times (not deterministic)");

  auto* ruleout = app.add_subcommand("ruleout", "4-claw rule-out verdict");
  bool table7 = false;
  ruleout->add_option("array", array_text, "Array to test");
  ruleout->add_flag("--table7", table7, "All seven table arrays; exit 3 unless each is ruled out");
  ruleout->add_flag("--json", output.json, "JSON output");

  auto* classify = app.add_subcommand("classify", "Match an array against the family templates");
  classify->add_option("array", array_text, "Array to classify")->required();
  classify->add_flag("--json", output.json, "JSON output");
  classify->add_flag("--no-monotonicity", no_monotonicity, "Skip the b/c monotonicity check");

  auto* families = app.add_subcommand("families", "Enumerate template instances");
  std::vector<std::string> labels;
  bool all = false;
  drg::EnumerationLimits limits;
  auto* case_opt = families->add_option("--case", labels, "Case label(s), e.g. gdrg-viii");
  families->add_flag("--all", all, "Every case")->excludes(case_opt);
  families->add_option("--max-k", limits.max_k, "Largest valency")->required();
  families->add_option("--max-d", limits.max_d, "Diameter cap for unbounded heads");
  families->add_flag("--json", output.json, "JSON output");

  auto* graph = app.add_subcommand("graph", "Concrete graphs (edge-list I/O)");
  graph->require_subcommand(1);
  std::string out_path;
  std::string source = "-";
  std::string kind;
  std::vector<std::string> params;
  int side = 0;
  int distance = 1;

  auto* build = graph->add_subcommand("build", "hamming d q | johnson n e | complete_bipartite a b | "
                                                "kneser_6_2 | lcf <name> | lcf <shifts> <repeats>");
  build->add_option("kind", kind, "Graph kind")->required();
  build->add_option("params", params, "Kind parameters");
  build->add_option("--out", out_path, "Output file (default stdout)");

  auto* halve = graph->add_subcommand("halve", "Halved graph of a bipartite graph");
  halve->add_option("side", side, "Bipartition class, 0 contains vertex 0")->required();
  halve->add_option("file", source, "Edge list, - for stdin");
  halve->add_option("--out", out_path, "Output file (default stdout)");

  auto* dist = graph->add_subcommand("distance", "Distance-i graph");
  dist->add_option("i", distance, "Distance")->required();
  dist->add_option("file", source, "Edge list, - for stdin");
  dist->add_option("--out", out_path, "Output file (default stdout)");

  auto* verify = graph->add_subcommand("verify", "check_drg, claws, covers, lines, classification");
  verify->add_option("file", source, "Edge list, - for stdin");
  verify->add_flag("--text", [&](std::int64_t) { output.json = false; }, "Text output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInput;
  }

  try {
    if (*analyze) {
      drg::AnalyzeOptions options;
      options.timing = timing;
      return emit(drg::analyze(drg::parse_array(array_text, array_options()), options), output);
    }
    if (*ruleout) {
      if (table7 == !array_text.empty()) {
        throw drg::InputError("BadParams", "ruleout takes either an array or --table7");
      }
      if (table7) return emit(drg::ruleout_table7(), output);
      return emit(drg::ruleout_report(drg::parse_array(array_text)), output);
    }
    if (*classify) {
      return emit(drg::classify_report(drg::parse_array(array_text, array_options())), output);
    }
    if (*families) {
      if (!all && labels.empty()) throw drg::InputError("BadParams", "families needs --case or --all");
      return emit(drg::families_report(limits, labels), output);
    }
    if (*build) {
      write_graph(drg::build(kind, params), out_path);
      return 0;
    }
    if (*halve) {
      write_graph(drg::halved_graph(read_graph(source), side), out_path);
      return 0;
    }
    if (*dist) {
      write_graph(drg::distance_graph(read_graph(source), distance), out_path);
      return 0;
    }
    if (*verify) {
      output.json = !verify->count("--text");
      return emit(drg::verify_graph(read_graph(source)), output);
    }
  } catch (const drg::AnomalyError& e) {
    std::cerr << "anomaly [" << e.kind() << "]: " << e.what() << '\n';
    return kExitAnomaly;
  } catch (const drg::Error& e) {
    std::cerr << "error [" << e.kind() << "]: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}

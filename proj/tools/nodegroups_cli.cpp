// Command-line front end: sample, extract, analyze, pipeline.
#include <CLI11.hpp>
#include <fmt/format.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "nodegroups/analysis.hpp"
#include "nodegroups/edge_list.hpp"
#include "nodegroups/extraction.hpp"
#include "nodegroups/pipeline.hpp"
#include "nodegroups/report_io.hpp"
#include "nodegroups/sampling.hpp"

namespace fs = std::filesystem;
using namespace nodegroups;

namespace {

constexpr int kExitUsage = 2;
constexpr int kExitIo = 3;
constexpr int kExitCompute = 4;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string env_name(const std::string& flag) {
  std::string out = "NODEGROUPS_";
  for (char c : flag) out += c == '-' ? '_' : static_cast<char>(std::toupper(c));
  return out;
}

template <typename T>
CLI::Option* flag_option(CLI::App* app, const std::string& names, const std::string& env,
                         T& target, const std::string& help) {
  return app->add_option(names, target, help)->envname(env_name(env))->capture_default_str();
}

struct ExtractionFlags {
  int restarts = 20;
  int null_samples = 100;
  double alpha = 0.01;
  std::uint64_t seed = 0;
  int max_groups = -1;
  unsigned threads = 1;

  void attach(CLI::App* app) {
    flag_option(app, "--restarts", "restarts", restarts, "Hill-climbing restarts per search");
    flag_option(app, "--null-samples", "null-samples", null_samples,
                "Erdos-Renyi replicas per significance test");
    flag_option(app, "--alpha", "alpha", alpha, "Significance level, in (0, 1)");
    flag_option(app, "--seed", "seed", seed, "Master random seed");
    flag_option(app, "--max-groups", "max-groups", max_groups,
                "Stop after this many groups (negative: unlimited)");
    flag_option(app, "--threads", "threads", threads, "Worker threads");
  }

  [[nodiscard]] ExtractionConfig config() const {
    ExtractionConfig cfg;
    cfg.restarts = restarts;
    cfg.null_samples = null_samples;
    cfg.alpha = alpha;
    cfg.seed = seed;
    if (max_groups >= 0) cfg.max_groups = max_groups;
    cfg.threads = threads;
    if (restarts < 1) throw UsageError("--restarts must be at least 1");
    if (null_samples < 1) throw UsageError("--null-samples must be at least 1");
    if (!(alpha > 0.0 && alpha < 1.0)) throw UsageError("--alpha must lie in (0, 1)");
    return cfg;
  }
};

void check_fraction(double fraction, const char* flag) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw UsageError(fmt::format("{} must lie in (0, 1]", flag));
  }
}

std::string effective_config(const CLI::App& app) {
  std::string out;
  std::istringstream lines(app.config_to_str(true, false));
  for (std::string line; std::getline(lines, line);) {
    if (!line.empty()) out += (out.empty() ? "" : "; ") + line;
  }
  return out;
}

// sample ---------------------------------------------------------------------

struct SampleCommand {
  std::string input;
  std::string output;
  std::string method = "rd";
  double fraction = 0.15;
  std::uint64_t seed = 0;
  bool no_symmetrize = false;
  CLI::App* app = nullptr;

  void attach(CLI::App& parent) {
    app = parent.add_subcommand("sample", "Write a degree-weighted (rd) or breadth-first (bf) sample");
    app->add_option("input", input, "Edge list")->required();
    app->add_option("-o,--output", output, "Output edge list")->required()->envname(env_name("output"));
    flag_option(app, "--method", "method", method, "rd or bf");
    flag_option(app, "--fraction", "fraction", fraction, "Share of nodes to keep, in (0, 1]");
    flag_option(app, "--seed", "seed", seed, "Random seed");
    app->add_flag("--no-symmetrize", no_symmetrize, "Count reciprocal pairs as duplicates");
  }

  int run() const {
    const auto parsed = parse_sampling_method(method);
    if (!parsed) throw UsageError("--method must be rd or bf");
    check_fraction(fraction, "--fraction");
    const auto loaded = load_edge_list(fs::path(input), LoadOptions{!no_symmetrize});
    const SamplerConfig cfg{*parsed, fraction, seed};
    const Graph sampled = sample(loaded.graph, cfg);
    write_edge_list(fs::path(output), sampled,
                    {{"tool", "nodegroups sample"},
                     {"config", effective_config(*app)},
                     {"method", std::string(to_string(cfg.method))},
                     {"fraction", fmt::format("{}", cfg.fraction)},
                     {"seed", std::to_string(cfg.seed)},
                     {"symmetrized", no_symmetrize ? "false" : "true"},
                     {"source", fs::path(input).filename().string()},
                     {"source_nodes", std::to_string(loaded.graph.node_count())},
                     {"source_links", std::to_string(loaded.graph.link_count())}});
    std::cout << fmt::format("sampled {} of {} nodes, {} links -> {}\n", sampled.node_count(),
                             loaded.graph.node_count(), sampled.link_count(), output);
    return 0;
  }
};

// extract --------------------------------------------------------------------

struct ExtractCommand {
  std::string input;
  std::string output;
  bool no_symmetrize = false;
  ExtractionFlags flags;
  CLI::App* app = nullptr;

  void attach(CLI::App& parent) {
    app = parent.add_subcommand("extract", "Extract significant node groups");
    app->add_option("input", input, "Edge list")->required();
    app->add_option("-o,--output", output, "Groups file (default <input stem>.groups.json)")
        ->envname(env_name("output"));
    app->add_flag("--no-symmetrize", no_symmetrize, "Count reciprocal pairs as duplicates");
    flags.attach(app);
  }

  int run() const {
    const auto cfg = flags.config();
    const auto loaded = load_edge_list(fs::path(input), LoadOptions{!no_symmetrize});
    const auto result = extract_all(loaded.graph, cfg);
    const fs::path out =
        output.empty() ? fs::path(input).replace_extension(".groups.json") : fs::path(output);
    const nlohmann::json meta = {
        {"source", fs::path(input).filename().string()},
        {"symmetrized", !no_symmetrize},
        {"config", effective_config(*app)},
        {"load",
         {{"self_loops", loaded.report.self_loops},
          {"duplicates", loaded.report.duplicates},
          {"reciprocal_merged", loaded.report.reciprocal_merged}}}};
    write_result(out, result, meta);
    const auto summary = summarize(result);
    std::cout << fmt::format(
        "groups: {} (communities {}, mixtures {}, modules {}); stop: {} -> {}\n",
        result.groups.size(), summary.community.count, summary.mixture.count,
        summary.module.count, result.stop.reason, out.string());
    return 0;
  }
};

// analyze --------------------------------------------------------------------

struct AnalyzeCommand {
  std::string groups;
  std::string graph;
  std::string network;
  std::string output_dir = ".";
  std::optional<double> rescale;
  std::size_t bins = 50;
  bool no_symmetrize = false;
  CLI::App* app = nullptr;

  void attach(CLI::App& parent) {
    app = parent.add_subcommand("analyze", "Summaries, coverage and histograms for a groups file");
    app->add_option("groups", groups, "Groups file written by extract")->required();
    app->add_option("--graph", graph, "Edge list the groups were extracted from")
        ->required()
        ->envname(env_name("graph"));
    flag_option(app, "--network", "network", network, "Row label (default: graph file stem)");
    app->add_option("-o,--output", output_dir, "Output directory")->envname(env_name("output"));
    app->add_option("--rescale-w", rescale, "Divide W by this sampling fraction")
        ->envname(env_name("rescale-w"));
    flag_option(app, "--bins", "bins", bins, "Histogram bins");
    app->add_flag("--no-symmetrize", no_symmetrize, "Count reciprocal pairs as duplicates");
  }

  int run() const {
    if (rescale) check_fraction(*rescale, "--rescale-w");
    if (bins < 1) throw UsageError("--bins must be at least 1");
    const auto result = read_result(fs::path(groups));
    const auto original = load_edge_list(fs::path(graph), LoadOptions{!no_symmetrize}).graph;
    const std::string name = network.empty() ? fs::path(graph).stem().string() : network;
    const auto summary = summarize(result);
    const auto cover = coverage(result, original);

    const fs::path dir(output_dir);
    fs::create_directories(dir);
    std::ostringstream summary_csv;
    write_summary_csv(summary_csv, name, summary);
    write_text_file(dir / "summary.csv", summary_csv.str());
    std::ostringstream coverage_csv;
    write_coverage_csv(coverage_csv, name, cover);
    write_text_file(dir / "coverage.csv", coverage_csv.str());

    auto ws = group_ws(result);
    if (rescale) ws = rescale_w(ws, *rescale);
    std::ostringstream tau_csv;
    write_histogram_csv(tau_csv, histogram(group_taus(result), bins, 0.0, 1.0));
    write_text_file(dir / "tau_hist.csv", tau_csv.str());
    std::ostringstream w_csv;
    write_histogram_csv(w_csv, histogram_data_range(ws, bins));
    write_text_file(dir / "w_hist.csv", w_csv.str());

    std::cout << kSummaryHeader << '\n' << name << ',' << summary_fields(summary) << '\n';
    return 0;
  }
};

// pipeline -------------------------------------------------------------------

struct PipelineCommand {
  std::string input;
  std::string output_dir;
  std::string network;
  std::vector<std::string> methods{"rd", "bf"};
  double fraction = 0.15;
  int runs = 100;
  std::size_t bins = 50;
  bool original = false;
  bool no_symmetrize = false;
  ExtractionFlags flags;
  CLI::App* app = nullptr;

  void attach(CLI::App& parent) {
    app = parent.add_subcommand("pipeline", "Repeated sampling + extraction with aggregated tables");
    app->add_option("input", input, "Edge list")->required();
    app->add_option("-o,--output", output_dir, "Output directory")
        ->required()
        ->envname(env_name("output"));
    flag_option(app, "--network", "network", network, "Row label (default: input file stem)");
    app->add_option("--method", methods, "Sampling methods (rd, bf)")
        ->envname(env_name("method"))
        ->capture_default_str();
    flag_option(app, "--fraction", "fraction", fraction, "Share of nodes per sample, in (0, 1]");
    flag_option(app, "--runs", "runs", runs, "Samples per method");
    flag_option(app, "--bins", "bins", bins, "Histogram bins");
    app->add_flag("--original", original, "Also extract groups from the full network");
    app->add_flag("--no-symmetrize", no_symmetrize, "Count reciprocal pairs as duplicates");
    flags.attach(app);
  }

  int run() const {
    PipelineConfig cfg;
    cfg.input = input;
    cfg.network = network;
    cfg.methods.clear();
    for (const auto& m : methods) {
      const auto parsed = parse_sampling_method(m);
      if (!parsed) throw UsageError("--method must be rd or bf");
      cfg.methods.push_back(*parsed);
    }
    check_fraction(fraction, "--fraction");
    if (runs < 1) throw UsageError("--runs must be at least 1");
    if (bins < 1) throw UsageError("--bins must be at least 1");
    cfg.fraction = fraction;
    cfg.runs = runs;
    cfg.histogram_bins = bins;
    cfg.extraction = flags.config();
    cfg.master_seed = flags.seed;
    cfg.threads = flags.threads;
    cfg.include_original = original;
    cfg.symmetrize = !no_symmetrize;
    cfg.output_dir = output_dir;
    const auto report = run_pipeline(cfg);
    for (const auto& m : report.methods) {
      std::cout << fmt::format("{}: {}/{} runs ok, mean groups {:.2f}, mean tau {:.3f}\n",
                               to_string(m.method), m.runs_ok, m.runs, m.summary.group_count,
                               m.summary.mean_tau);
    }
    return 0;
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Node group extraction on original and sampled networks"};
  app.require_subcommand(1);
  SampleCommand sample_cmd;
  ExtractCommand extract_cmd;
  AnalyzeCommand analyze_cmd;
  PipelineCommand pipeline_cmd;
  sample_cmd.attach(app);
  extract_cmd.attach(app);
  analyze_cmd.attach(app);
  pipeline_cmd.attach(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (sample_cmd.app->parsed()) return sample_cmd.run();
    if (extract_cmd.app->parsed()) return extract_cmd.run();
    if (analyze_cmd.app->parsed()) return analyze_cmd.run();
    if (pipeline_cmd.app->parsed()) return pipeline_cmd.run();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitIo;
  } catch (const EmptyGraphError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kExitIo;
  } catch (const fs::filesystem_error& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCompute;
  }
  return kExitUsage;
}

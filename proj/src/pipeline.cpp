#include "nodegroups/pipeline.hpp"

#include <fmt/format.h>

#include <sstream>

#include "nodegroups/edge_list.hpp"
#include "nodegroups/parallel.hpp"
#include "nodegroups/report_io.hpp"

namespace nodegroups {

void validate(const PipelineConfig& cfg) {
  if (cfg.runs < 1) throw ContractViolation("runs must be at least 1");
  if (!(cfg.fraction > 0.0 && cfg.fraction <= 1.0)) {
    throw ContractViolation("fraction must lie in (0, 1]");
  }
  if (cfg.methods.empty()) throw ContractViolation("at least one sampling method is required");
  if (cfg.histogram_bins < 1) throw ContractViolation("histogram needs at least one bin");
  validate(cfg.extraction);
}

std::uint64_t run_seed(std::uint64_t master, SamplingMethod method, int run) {
  return derive_seed(master, to_string(method), static_cast<std::uint64_t>(run));
}

namespace {

using nlohmann::json;

json pipeline_config_json(const PipelineConfig& cfg, const LoadReport& load) {
  json j;
  j["input"] = cfg.input.filename().string();
  j["network"] = cfg.network;
  json methods = json::array();
  for (auto m : cfg.methods) methods.push_back(to_string(m));
  j["methods"] = methods;
  j["fraction"] = cfg.fraction;
  j["runs"] = cfg.runs;
  j["master_seed"] = cfg.master_seed;
  j["include_original"] = cfg.include_original;
  j["symmetrize"] = cfg.symmetrize;
  j["histogram_bins"] = cfg.histogram_bins;
  j["extraction"] = config_to_json(cfg.extraction);
  j["load"] = {{"data_lines", load.data_lines},
               {"self_loops", load.self_loops},
               {"duplicates", load.duplicates},
               {"reciprocal_merged", load.reciprocal_merged}};
  return j;
}

std::string histogram_text(const Histogram& h) {
  std::ostringstream out;
  write_histogram_csv(out, h);
  return out.str();
}

void write_histograms(const std::filesystem::path& dir, const std::string& suffix,
                      const std::vector<double>& taus, const std::vector<double>& ws,
                      std::size_t bins) {
  write_text_file(dir / ("tau_" + suffix + ".csv"), histogram_text(histogram(taus, bins, 0.0, 1.0)));
  write_text_file(dir / ("w_" + suffix + ".csv"), histogram_text(histogram_data_range(ws, bins)));
}

}  // namespace

PipelineReport run_pipeline(const PipelineConfig& input_cfg) {
  PipelineConfig cfg = input_cfg;
  if (cfg.network.empty()) cfg.network = cfg.input.stem().string();
  validate(cfg);

  const auto loaded = load_edge_list(cfg.input, LoadOptions{cfg.symmetrize});
  const Graph& graph = loaded.graph;
  std::filesystem::create_directories(cfg.output_dir);
  write_text_file(cfg.output_dir / "config.json",
                  pipeline_config_json(cfg, loaded.report).dump(1) + "\n");

  PipelineReport report;
  const json input_meta = {{"network", cfg.network}, {"symmetrized", cfg.symmetrize}};

  if (cfg.include_original) {
    ExtractionConfig ec = cfg.extraction;
    ec.threads = cfg.threads;
    const auto result = extract_all(graph, ec);
    write_result(cfg.output_dir / "original.json", result, input_meta);
    report.has_original = true;
    report.original_summary = summarize(result);
    report.original_coverage = coverage(result, graph);
    write_text_file(cfg.output_dir / "original_summary.csv",
                    std::string(kSummaryHeader) + "\n" + cfg.network + "," +
                        summary_fields(report.original_summary) + "\n");
    write_text_file(cfg.output_dir / "original_coverage.csv",
                    std::string(kCoverageHeader) + "\n" + cfg.network + "," +
                        coverage_fields(report.original_coverage) + "\n");
    write_histograms(cfg.output_dir, "original", group_taus(result), group_ws(result),
                     cfg.histogram_bins);
  }

  for (auto method : cfg.methods) {
    std::filesystem::create_directories(cfg.output_dir / "runs" / std::string(to_string(method)));
  }

  const auto runs = static_cast<std::size_t>(cfg.runs);
  report.runs.resize(cfg.methods.size() * runs);
  parallel_for(report.runs.size(), cfg.threads, [&](std::size_t task) {
    RunOutcome& outcome = report.runs[task];
    outcome.method = cfg.methods[task / runs];
    outcome.run = static_cast<int>(task % runs);
    outcome.seed = run_seed(cfg.master_seed, outcome.method, outcome.run);
    const auto dir = cfg.output_dir / "runs" / std::string(to_string(outcome.method));
    const auto stem = fmt::format("run_{:04d}", outcome.run);
    try {
      const SamplerConfig sc{outcome.method, cfg.fraction, derive_seed(outcome.seed, 0)};
      const Graph sampled = sample(graph, sc);
      write_edge_list(dir / (stem + ".edges"), sampled,
                      {{"method", std::string(to_string(sc.method))},
                       {"fraction", fmt::format("{}", sc.fraction)},
                       {"seed", std::to_string(sc.seed)}});
      ExtractionConfig ec = cfg.extraction;
      ec.seed = derive_seed(outcome.seed, 1);
      ec.threads = 1;
      const auto result = extract_all(sampled, ec);
      json meta = input_meta;
      meta["sample"] = {{"method", to_string(sc.method)},
                        {"fraction", sc.fraction},
                        {"seed", sc.seed},
                        {"edges", stem + ".edges"}};
      write_result(dir / (stem + ".json"), result, meta);
      outcome.summary = summarize(result);
      outcome.coverage = coverage(result, sampled);
      outcome.taus = group_taus(result);
      outcome.ws = rescale_w(group_ws(result), cfg.fraction);
      outcome.ok = true;
    } catch (const std::exception& e) {
      outcome.ok = false;
      outcome.error = e.what();
    }
  });

  std::string runs_csv = "network,method,run,seed,status,groups,error\n";
  std::string summary_csv = "network,method,runs,runs_ok," +
                            std::string(kSummaryHeader).substr(sizeof("network,") - 1) + "\n";
  std::string coverage_csv = "network,method,runs,runs_ok," +
                             std::string(kCoverageHeader).substr(sizeof("network,") - 1) + "\n";
  for (std::size_t mi = 0; mi < cfg.methods.size(); ++mi) {
    MethodAggregate agg;
    agg.method = cfg.methods[mi];
    agg.runs = cfg.runs;
    std::vector<SummaryReport> summaries;
    std::vector<CoverageReport> coverages;
    std::vector<double> taus;
    std::vector<double> ws;
    for (std::size_t r = 0; r < runs; ++r) {
      const auto& o = report.runs[mi * runs + r];
      std::string error = o.error;
      for (auto& c : error) {
        if (c == ',' || c == '\n') c = ';';
      }
      runs_csv += fmt::format("{},{},{},{},{},{},{}\n", cfg.network, to_string(o.method), o.run,
                              o.seed, o.ok ? "ok" : "failed",
                              o.ok ? format_fixed(o.summary.group_count, 0) : "", error);
      if (!o.ok) continue;
      summaries.push_back(o.summary);
      coverages.push_back(o.coverage);
      taus.insert(taus.end(), o.taus.begin(), o.taus.end());
      ws.insert(ws.end(), o.ws.begin(), o.ws.end());
    }
    agg.runs_ok = static_cast<int>(summaries.size());
    const auto prefix =
        fmt::format("{},{},{},{},", cfg.network, to_string(agg.method), agg.runs, agg.runs_ok);
    if (!summaries.empty()) {
      agg.summary = aggregate_runs(summaries);
      agg.coverage = aggregate_runs(coverages);
      summary_csv += prefix + summary_fields(agg.summary) + "\n";
      coverage_csv += prefix + coverage_fields(agg.coverage) + "\n";
    } else {
      summary_csv += prefix + ",,,,,,,,,\n";
      coverage_csv += prefix + ",,,,,,,\n";
    }
    write_histograms(cfg.output_dir, std::string(to_string(agg.method)), taus, ws,
                     cfg.histogram_bins);
    report.methods.push_back(agg);
  }
  write_text_file(cfg.output_dir / "runs.csv", runs_csv);
  write_text_file(cfg.output_dir / "sampled_summary.csv", summary_csv);
  write_text_file(cfg.output_dir / "sampled_coverage.csv", coverage_csv);
  return report;
}

}  // namespace nodegroups

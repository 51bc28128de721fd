#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "nodegroups/analysis.hpp"
#include "nodegroups/extraction.hpp"
#include "nodegroups/sampling.hpp"

namespace nodegroups {

struct PipelineConfig {
  std::filesystem::path input;
  std::string network;  ///< row label; defaults to the input file stem
  std::vector<SamplingMethod> methods{SamplingMethod::RandomDegree, SamplingMethod::BreadthFirst};
  double fraction = 0.15;
  int runs = 100;
  ExtractionConfig extraction;
  std::filesystem::path output_dir;
  std::uint64_t master_seed = 0;
  bool include_original = false;
  bool symmetrize = true;
  std::size_t histogram_bins = 50;
  /// Concurrent runs. Output bytes do not depend on it.
  unsigned threads = 1;
};

void validate(const PipelineConfig& cfg);

/// Seed of run `run` for `method`; adding runs never changes earlier ones.
std::uint64_t run_seed(std::uint64_t master, SamplingMethod method, int run);

struct RunOutcome {
  SamplingMethod method;
  int run = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;
  SummaryReport summary;
  CoverageReport coverage;
  std::vector<double> taus;
  std::vector<double> ws;  ///< already divided by the sampling fraction
};

struct MethodAggregate {
  SamplingMethod method;
  int runs = 0;
  int runs_ok = 0;
  SummaryReport summary;
  CoverageReport coverage;
};

struct PipelineReport {
  std::vector<RunOutcome> runs;
  std::vector<MethodAggregate> methods;
  bool has_original = false;
  SummaryReport original_summary;
  CoverageReport original_coverage;
};

/// Runs cfg.runs x (sample -> extract -> summarize/coverage) per method and
/// writes into cfg.output_dir:
///   config.json, runs.csv, sampled_summary.csv, sampled_coverage.csv,
///   tau_<method>.csv, w_<method>.csv, runs/<method>/run_NNNN.{edges,json}
/// and, with include_original, original_summary.csv, original_coverage.csv,
/// tau_original.csv, w_original.csv, original.json.
PipelineReport run_pipeline(const PipelineConfig& cfg);

}  // namespace nodegroups

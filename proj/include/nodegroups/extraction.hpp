#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nodegroups/criterion.hpp"
#include "nodegroups/graph.hpp"
#include "nodegroups/null_model.hpp"

namespace nodegroups {

struct ExtractionConfig {
  int restarts = 20;
  int null_samples = 100;
  double alpha = 0.01;
  std::uint64_t seed = 0;
  std::optional<int> max_groups;
  /// Worker threads for restarts and null replicas. Results do not depend on it.
  unsigned threads = 1;
};

/// Throws ContractViolation on restarts < 1, null_samples < 1, alpha outside
/// (0, 1) or a negative max_groups.
void validate(const ExtractionConfig& cfg);

/// One significant group, expressed in the labels of the input graph.
struct ExtractedGroup {
  std::vector<Label> source;   ///< S, sorted
  std::vector<Label> pattern;  ///< T, sorted
  std::int64_t links_st = 0;
  std::int64_t links_stc = 0;
  double w = 0.0;
  double tau = 0.0;
  GroupType type = GroupType::Mixture;
  double p_value = 1.0;
  std::vector<LabelLink> removed_links;  ///< sorted
  std::size_t working_nodes = 0;  ///< n of the graph the group was scored on
  std::size_t working_links = 0;
  NullEstimate null;
};

/// Why the loop ended, with the rejected candidate when there was one.
struct StopInfo {
  std::string reason;  ///< "not_significant", "no_links", "no_linked_pair", "max_groups"
  std::optional<double> candidate_w;
  std::optional<double> candidate_p;
};

struct ExtractionResult {
  std::vector<ExtractedGroup> groups;
  Graph background;
  ExtractionConfig config;
  std::uint64_t graph_fingerprint = 0;
  std::size_t original_nodes = 0;
  std::size_t original_links = 0;
  StopInfo stop;
};

/// Sequential extraction: find the best pair on the working graph, test it
/// against G(n, m) replicas matched to the working graph, and while it is
/// significant remove its S-T links and any nodes left isolated. Isolated
/// nodes of the input are dropped before the first round.
///
/// Round k uses seeds derive_seed(cfg.seed, "search", k) and
/// derive_seed(cfg.seed, "null", k).
ExtractionResult extract_all(const Graph& g, const ExtractionConfig& cfg);

}  // namespace nodegroups

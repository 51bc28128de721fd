#include "nodegroups/extraction.hpp"

#include <algorithm>

#include "nodegroups/search.hpp"

namespace nodegroups {

void validate(const ExtractionConfig& cfg) {
  if (cfg.restarts < 1) throw ContractViolation("restarts must be at least 1");
  if (cfg.null_samples < 1) throw ContractViolation("null_samples must be at least 1");
  if (!(cfg.alpha > 0.0 && cfg.alpha < 1.0)) throw ContractViolation("alpha must lie in (0, 1)");
  if (cfg.max_groups && *cfg.max_groups < 0) throw ContractViolation("max_groups must be >= 0");
}

namespace {

std::vector<Label> labels_of(const Graph& g, const NodeSet& set) {
  std::vector<Label> out;
  out.reserve(set.size());
  for (NodeId v : set) out.push_back(g.label(v));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

ExtractionResult extract_all(const Graph& g, const ExtractionConfig& cfg) {
  validate(cfg);
  if (g.empty()) throw ContractViolation("cannot extract groups from an empty graph");

  ExtractionResult result;
  result.config = cfg;
  result.graph_fingerprint = g.fingerprint();
  result.original_nodes = g.node_count();
  result.original_links = g.link_count();

  const SearchOptions search{cfg.restarts, cfg.threads};
  Graph working = remove_isolated_nodes(g).graph;
  for (std::uint64_t round = 0;; ++round) {
    if (cfg.max_groups && result.groups.size() >= static_cast<std::size_t>(*cfg.max_groups)) {
      result.stop.reason = "max_groups";
      break;
    }
    if (working.link_count() == 0) {
      result.stop.reason = "no_links";
      break;
    }
    GroupPair best = search_best_group(working, search, derive_seed(cfg.seed, "search", round));
    if (best.links_st < 1) {
      result.stop = {"no_linked_pair", best.w, std::nullopt};
      break;
    }
    NullEstimate null = estimate_null(working.node_count(), working.link_count(),
                                      cfg.null_samples, search,
                                      derive_seed(cfg.seed, "null", round));
    const double p = p_value(best.w, null);
    if (!(p < cfg.alpha)) {
      result.stop = {"not_significant", best.w, p};
      break;
    }

    ExtractedGroup group;
    group.source = labels_of(working, best.source);
    group.pattern = labels_of(working, best.pattern);
    group.links_st = best.links_st;
    group.links_stc = best.links_stc;
    group.w = best.w;
    group.tau = best.tau;
    group.type = classify(best);
    group.p_value = p;
    group.working_nodes = working.node_count();
    group.working_links = working.link_count();
    group.null = std::move(null);

    auto removal = remove_links_between(working, best.source, best.pattern);
    group.removed_links.reserve(removal.removed.size());
    for (auto [u, v] : removal.removed) {
      const Label a = working.label(u);
      const Label b = working.label(v);
      group.removed_links.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(group.removed_links.begin(), group.removed_links.end());
    result.groups.push_back(std::move(group));
    working = remove_isolated_nodes(removal.graph).graph;
  }
  result.background = std::move(working);
  return result;
}

}  // namespace nodegroups

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "nodegroups/graph.hpp"
#include "nodegroups/random.hpp"

namespace nodegroups {

enum class SamplingMethod { RandomDegree, BreadthFirst };

std::string_view to_string(SamplingMethod method);
/// Accepts "rd" / "bf" (any case).
std::optional<SamplingMethod> parse_sampling_method(std::string_view text);

struct SamplerConfig {
  SamplingMethod method = SamplingMethod::RandomDegree;
  double fraction = 0.15;
  std::uint64_t seed = 0;
};

/// ceil(fraction * n - 1e-9), clamped to [1, n].
std::size_t sample_target_size(std::size_t n, double fraction);

/// Draws `k` distinct nodes one at a time, each with probability
/// proportional to degree among the nodes not yet drawn. Once every
/// remaining node has degree 0 the rest are drawn uniformly.
NodeSet draw_degree_weighted(const Graph& g, std::size_t k, Rng& rng);

/// Breadth-first acceptance of `k` nodes. Neighbors are enqueued in
/// ascending id order; when the frontier empties a uniformly random
/// unvisited node restarts the traversal. `start` fixes the first root.
NodeSet draw_breadth_first(const Graph& g, std::size_t k, Rng& rng,
                           std::optional<NodeId> start = std::nullopt);

Graph sample_rd(const Graph& g, const SamplerConfig& cfg);
Graph sample_bf(const Graph& g, const SamplerConfig& cfg);
/// Dispatches on cfg.method.
Graph sample(const Graph& g, const SamplerConfig& cfg);

}  // namespace nodegroups

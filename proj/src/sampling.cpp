#include "nodegroups/sampling.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <queue>
#include <stdexcept>

namespace nodegroups {

std::string_view to_string(SamplingMethod method) {
  return method == SamplingMethod::RandomDegree ? "rd" : "bf";
}

std::optional<SamplingMethod> parse_sampling_method(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "rd") return SamplingMethod::RandomDegree;
  if (lower == "bf") return SamplingMethod::BreadthFirst;
  return std::nullopt;
}

std::size_t sample_target_size(std::size_t n, double fraction) {
  if (!(fraction > 0.0 && fraction <= 1.0)) {
    throw ContractViolation("sampling fraction must lie in (0, 1]");
  }
  const double raw = std::ceil(fraction * static_cast<double>(n) - 1e-9);
  const auto k = static_cast<std::size_t>(std::max(raw, 1.0));
  return std::min(k, n);
}

namespace {

/// Fenwick tree over non-negative integer weights with prefix search.
class WeightTree {
public:
  explicit WeightTree(std::size_t n) : tree_(n + 1, 0) {}

  void add(std::size_t i, std::int64_t delta) {
    total_ += delta;
    for (++i; i < tree_.size(); i += i & (~i + 1)) tree_[i] += delta;
  }

  [[nodiscard]] std::int64_t total() const { return total_; }

  /// Smallest index whose inclusive prefix sum exceeds `target`.
  [[nodiscard]] std::size_t find(std::int64_t target) const {
    std::size_t pos = 0;
    std::size_t step = 1;
    while (step * 2 < tree_.size()) step *= 2;
    for (; step > 0; step /= 2) {
      if (pos + step < tree_.size() && tree_[pos + step] <= target) {
        pos += step;
        target -= tree_[pos];
      }
    }
    return pos;
  }

private:
  std::vector<std::int64_t> tree_;
  std::int64_t total_ = 0;
};

NodeId draw_uniform_unvisited(const std::vector<char>& taken, Rng& rng) {
  std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(taken.size() - 1));
  for (;;) {
    const NodeId v = pick(rng);
    if (!taken[v]) return v;
  }
}

void require_nonempty(const Graph& g) {
  if (g.empty()) throw ContractViolation("cannot sample an empty graph");
}

}  // namespace

NodeSet draw_degree_weighted(const Graph& g, std::size_t k, Rng& rng) {
  require_nonempty(g);
  if (k > g.node_count()) throw ContractViolation("sample larger than the graph");
  WeightTree weights(g.node_count());
  for (NodeId v = 0; v < g.node_count(); ++v) {
    weights.add(v, static_cast<std::int64_t>(g.degree(v)));
  }
  if (weights.total() == 0) {
    throw std::invalid_argument("degree-weighted sampling needs at least one link");
  }
  std::vector<char> taken(g.node_count(), 0);
  std::vector<NodeId> chosen;
  chosen.reserve(k);
  while (chosen.size() < k) {
    NodeId v;
    if (weights.total() > 0) {
      std::uniform_int_distribution<std::int64_t> ticket(0, weights.total() - 1);
      v = static_cast<NodeId>(weights.find(ticket(rng)));
      weights.add(v, -static_cast<std::int64_t>(g.degree(v)));
    } else {
      v = draw_uniform_unvisited(taken, rng);
    }
    taken[v] = 1;
    chosen.push_back(v);
  }
  return NodeSet(std::move(chosen));
}

NodeSet draw_breadth_first(const Graph& g, std::size_t k, Rng& rng,
                           std::optional<NodeId> start) {
  require_nonempty(g);
  if (k > g.node_count()) throw ContractViolation("sample larger than the graph");
  if (start && *start >= g.node_count()) throw ContractViolation("start node out of range");

  std::vector<char> visited(g.node_count(), 0);
  std::vector<NodeId> accepted;
  accepted.reserve(k);
  std::queue<NodeId> frontier;
  bool first_root = true;
  while (accepted.size() < k) {
    if (frontier.empty()) {
      const NodeId root =
          (first_root && start) ? *start : draw_uniform_unvisited(visited, rng);
      first_root = false;
      visited[root] = 1;
      frontier.push(root);
    }
    const NodeId u = frontier.front();
    frontier.pop();
    accepted.push_back(u);
    for (NodeId v : g.neighbors(u)) {
      if (!visited[v]) {
        visited[v] = 1;
        frontier.push(v);
      }
    }
  }
  return NodeSet(std::move(accepted));
}

Graph sample_rd(const Graph& g, const SamplerConfig& cfg) {
  require_nonempty(g);
  Rng rng = make_rng(cfg.seed);
  const std::size_t k = sample_target_size(g.node_count(), cfg.fraction);
  return induced_subgraph(g, draw_degree_weighted(g, k, rng));
}

Graph sample_bf(const Graph& g, const SamplerConfig& cfg) {
  require_nonempty(g);
  Rng rng = make_rng(cfg.seed);
  const std::size_t k = sample_target_size(g.node_count(), cfg.fraction);
  return induced_subgraph(g, draw_breadth_first(g, k, rng));
}

Graph sample(const Graph& g, const SamplerConfig& cfg) {
  return cfg.method == SamplingMethod::RandomDegree ? sample_rd(g, cfg) : sample_bf(g, cfg);
}

}  // namespace nodegroups

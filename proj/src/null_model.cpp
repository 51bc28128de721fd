#include "nodegroups/null_model.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "nodegroups/parallel.hpp"

namespace nodegroups {

Graph gen_er_gnm(std::size_t n, std::size_t m, Rng& rng) {
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n > 0 ? n - 1 : 0) / 2;
  if (m > pairs) throw ContractViolation("G(n,m): more links than node pairs");

  std::vector<Link> links;
  links.reserve(m);
  if (2 * m <= pairs) {
    // Sparse: rejection sampling on canonical pairs.
    std::unordered_set<std::uint64_t> taken;
    taken.reserve(m * 2);
    std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(n - 1));
    while (links.size() < m) {
      NodeId u = pick(rng);
      NodeId v = pick(rng);
      if (u == v) continue;
      if (v < u) std::swap(u, v);
      if (taken.insert(static_cast<std::uint64_t>(u) * n + v).second) links.emplace_back(u, v);
    }
  } else {
    // Dense: partial Fisher-Yates over the full pair list.
    std::vector<Link> all;
    all.reserve(pairs);
    for (NodeId u = 0; u < n; ++u) {
      for (NodeId v = u + 1; v < n; ++v) all.emplace_back(u, v);
    }
    for (std::size_t i = 0; i < m; ++i) {
      std::uniform_int_distribution<std::size_t> pick(i, all.size() - 1);
      std::swap(all[i], all[pick(rng)]);
    }
    links.assign(all.begin(), all.begin() + static_cast<std::ptrdiff_t>(m));
  }
  std::sort(links.begin(), links.end());
  std::vector<Label> labels(n);
  std::iota(labels.begin(), labels.end(), Label{0});
  return Graph(std::move(labels), links);
}

NullEstimate estimate_null(std::size_t n, std::size_t m, int null_samples,
                           const SearchOptions& search, std::uint64_t seed) {
  if (m == 0) throw SearchError("null model needs at least one link");
  if (null_samples < 1) throw ContractViolation("null_samples must be at least 1");
  NullEstimate estimate;
  estimate.n = n;
  estimate.m = m;
  estimate.restarts = search.restarts;
  estimate.samples.resize(static_cast<std::size_t>(null_samples));
  const SearchOptions inner{search.restarts, 1};
  parallel_for(estimate.samples.size(), search.threads, [&](std::size_t j) {
    Rng rng = make_rng(derive_seed(seed, "graph", j));
    const Graph replica = gen_er_gnm(n, m, rng);
    estimate.samples[j] = search_best_group(replica, inner, derive_seed(seed, "search", j)).w;
  });
  return estimate;
}

double p_value(double observed_w, const NullEstimate& estimate) {
  if (estimate.samples.empty()) throw ContractViolation("empty null estimate");
  const auto at_least = std::count_if(estimate.samples.begin(), estimate.samples.end(),
                                      [&](double w) { return w >= observed_w; });
  return static_cast<double>(1 + at_least) / static_cast<double>(estimate.samples.size() + 1);
}

}  // namespace nodegroups

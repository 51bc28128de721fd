#pragma once

#include <random>
#include <vector>

#include "nodegroups/graph.hpp"
#include "nodegroups/random.hpp"

namespace nodegroups::fixtures {

/// Graph with labels 1..n (internal id = label - 1).
inline Graph numbered(std::size_t n, std::vector<Link> one_based) {
  std::vector<Label> labels;
  for (std::size_t i = 1; i <= n; ++i) labels.push_back(static_cast<Label>(i));
  for (auto& [u, v] : one_based) {
    --u;
    --v;
  }
  return Graph(labels, one_based);
}

inline Graph triangle() { return numbered(3, {{1, 2}, {1, 3}, {2, 3}}); }
inline Graph path3() { return numbered(3, {{1, 2}, {2, 3}}); }
/// Center is label 1 (id 0), leaves are 2..leaves+1.
inline Graph star(std::size_t leaves) {
  std::vector<Link> links;
  for (NodeId i = 2; i <= leaves + 1; ++i) links.emplace_back(1, i);
  return numbered(leaves + 1, links);
}
inline Graph triangle_with_pendant() { return numbered(4, {{1, 2}, {1, 3}, {2, 3}, {3, 4}}); }
inline Graph two_triangles() {
  return numbered(6, {{1, 2}, {1, 3}, {2, 3}, {4, 5}, {4, 6}, {5, 6}});
}

/// Two blocks of `block` nodes; ids [0, block) and [block, 2*block).
inline Graph planted_partition(std::size_t block, double p_in, double p_out, std::uint64_t seed) {
  Rng rng(seed);
  std::bernoulli_distribution in(p_in);
  std::bernoulli_distribution out(p_out);
  std::vector<Link> links;
  const auto n = static_cast<NodeId>(2 * block);
  for (NodeId u = 0; u < n; ++u) {
    for (NodeId v = u + 1; v < n; ++v) {
      const bool same = (u < block) == (v < block);
      if (same ? in(rng) : out(rng)) links.emplace_back(u, v);
    }
  }
  std::vector<Label> labels;
  for (NodeId v = 0; v < n; ++v) labels.push_back(v);
  return Graph(labels, links);
}

}  // namespace nodegroups::fixtures

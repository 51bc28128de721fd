#pragma once

#include <algorithm>
#include <cstdint>
#include <iterator>
#include <span>
#include <string_view>

#include "nodegroups/graph.hpp"

namespace nodegroups {

/// Group S with its linking pattern T, scored on a particular graph.
struct GroupPair {
  NodeSet source;   ///< S
  NodeSet pattern;  ///< T
  std::int64_t links_st = 0;   ///< L(S,T), ordered pairs
  std::int64_t links_stc = 0;  ///< L(S,T^C), ordered pairs
  double w = 0.0;
  double tau = 0.0;
};

enum class GroupType { Community, Mixture, Module };

std::string_view to_string(GroupType type);

/// Size balance factor 2st / (s + t).
double mu(std::int64_t s, std::int64_t t);

/// Jaccard index |S /// Jaccard index |S ∩ T| / |S ∪ T| of two sorted ranges. T| / |S | T| of two sorted ranges.
template <typename T>
double jaccard(std::span<const T> a, std::span<const T> b) {
  if (a.empty() || b.empty()) throw ContractViolation("tau needs nonempty sets");
  std::size_t common = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++common;
      ++i;
      ++j;
    }
  }
  return static_cast<double>(common) / static_cast<double>(a.size() + b.size() - common);
}

double tau(const NodeSet& s, const NodeSet& t);

/// Community when S = T, module when S and T are disjoint, mixture otherwise.
template <typename T>
GroupType classify_sets(std::span<const T> s, std::span<const T> t) {
  if (std::equal(s.begin(), s.end(), t.begin(), t.end())) return GroupType::Community;
  auto i = s.begin();
  auto j = t.begin();
  while (i != s.end() && j != t.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      return GroupType::Mixture;
    }
  }
  return GroupType::Module;
}

GroupType classify(const GroupPair& group);

struct LinkCounts {
  std::int64_t st = 0;
  std::int64_t stc = 0;
};

/// Ordered-pair counts: L(S,T) = #{(u,v) : u in S, v in T, {u,v} a link},
/// L(S,T^C) likewise. Links with both endpoints outside S never count.
LinkCounts link_count(const Graph& g, const NodeSet& s, const NodeSet& t);

/// W from sizes and counts. `n` is the node count of the scored graph; the
/// T^C density is taken as 0 when t == n.
double criterion_from_counts(std::int64_t n, std::int64_t s, std::int64_t t,
                             std::int64_t links_st, std::int64_t links_stc);

double criterion_w(const Graph& g, const NodeSet& s, const NodeSet& t);

/// Fills counts, W and tau for (S, T) on `g` from scratch.
GroupPair score_pair(const Graph& g, NodeSet s, NodeSet t);

}  // namespace nodegroups

#include "nodegroups/criterion.hpp"

#include <vector>

namespace nodegroups {

std::string_view to_string(GroupType type) {
  switch (type) {
    case GroupType::Community: return "community";
    case GroupType::Mixture: return "mixture";
    case GroupType::Module: return "module";
  }
  return "unknown";
}

double mu(std::int64_t s, std::int64_t t) {
  if (s < 1 || t < 1) throw ContractViolation("mu needs positive sizes");
  const double sd = static_cast<double>(s);
  const double td = static_cast<double>(t);
  return 2.0 * sd * td / (sd + td);
}

double tau(const NodeSet& s, const NodeSet& t) { return jaccard(s.members(), t.members()); }

GroupType classify(const GroupPair& group) {
  return classify_sets(group.source.members(), group.pattern.members());
}

LinkCounts link_count(const Graph& g, const NodeSet& s, const NodeSet& t) {
  require_subset(g, s, "source set");
  require_subset(g, t, "pattern set");
  std::vector<char> in_t(g.node_count(), 0);
  for (NodeId v : t) in_t[v] = 1;
  LinkCounts counts;
  for (NodeId u : s) {
    for (NodeId v : g.neighbors(u)) {
      if (in_t[v]) {
        ++counts.st;
      } else {
        ++counts.stc;
      }
    }
  }
  return counts;
}

double criterion_from_counts(std::int64_t n, std::int64_t s, std::int64_t t,
                             std::int64_t links_st, std::int64_t links_stc) {
  if (s < 1 || t < 1 || s > n || t > n) throw ContractViolation("group sizes out of range");
  const double m = mu(s, t);
  const double sd = static_cast<double>(s);
  const double inside = static_cast<double>(links_st) / (sd * static_cast<double>(t));
  const double outside =
      t < n ? static_cast<double>(links_stc) / (sd * static_cast<double>(n - t)) : 0.0;
  return m * (static_cast<double>(n) - m) * (inside - outside);
}

double criterion_w(const Graph& g, const NodeSet& s, const NodeSet& t) {
  const auto counts = link_count(g, s, t);
  return criterion_from_counts(static_cast<std::int64_t>(g.node_count()),
                               static_cast<std::int64_t>(s.size()),
                               static_cast<std::int64_t>(t.size()), counts.st, counts.stc);
}

GroupPair score_pair(const Graph& g, NodeSet s, NodeSet t) {
  GroupPair pair;
  const auto counts = link_count(g, s, t);
  pair.links_st = counts.st;
  pair.links_stc = counts.stc;
  pair.w = criterion_from_counts(static_cast<std::int64_t>(g.node_count()),
                                 static_cast<std::int64_t>(s.size()),
                                 static_cast<std::int64_t>(t.size()), counts.st, counts.stc);
  pair.tau = tau(s, t);
  pair.source = std::move(s);
  pair.pattern = std::move(t);
  return pair;
}

}  // namespace nodegroups

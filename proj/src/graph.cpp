#include "nodegroups/graph.hpp"

#include <algorithm>
#include <queue>
#include <string>
#include <unordered_map>

namespace nodegroups {

NodeSet::NodeSet(std::vector<NodeId> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

NodeSet::NodeSet(std::initializer_list<NodeId> members)
    : NodeSet(std::vector<NodeId>(members)) {}

bool NodeSet::contains(NodeId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

Graph::Graph(std::vector<Label> labels, std::span<const Link> links)
    : adjacency_(labels.size()), labels_(std::move(labels)) {
  const auto n = adjacency_.size();
  for (auto [u, v] : links) {
    if (u >= n || v >= n) throw ContractViolation("link endpoint out of range");
    if (u == v) throw ContractViolation("self-loop in graph construction");
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nbrs : adjacency_) {
    std::sort(nbrs.begin(), nbrs.end());
    if (std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw ContractViolation("duplicate link in graph construction");
    }
  }
  link_count_ = links.size();
}

Graph Graph::from_label_links(std::span<const LabelLink> links,
                              std::span<const Label> isolated) {
  std::unordered_map<Label, NodeId> ids;
  std::vector<Label> labels;
  auto intern = [&](Label l) {
    auto [it, inserted] = ids.try_emplace(l, static_cast<NodeId>(labels.size()));
    if (inserted) labels.push_back(l);
    return it->second;
  };
  std::vector<Link> internal;
  internal.reserve(links.size());
  for (auto [a, b] : links) {
    const NodeId u = intern(a);
    const NodeId v = intern(b);
    internal.emplace_back(std::min(u, v), std::max(u, v));
  }
  for (Label l : isolated) intern(l);
  return Graph(std::move(labels), internal);
}

void Graph::check_node(NodeId v) const {
  if (v >= adjacency_.size()) {
    throw ContractViolation("node id " + std::to_string(v) + " out of range");
  }
}

std::span<const NodeId> Graph::neighbors(NodeId v) const {
  check_node(v);
  return adjacency_[v];
}

bool Graph::has_link(NodeId u, NodeId v) const {
  auto nbrs = neighbors(u);
  check_node(v);
  return std::binary_search(nbrs.begin(), nbrs.end(), v);
}

Label Graph::label(NodeId v) const {
  check_node(v);
  return labels_[v];
}

std::vector<Link> Graph::links() const {
  std::vector<Link> out;
  out.reserve(link_count_);
  for (NodeId u = 0; u < adjacency_.size(); ++u) {
    for (NodeId v : adjacency_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

std::vector<LabelLink> Graph::label_links() const {
  std::vector<LabelLink> out;
  out.reserve(link_count_);
  for (auto [u, v] : links()) {
    out.emplace_back(std::min(labels_[u], labels_[v]), std::max(labels_[u], labels_[v]));
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

constexpr std::uint64_t kFnvOffset = 1469598103934665603ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void fnv_mix(std::uint64_t& h, std::uint64_t value) {
  for (int i = 0; i < 8; ++i) {
    h ^= (value >> (8 * i)) & 0xffU;
    h *= kFnvPrime;
  }
}

}  // namespace

std::uint64_t Graph::fingerprint() const {
  std::uint64_t h = kFnvOffset;
  std::vector<Label> sorted_labels(labels_);
  std::sort(sorted_labels.begin(), sorted_labels.end());
  fnv_mix(h, sorted_labels.size());
  for (Label l : sorted_labels) fnv_mix(h, static_cast<std::uint64_t>(l));
  const auto ll = label_links();
  fnv_mix(h, ll.size());
  for (auto [a, b] : ll) {
    fnv_mix(h, static_cast<std::uint64_t>(a));
    fnv_mix(h, static_cast<std::uint64_t>(b));
  }
  return h;
}

void require_subset(const Graph& g, const NodeSet& set, const char* what) {
  if (!set.empty() && set.members().back() >= g.node_count()) {
    throw ContractViolation(std::string(what) + " contains a node outside the graph");
  }
}

Graph induced_subgraph(const Graph& g, const NodeSet& nodes) {
  require_subset(g, nodes, "induced_subgraph node set");
  constexpr NodeId kAbsent = static_cast<NodeId>(-1);
  std::vector<NodeId> remap(g.node_count(), kAbsent);
  std::vector<Label> labels;
  labels.reserve(nodes.size());
  for (NodeId v : nodes) {
    remap[v] = static_cast<NodeId>(labels.size());
    labels.push_back(g.label(v));
  }
  std::vector<Link> links;
  for (NodeId u : nodes) {
    for (NodeId v : g.neighbors(u)) {
      if (u < v && remap[v] != kAbsent) links.emplace_back(remap[u], remap[v]);
    }
  }
  return Graph(std::move(labels), links);
}

LinkRemoval remove_links_between(const Graph& g, const NodeSet& s, const NodeSet& t) {
  require_subset(g, s, "source set");
  require_subset(g, t, "pattern set");
  std::vector<char> in_s(g.node_count(), 0);
  std::vector<char> in_t(g.node_count(), 0);
  for (NodeId v : s) in_s[v] = 1;
  for (NodeId v : t) in_t[v] = 1;

  LinkRemoval out;
  std::vector<Link> kept;
  for (auto [u, v] : g.links()) {
    if ((in_s[u] && in_t[v]) || (in_s[v] && in_t[u])) {
      out.removed.emplace_back(u, v);
    } else {
      kept.emplace_back(u, v);
    }
  }
  out.graph = Graph(std::vector<Label>(g.labels().begin(), g.labels().end()), kept);
  return out;
}

IsolatedRemoval remove_isolated_nodes(const Graph& g) {
  std::vector<NodeId> keep;
  std::vector<NodeId> drop;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    (g.degree(v) > 0 ? keep : drop).push_back(v);
  }
  if (drop.empty()) return {g, NodeSet{}};
  return {induced_subgraph(g, NodeSet(std::move(keep))), NodeSet(std::move(drop))};
}

std::size_t degree(const Graph& g, NodeId v) { return g.degree(v); }

std::vector<NodeSet> connected_components(const Graph& g) {
  std::vector<NodeSet> out;
  std::vector<char> seen(g.node_count(), 0);
  std::queue<NodeId> frontier;
  for (NodeId root = 0; root < g.node_count(); ++root) {
    if (seen[root]) continue;
    std::vector<NodeId> members;
    seen[root] = 1;
    frontier.push(root);
    while (!frontier.empty()) {
      const NodeId u = frontier.front();
      frontier.pop();
      members.push_back(u);
      for (NodeId v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = 1;
          frontier.push(v);
        }
      }
    }
    out.emplace_back(std::move(members));
  }
  return out;
}

}  // namespace nodegroups

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nodegroups {

using NodeId = std::uint32_t;
using Label = std::int64_t;

/// Undirected link between two internal ids, stored with first < second.
using Link = std::pair<NodeId, NodeId>;
/// Undirected link between two external labels, stored with first < second.
using LabelLink = std::pair<Label, Label>;

/// Thrown when a caller breaks a documented precondition (bad id, bad size).
class ContractViolation : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Sorted set of distinct internal node ids.
class NodeSet {
public:
  NodeSet() = default;
  /// Sorts and deduplicates `members`.
  explicit NodeSet(std::vector<NodeId> members);
  NodeSet(std::initializer_list<NodeId> members);

  [[nodiscard]] std::size_t size() const { return members_.size(); }
  [[nodiscard]] bool empty() const { return members_.empty(); }
  [[nodiscard]] bool contains(NodeId v) const;
  [[nodiscard]] std::span<const NodeId> members() const { return members_; }
  [[nodiscard]] auto begin() const { return members_.begin(); }
  [[nodiscard]] auto end() const { return members_.end(); }

  friend bool operator==(const NodeSet&, const NodeSet&) = default;

private:
  std::vector<NodeId> members_;
};

/// Simple undirected graph with dense ids 0..n-1 and an external label per node.
///
/// Adjacency lists are sorted and free of self-loops and duplicates. The
/// graph is never mutated after construction; every transformation below
/// returns a new graph, so a Graph can be shared freely across threads.
class Graph {
public:
  Graph() = default;

  /// Builds a graph on `labels.size()` nodes from internal-id links.
  /// Self-loops and duplicate links are rejected with ContractViolation.
  Graph(std::vector<Label> labels, std::span<const Link> links);

  /// Builds a graph from label pairs; nodes are numbered in order of first
  /// appearance. Label pairs must already be free of self-loops and duplicates.
  static Graph from_label_links(std::span<const LabelLink> links,
                                std::span<const Label> isolated = {});

  [[nodiscard]] std::size_t node_count() const { return adjacency_.size(); }
  [[nodiscard]] std::size_t link_count() const { return link_count_; }
  [[nodiscard]] bool empty() const { return adjacency_.empty(); }

  [[nodiscard]] std::span<const NodeId> neighbors(NodeId v) const;
  [[nodiscard]] std::size_t degree(NodeId v) const { return neighbors(v).size(); }
  [[nodiscard]] bool has_link(NodeId u, NodeId v) const;

  [[nodiscard]] Label label(NodeId v) const;
  [[nodiscard]] std::span<const Label> labels() const { return labels_; }

  /// All links as (u, v) with u < v, in ascending order.
  [[nodiscard]] std::vector<Link> links() const;
  /// All links as label pairs (smaller label first), sorted.
  [[nodiscard]] std::vector<LabelLink> label_links() const;

  /// Order-independent 64-bit digest of the labelled node and link sets.
  [[nodiscard]] std::uint64_t fingerprint() const;

private:
  void check_node(NodeId v) const;

  std::vector<std::vector<NodeId>> adjacency_;
  std::vector<Label> labels_;
  std::size_t link_count_ = 0;
};

/// Subgraph on `nodes` with every link of `g` whose endpoints are both kept.
/// Nodes are renumbered in ascending order of their old ids.
Graph induced_subgraph(const Graph& g, const NodeSet& nodes);

struct LinkRemoval {
  Graph graph;
  std::vector<Link> removed;  ///< ids of the input graph, ascending
};

/// Drops every link with one endpoint in `s` and the other in `t`.
LinkRemoval remove_links_between(const Graph& g, const NodeSet& s, const NodeSet& t);

struct IsolatedRemoval {
  Graph graph;
  NodeSet removed;  ///< ids of the input graph
};

IsolatedRemoval remove_isolated_nodes(const Graph& g);

std::size_t degree(const Graph& g, NodeId v);

/// Components in order of their smallest member.
std::vector<NodeSet> connected_components(const Graph& g);

/// Throws ContractViolation unless every member of `set` is a node of `g`.
void require_subset(const Graph& g, const NodeSet& set, const char* what);

}  // namespace nodegroups

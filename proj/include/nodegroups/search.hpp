#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "nodegroups/criterion.hpp"
#include "nodegroups/graph.hpp"
#include "nodegroups/random.hpp"

namespace nodegroups {

/// Raised when a search has nothing to work with (no links).
class SearchError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct SearchOptions {
  int restarts = 20;
  unsigned threads = 1;
};

enum class MoveKind { AddSource, RemoveSource, AddPattern, RemovePattern };

struct Move {
  MoveKind kind;
  NodeId node;
};

/// Incremental state of one (S, T) pair on a fixed graph.
///
/// For every node v it keeps the number of neighbors inside S and inside T,
/// so W after any single-node move is an O(1) evaluation and applying a
/// move costs O(deg v).
class GroupSearchState {
public:
  GroupSearchState(const Graph& g, const NodeSet& source, const NodeSet& pattern);

  [[nodiscard]] double w() const { return w_; }
  [[nodiscard]] std::int64_t source_size() const { return s_; }
  [[nodiscard]] std::int64_t pattern_size() const { return t_; }
  [[nodiscard]] std::int64_t links_st() const { return links_st_; }
  [[nodiscard]] std::int64_t links_stc() const { return volume_s_ - links_st_; }

  /// W that `move` would produce, without applying it.
  [[nodiscard]] double evaluate(const Move& move) const;

  /// Best strictly improving move; ties within rounding are broken
  /// uniformly at random. Empty at a local maximum.
  [[nodiscard]] std::optional<Move> best_move(Rng& rng) const;

  void apply(const Move& move);

  [[nodiscard]] GroupPair pair() const;

private:
  [[nodiscard]] double score(std::int64_t s, std::int64_t t, std::int64_t links_st,
                             std::int64_t volume_s) const;

  const Graph* graph_;
  std::int64_t n_;
  std::vector<char> in_s_;
  std::vector<char> in_t_;
  std::vector<std::int32_t> nbrs_in_s_;
  std::vector<std::int32_t> nbrs_in_t_;
  std::int64_t s_ = 0;
  std::int64_t t_ = 0;
  std::int64_t links_st_ = 0;
  std::int64_t volume_s_ = 0;
  double w_ = 0.0;
};

/// Steepest-ascent local search over single-node additions to and
/// removals from S or T (sizes never drop below 1).
GroupPair hill_climb(const Graph& g, const NodeSet& init_source, const NodeSet& init_pattern,
                     Rng& rng);

/// Start of restart `index`: community-like (S = T = closed neighborhood of
/// a random non-isolated node) for even indices, module-like (S = {v},
/// T = neighborhood of v) for odd ones.
std::pair<NodeSet, NodeSet> restart_seed_sets(const Graph& g, int index, Rng& rng);

/// Best pair over `options.restarts` independent climbs. Restart i draws
/// from derive_seed(seed, i); ties go to the lowest restart index, so the
/// result does not depend on `options.threads`.
GroupPair search_best_group(const Graph& g, const SearchOptions& options, std::uint64_t seed);

}  // namespace nodegroups

#include "nodegroups/search.hpp"

#include <cmath>

#include "nodegroups/parallel.hpp"

namespace nodegroups {

namespace {

double tolerance(double w) { return 1e-12 * std::max(1.0, std::abs(w)); }

}  // namespace

GroupSearchState::GroupSearchState(const Graph& g, const NodeSet& source,
                                   const NodeSet& pattern)
    : graph_(&g),
      n_(static_cast<std::int64_t>(g.node_count())),
      in_s_(g.node_count(), 0),
      in_t_(g.node_count(), 0),
      nbrs_in_s_(g.node_count(), 0),
      nbrs_in_t_(g.node_count(), 0) {
  if (source.empty() || pattern.empty()) throw ContractViolation("initial sets must be nonempty");
  require_subset(g, source, "initial source set");
  require_subset(g, pattern, "initial pattern set");
  for (NodeId v : source) {
    in_s_[v] = 1;
    for (NodeId u : g.neighbors(v)) ++nbrs_in_s_[u];
    volume_s_ += static_cast<std::int64_t>(g.degree(v));
  }
  for (NodeId v : pattern) {
    in_t_[v] = 1;
    for (NodeId u : g.neighbors(v)) ++nbrs_in_t_[u];
  }
  for (NodeId v : source) links_st_ += nbrs_in_t_[v];
  s_ = static_cast<std::int64_t>(source.size());
  t_ = static_cast<std::int64_t>(pattern.size());
  w_ = score(s_, t_, links_st_, volume_s_);
}

double GroupSearchState::score(std::int64_t s, std::int64_t t, std::int64_t links_st,
                               std::int64_t volume_s) const {
  const double sd = static_cast<double>(s);
  const double td = static_cast<double>(t);
  const double m = 2.0 * sd * td / (sd + td);
  const double inside = static_cast<double>(links_st) / (sd * td);
  const double outside =
      t < n_ ? static_cast<double>(volume_s - links_st) / (sd * static_cast<double>(n_ - t))
             : 0.0;
  return m * (static_cast<double>(n_) - m) * (inside - outside);
}

double GroupSearchState::evaluate(const Move& move) const {
  const NodeId v = move.node;
  const auto deg = static_cast<std::int64_t>(graph_->degree(v));
  switch (move.kind) {
    case MoveKind::AddSource:
      return score(s_ + 1, t_, links_st_ + nbrs_in_t_[v], volume_s_ + deg);
    case MoveKind::RemoveSource:
      return score(s_ - 1, t_, links_st_ - nbrs_in_t_[v], volume_s_ - deg);
    case MoveKind::AddPattern:
      return score(s_, t_ + 1, links_st_ + nbrs_in_s_[v], volume_s_);
    case MoveKind::RemovePattern:
      return score(s_, t_ - 1, links_st_ - nbrs_in_s_[v], volume_s_);
  }
  return w_;
}

std::optional<Move> GroupSearchState::best_move(Rng& rng) const {
  std::optional<Move> best;
  double best_w = w_ + tolerance(w_);
  std::uint64_t ties = 0;
  auto consider = [&](MoveKind kind, NodeId v) {
    const Move move{kind, v};
    const double candidate = evaluate(move);
    if (!best) {
      if (candidate > best_w) {
        best = move;
        best_w = candidate;
        ties = 1;
      }
      return;
    }
    const double tol = tolerance(best_w);
    if (candidate > best_w + tol) {
      best = move;
      best_w = candidate;
      ties = 1;
    } else if (candidate >= best_w - tol) {
      ++ties;
      if (std::uniform_int_distribution<std::uint64_t>(0, ties - 1)(rng) == 0) best = move;
    }
  };
  for (NodeId v = 0; v < static_cast<NodeId>(n_); ++v) {
    if (!in_s_[v]) {
      consider(MoveKind::AddSource, v);
    } else if (s_ > 1) {
      consider(MoveKind::RemoveSource, v);
    }
    if (!in_t_[v]) {
      consider(MoveKind::AddPattern, v);
    } else if (t_ > 1) {
      consider(MoveKind::RemovePattern, v);
    }
  }
  return best;
}

void GroupSearchState::apply(const Move& move) {
  const NodeId v = move.node;
  const auto deg = static_cast<std::int64_t>(graph_->degree(v));
  switch (move.kind) {
    case MoveKind::AddSource:
      if (in_s_[v]) throw ContractViolation("node already in source set");
      in_s_[v] = 1;
      ++s_;
      links_st_ += nbrs_in_t_[v];
      volume_s_ += deg;
      for (NodeId u : graph_->neighbors(v)) ++nbrs_in_s_[u];
      break;
    case MoveKind::RemoveSource:
      if (!in_s_[v] || s_ == 1) throw ContractViolation("invalid source removal");
      in_s_[v] = 0;
      --s_;
      links_st_ -= nbrs_in_t_[v];
      volume_s_ -= deg;
      for (NodeId u : graph_->neighbors(v)) --nbrs_in_s_[u];
      break;
    case MoveKind::AddPattern:
      if (in_t_[v]) throw ContractViolation("node already in pattern set");
      in_t_[v] = 1;
      ++t_;
      links_st_ += nbrs_in_s_[v];
      for (NodeId u : graph_->neighbors(v)) ++nbrs_in_t_[u];
      break;
    case MoveKind::RemovePattern:
      if (!in_t_[v] || t_ == 1) throw ContractViolation("invalid pattern removal");
      in_t_[v] = 0;
      --t_;
      links_st_ -= nbrs_in_s_[v];
      for (NodeId u : graph_->neighbors(v)) --nbrs_in_t_[u];
      break;
  }
  w_ = score(s_, t_, links_st_, volume_s_);
}

GroupPair GroupSearchState::pair() const {
  std::vector<NodeId> source;
  std::vector<NodeId> pattern;
  for (NodeId v = 0; v < static_cast<NodeId>(n_); ++v) {
    if (in_s_[v]) source.push_back(v);
    if (in_t_[v]) pattern.push_back(v);
  }
  GroupPair out;
  out.source = NodeSet(std::move(source));
  out.pattern = NodeSet(std::move(pattern));
  out.links_st = links_st_;
  out.links_stc = volume_s_ - links_st_;
  out.w = w_;
  out.tau = tau(out.source, out.pattern);
  return out;
}

GroupPair hill_climb(const Graph& g, const NodeSet& init_source, const NodeSet& init_pattern,
                     Rng& rng) {
  GroupSearchState state(g, init_source, init_pattern);
  while (auto move = state.best_move(rng)) state.apply(*move);
  return state.pair();
}

std::pair<NodeSet, NodeSet> restart_seed_sets(const Graph& g, int index, Rng& rng) {
  std::vector<NodeId> candidates;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) > 0) candidates.push_back(v);
  }
  if (candidates.empty()) throw SearchError("graph has no links");
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  const NodeId v = candidates[pick(rng)];
  const auto nbrs = g.neighbors(v);
  std::vector<NodeId> open(nbrs.begin(), nbrs.end());
  if (index % 2 == 0) {
    open.push_back(v);
    NodeSet closed(std::move(open));
    return {closed, closed};
  }
  return {NodeSet{v}, NodeSet(std::move(open))};
}

GroupPair search_best_group(const Graph& g, const SearchOptions& options, std::uint64_t seed) {
  if (options.restarts < 1) throw ContractViolation("restarts must be at least 1");
  if (g.link_count() == 0) throw SearchError("graph has no links");
  std::vector<GroupPair> results(static_cast<std::size_t>(options.restarts));
  parallel_for(results.size(), options.threads, [&](std::size_t i) {
    Rng rng = make_rng(derive_seed(seed, i));
    auto [source, pattern] = restart_seed_sets(g, static_cast<int>(i), rng);
    results[i] = hill_climb(g, source, pattern, rng);
  });
  std::size_t best = 0;
  for (std::size_t i = 1; i < results.size(); ++i) {
    if (results[i].w > results[best].w) best = i;
  }
  return std::move(results[best]);
}

}  // namespace nodegroups

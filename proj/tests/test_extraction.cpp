#include <doctest.h>

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "nodegroups/extraction.hpp"
#include "nodegroups/null_model.hpp"

using namespace nodegroups;

namespace {

ExtractionConfig small_config(std::uint64_t seed) {
  ExtractionConfig cfg;
  cfg.restarts = 10;
  cfg.null_samples = 100;
  cfg.seed = seed;
  return cfg;
}

double jaccard_labels(const std::vector<Label>& a, const std::vector<Label>& b) {
  return jaccard(std::span<const Label>(a), std::span<const Label>(b));
}

void check_accounting(const Graph& g, const ExtractionResult& r) {
  std::set<LabelLink> seen;
  std::size_t removed = 0;
  for (const auto& group : r.groups) {
    for (const auto& link : group.removed_links) CHECK(seen.insert(link).second);
    removed += group.removed_links.size();
    CHECK(group.links_st >= 1);
    CHECK(group.p_value < r.config.alpha);
  }
  CHECK(removed + r.background.link_count() == g.link_count());
  for (NodeId v = 0; v < r.background.node_count(); ++v) CHECK(r.background.degree(v) > 0);
  // Background links are exactly the original links never removed.
  std::set<LabelLink> original;
  for (const auto& l : g.label_links()) original.insert(l);
  for (const auto& l : r.background.label_links()) {
    CHECK(original.count(l) == 1);
    CHECK(seen.count(l) == 0);
  }
}

}  // namespace

TEST_CASE("config validation") {
  ExtractionConfig cfg;
  CHECK_NOTHROW(validate(cfg));
  cfg.alpha = 1.0;
  CHECK_THROWS_AS(validate(cfg), ContractViolation);
  cfg.alpha = 0.01;
  cfg.restarts = 0;
  CHECK_THROWS_AS(validate(cfg), ContractViolation);
  cfg.restarts = 1;
  cfg.null_samples = 0;
  CHECK_THROWS_AS(validate(cfg), ContractViolation);
}

TEST_CASE("a triangle matches its own null and yields no group") {
  const Graph g = fixtures::triangle();
  const auto r = extract_all(g, small_config(1));
  CHECK(r.groups.empty());
  CHECK(r.stop.reason == "not_significant");
  REQUIRE(r.stop.candidate_w);
  CHECK(std::abs(*r.stop.candidate_w - 20.0 / 9.0) < 1e-9);
  CHECK(*r.stop.candidate_p == 1.0);
  CHECK(r.background.link_count() == 3);
}

TEST_CASE("graph without links gives an empty result") {
  const Graph g({1, 2}, std::vector<Link>{});
  const auto r = extract_all(g, small_config(0));
  CHECK(r.groups.empty());
  CHECK(r.stop.reason == "no_links");
  CHECK(r.background.empty());
}

TEST_CASE("planted two-block partition yields one group per block") {
  std::vector<Label> a;
  std::vector<Label> b;
  for (Label l = 0; l < 20; ++l) a.push_back(l);
  for (Label l = 20; l < 40; ++l) b.push_back(l);
  for (int trial = 0; trial < 5; ++trial) {
    CAPTURE(trial);
    const Graph g = fixtures::planted_partition(20, 0.5, 0.02, 1000 + trial);
    const auto r = extract_all(g, small_config(trial));
    check_accounting(g, r);
    REQUIRE(r.groups.size() >= 2);
    std::set<int> blocks;
    for (int k = 0; k < 2; ++k) {
      std::vector<Label> nodes(r.groups[k].source);
      nodes.insert(nodes.end(), r.groups[k].pattern.begin(), r.groups[k].pattern.end());
      std::sort(nodes.begin(), nodes.end());
      nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());
      const double ja = jaccard_labels(nodes, a);
      const double jb = jaccard_labels(nodes, b);
      CHECK(std::max(ja, jb) >= 0.8);
      blocks.insert(ja > jb ? 0 : 1);
      CHECK(r.groups[k].type == GroupType::Mixture);
      CHECK(std::includes(r.groups[k].pattern.begin(), r.groups[k].pattern.end(),
                          r.groups[k].source.begin(), r.groups[k].source.end()));
    }
    CHECK(blocks.size() == 2);
  }
}

TEST_CASE("accounting identities on random graphs") {
  Rng rng(31);
  for (int trial = 0; trial < 4; ++trial) {
    const Graph g = fixtures::planted_partition(12, 0.6, 0.05, 50 + trial);
    auto cfg = small_config(trial);
    cfg.null_samples = 30;
    cfg.alpha = 0.1;
    check_accounting(g, extract_all(g, cfg));
  }
}

TEST_CASE("max_groups caps the loop") {
  const Graph g = fixtures::planted_partition(20, 0.5, 0.02, 7);
  auto cfg = small_config(3);
  cfg.max_groups = 1;
  const auto r = extract_all(g, cfg);
  CHECK(r.groups.size() == 1);
  CHECK(r.stop.reason == "max_groups");
  check_accounting(g, r);
}

TEST_CASE("extraction is deterministic across thread counts") {
  const Graph g = fixtures::planted_partition(15, 0.5, 0.05, 9);
  auto cfg = small_config(77);
  cfg.null_samples = 40;
  const auto a = extract_all(g, cfg);
  cfg.threads = 3;
  const auto b = extract_all(g, cfg);
  REQUIRE(a.groups.size() == b.groups.size());
  for (std::size_t i = 0; i < a.groups.size(); ++i) {
    CHECK(a.groups[i].source == b.groups[i].source);
    CHECK(a.groups[i].pattern == b.groups[i].pattern);
    CHECK(a.groups[i].w == b.groups[i].w);
    CHECK(a.groups[i].null.samples == b.groups[i].null.samples);
  }
  CHECK(a.background.fingerprint() == b.background.fingerprint());
}

TEST_CASE("isolated input nodes are dropped before the first round") {
  const Graph g({0, 1, 2, 3, 4}, std::vector<Link>{{0, 1}, {1, 2}, {0, 2}});
  const auto r = extract_all(g, small_config(2));
  CHECK(r.original_nodes == 5);
  for (NodeId v = 0; v < r.background.node_count(); ++v) CHECK(r.background.degree(v) > 0);
}

#pragma once

#include <cstdint>
#include <vector>

#include "nodegroups/graph.hpp"
#include "nodegroups/random.hpp"
#include "nodegroups/search.hpp"

namespace nodegroups {

/// Uniform simple graph with exactly `n` nodes and `m` links, G(n, m).
/// Node labels are 0..n-1.
Graph gen_er_gnm(std::size_t n, std::size_t m, Rng& rng);

/// Best W found on each of `samples.size()` G(n, m) replicas.
struct NullEstimate {
  std::vector<double> samples;
  std::size_t n = 0;
  std::size_t m = 0;
  int restarts = 0;
};

/// Replica j uses generator seed derive_seed(seed, j), so the estimate is
/// identical for any thread count.
NullEstimate estimate_null(std::size_t n, std::size_t m, int null_samples,
                           const SearchOptions& search, std::uint64_t seed);

/// Add-one estimate (1 + #{samples >= observed}) / (K + 1); never zero.
double p_value(double observed_w, const NullEstimate& estimate);

}  // namespace nodegroups

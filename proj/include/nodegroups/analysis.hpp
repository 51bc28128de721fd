#pragma once

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "nodegroups/extraction.hpp"
#include "nodegroups/graph.hpp"

namespace nodegroups {

/// Result and graph do not belong together.
class ProvenanceError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct TypeSummary {
  double count = 0.0;
  double mean_s = 0.0;
  bool empty = true;  ///< mean_s is a placeholder 0

  friend bool operator==(const TypeSummary&, const TypeSummary&) = default;
};

/// Group counts and mean sizes. Counts are real-valued.
struct SummaryReport {
  double group_count = 0.0;
  double mean_s = 0.0;
  double mean_t = 0.0;
  double mean_tau = 0.0;
  bool empty = true;
  TypeSummary community;
  TypeSummary mixture;
  TypeSummary module;

  friend bool operator==(const SummaryReport&, const SummaryReport&) = default;
};

/// Percentages of the original graph's nodes and links. Node shares count
/// S membership only and may overlap across types; link shares partition
/// the links together with the background.
struct CoverageReport {
  double community_nodes = 0.0;
  double community_links = 0.0;
  double mixture_nodes = 0.0;
  double mixture_links = 0.0;
  double module_nodes = 0.0;
  double module_links = 0.0;
  double background_nodes = 100.0;
  double background_links = 100.0;

  friend bool operator==(const CoverageReport&, const CoverageReport&) = default;
};

SummaryReport summarize(const ExtractionResult& result);

CoverageReport coverage(const ExtractionResult& result, const Graph& original);

std::vector<double> rescale_w(std::span<const double> values, double fraction);

struct Histogram {
  double lo = 0.0;
  double hi = 1.0;
  std::vector<std::size_t> counts;
  std::vector<double> density;  ///< sum(density) * width == 1 unless empty
  std::size_t clamped = 0;      ///< values outside [lo, hi] folded into edge bins
  bool empty = true;

  [[nodiscard]] double width() const {
    return (hi - lo) / static_cast<double>(counts.size());
  }
  [[nodiscard]] double center(std::size_t bin) const {
    return lo + (static_cast<double>(bin) + 0.5) * width();
  }
};

Histogram histogram(std::span<const double> values, std::size_t bins, double lo, double hi);

/// Histogram over [min, max] of the data; a degenerate range is widened by
/// 0.5 on each side.
Histogram histogram_data_range(std::span<const double> values, std::size_t bins);

/// Field-wise means. Counts average over all reports; mean sizes average
/// over the reports where they are defined. Summation order is sorted, so
/// the result is independent of report order.
SummaryReport aggregate_runs(std::span<const SummaryReport> reports);
CoverageReport aggregate_runs(std::span<const CoverageReport> reports);

std::vector<double> group_taus(const ExtractionResult& result);
std::vector<double> group_ws(const ExtractionResult& result);

}  // namespace nodegroups

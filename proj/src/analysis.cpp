#include "nodegroups/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace nodegroups {

namespace {

double mean(std::vector<double> values) {
  if (values.empty()) return 0.0;
  std::sort(values.begin(), values.end());
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

template <typename Report>
auto& slot(Report& report, GroupType type) {
  switch (type) {
    case GroupType::Community: return report.community;
    case GroupType::Mixture: return report.mixture;
    case GroupType::Module: return report.module;
  }
  return report.mixture;
}

}  // namespace

SummaryReport summarize(const ExtractionResult& result) {
  SummaryReport report;
  if (result.groups.empty()) return report;
  report.empty = false;
  report.group_count = static_cast<double>(result.groups.size());
  std::vector<double> s;
  std::vector<double> t;
  std::vector<double> taus;
  std::vector<double> per_type[3];
  for (const auto& group : result.groups) {
    s.push_back(static_cast<double>(group.source.size()));
    t.push_back(static_cast<double>(group.pattern.size()));
    taus.push_back(group.tau);
    per_type[static_cast<int>(group.type)].push_back(static_cast<double>(group.source.size()));
  }
  report.mean_s = mean(s);
  report.mean_t = mean(t);
  report.mean_tau = mean(taus);
  for (auto type : {GroupType::Community, GroupType::Mixture, GroupType::Module}) {
    auto& sizes = per_type[static_cast<int>(type)];
    auto& out = slot(report, type);
    out.count = static_cast<double>(sizes.size());
    out.empty = sizes.empty();
    out.mean_s = mean(sizes);
  }
  return report;
}

CoverageReport coverage(const ExtractionResult& result, const Graph& original) {
  if (result.graph_fingerprint != original.fingerprint() ||
      result.original_nodes != original.node_count() ||
      result.original_links != original.link_count()) {
    throw ProvenanceError("extraction result was not produced from this graph");
  }
  CoverageReport report;
  const double n = static_cast<double>(original.node_count());
  const double m = static_cast<double>(original.link_count());
  if (n == 0) return report;

  std::set<Label> nodes[3];
  std::set<LabelLink> links[3];
  std::set<Label> any_nodes;
  std::size_t removed_total = 0;
  for (const auto& group : result.groups) {
    const int k = static_cast<int>(group.type);
    nodes[k].insert(group.source.begin(), group.source.end());
    any_nodes.insert(group.source.begin(), group.source.end());
    links[k].insert(group.removed_links.begin(), group.removed_links.end());
    removed_total += group.removed_links.size();
  }
  auto pct = [](double part, double whole) { return whole > 0 ? 100.0 * part / whole : 0.0; };
  const auto c = static_cast<int>(GroupType::Community);
  const auto x = static_cast<int>(GroupType::Mixture);
  const auto d = static_cast<int>(GroupType::Module);
  report.community_nodes = pct(static_cast<double>(nodes[c].size()), n);
  report.mixture_nodes = pct(static_cast<double>(nodes[x].size()), n);
  report.module_nodes = pct(static_cast<double>(nodes[d].size()), n);
  report.community_links = pct(static_cast<double>(links[c].size()), m);
  report.mixture_links = pct(static_cast<double>(links[x].size()), m);
  report.module_links = pct(static_cast<double>(links[d].size()), m);
  report.background_nodes = pct(n - static_cast<double>(any_nodes.size()), n);
  report.background_links = m > 0 ? pct(m - static_cast<double>(removed_total), m) : 100.0;
  return report;
}

std::vector<double> rescale_w(std::span<const double> values, double fraction) {
  if (!(fraction > 0.0)) throw ContractViolation("rescale fraction must be positive");
  std::vector<double> out;
  out.reserve(values.size());
  for (double v : values) out.push_back(v / fraction);
  return out;
}

Histogram histogram(std::span<const double> values, std::size_t bins, double lo, double hi) {
  if (bins < 1) throw ContractViolation("histogram needs at least one bin");
  if (!(lo < hi)) throw ContractViolation("histogram range must satisfy lo < hi");
  Histogram h;
  h.lo = lo;
  h.hi = hi;
  h.counts.assign(bins, 0);
  h.density.assign(bins, 0.0);
  if (values.empty()) return h;
  h.empty = false;
  const double width = h.width();
  for (double v : values) {
    std::size_t bin;
    if (v < lo) {
      ++h.clamped;
      bin = 0;
    } else if (v > hi) {
      ++h.clamped;
      bin = bins - 1;
    } else {
      bin = std::min(bins - 1, static_cast<std::size_t>((v - lo) / width));
    }
    ++h.counts[bin];
  }
  const double total = static_cast<double>(values.size());
  for (std::size_t i = 0; i < bins; ++i) {
    h.density[i] = static_cast<double>(h.counts[i]) / (total * width);
  }
  return h;
}

Histogram histogram_data_range(std::span<const double> values, std::size_t bins) {
  if (values.empty()) return histogram(values, bins, 0.0, 1.0);
  auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  double a = *lo;
  double b = *hi;
  if (!(a < b)) {
    a -= 0.5;
    b += 0.5;
  }
  return histogram(values, bins, a, b);
}

SummaryReport aggregate_runs(std::span<const SummaryReport> reports) {
  if (reports.empty()) throw ContractViolation("cannot aggregate zero reports");
  SummaryReport out;
  auto collect = [&](auto field, bool only_defined) {
    std::vector<double> values;
    for (const auto& r : reports) {
      if (!only_defined || !r.empty) values.push_back(field(r));
    }
    return values;
  };
  out.group_count = mean(collect([](const SummaryReport& r) { return r.group_count; }, false));
  out.mean_s = mean(collect([](const SummaryReport& r) { return r.mean_s; }, true));
  out.mean_t = mean(collect([](const SummaryReport& r) { return r.mean_t; }, true));
  out.mean_tau = mean(collect([](const SummaryReport& r) { return r.mean_tau; }, true));
  out.empty = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.empty; });
  for (auto type : {GroupType::Community, GroupType::Mixture, GroupType::Module}) {
    std::vector<double> counts;
    std::vector<double> sizes;
    for (const auto& r : reports) {
      const auto& ts = slot(r, type);
      counts.push_back(ts.count);
      if (!ts.empty) sizes.push_back(ts.mean_s);
    }
    auto& dst = slot(out, type);
    dst.count = mean(counts);
    dst.empty = sizes.empty();
    dst.mean_s = mean(sizes);
  }
  return out;
}

CoverageReport aggregate_runs(std::span<const CoverageReport> reports) {
  if (reports.empty()) throw ContractViolation("cannot aggregate zero reports");
  auto field_mean = [&](double CoverageReport::*field) {
    std::vector<double> values;
    for (const auto& r : reports) values.push_back(r.*field);
    return mean(values);
  };
  CoverageReport out;
  out.community_nodes = field_mean(&CoverageReport::community_nodes);
  out.community_links = field_mean(&CoverageReport::community_links);
  out.mixture_nodes = field_mean(&CoverageReport::mixture_nodes);
  out.mixture_links = field_mean(&CoverageReport::mixture_links);
  out.module_nodes = field_mean(&CoverageReport::module_nodes);
  out.module_links = field_mean(&CoverageReport::module_links);
  out.background_nodes = field_mean(&CoverageReport::background_nodes);
  out.background_links = field_mean(&CoverageReport::background_links);
  return out;
}

std::vector<double> group_taus(const ExtractionResult& result) {
  std::vector<double> out;
  for (const auto& g : result.groups) out.push_back(g.tau);
  return out;
}

std::vector<double> group_ws(const ExtractionResult& result) {
  std::vector<double> out;
  for (const auto& g : result.groups) out.push_back(g.w);
  return out;
}

}  // namespace nodegroups

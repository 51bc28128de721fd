#include "nodegroups/report_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include <fmt/format.h>

namespace nodegroups {

using nlohmann::json;

json config_to_json(const ExtractionConfig& cfg) {
  json j;
  j["restarts"] = cfg.restarts;
  j["null_samples"] = cfg.null_samples;
  j["alpha"] = cfg.alpha;
  j["seed"] = cfg.seed;
  j["max_groups"] = cfg.max_groups ? json(*cfg.max_groups) : json(nullptr);
  return j;
}

ExtractionConfig config_from_json(const json& j) {
  ExtractionConfig cfg;
  cfg.restarts = j.at("restarts").get<int>();
  cfg.null_samples = j.at("null_samples").get<int>();
  cfg.alpha = j.at("alpha").get<double>();
  cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("max_groups") && !j["max_groups"].is_null()) {
    cfg.max_groups = j["max_groups"].get<int>();
  }
  return cfg;
}

std::string fingerprint_hex(std::uint64_t fingerprint) {
  return fmt::format("{:016x}", fingerprint);
}

namespace {

json links_to_json(const std::vector<LabelLink>& links) {
  json out = json::array();
  for (auto [a, b] : links) out.push_back({a, b});
  return out;
}

GroupType parse_type(const std::string& text) {
  if (text == "community") return GroupType::Community;
  if (text == "module") return GroupType::Module;
  if (text == "mixture") return GroupType::Mixture;
  throw std::runtime_error("unknown group type '" + text + "'");
}

}  // namespace

json result_to_json(const ExtractionResult& result, const std::string& background_path,
                    const json& input) {
  json j;
  j["format"] = kResultFormat;
  j["config"] = config_to_json(result.config);
  j["input"] = input;
  j["graph"] = {{"fingerprint", fingerprint_hex(result.graph_fingerprint)},
                {"nodes", result.original_nodes},
                {"links", result.original_links}};
  json groups = json::array();
  for (const auto& g : result.groups) {
    json entry;
    entry["S"] = g.source;
    entry["T"] = g.pattern;
    entry["W"] = g.w;
    entry["tau"] = g.tau;
    entry["type"] = to_string(g.type);
    entry["p_value"] = g.p_value;
    entry["links_st"] = g.links_st;
    entry["links_stc"] = g.links_stc;
    entry["working_nodes"] = g.working_nodes;
    entry["working_links"] = g.working_links;
    entry["removed_links"] = links_to_json(g.removed_links);
    entry["null"] = {{"n", g.null.n},
                     {"m", g.null.m},
                     {"restarts", g.null.restarts},
                     {"samples", g.null.samples}};
    groups.push_back(std::move(entry));
  }
  j["groups"] = std::move(groups);
  json stop;
  stop["reason"] = result.stop.reason;
  stop["candidate_W"] = result.stop.candidate_w ? json(*result.stop.candidate_w) : json(nullptr);
  stop["candidate_p_value"] =
      result.stop.candidate_p ? json(*result.stop.candidate_p) : json(nullptr);
  j["stop"] = std::move(stop);
  j["background"] = {{"path", background_path},
                     {"nodes", result.background.node_count()},
                     {"links", result.background.link_count()}};
  return j;
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << contents;
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

void write_result(const std::filesystem::path& path, const ExtractionResult& result,
                  const json& input) {
  const auto background_name = path.stem().string() + ".background.edges";
  const auto background_path = path.parent_path() / background_name;
  write_edge_list(background_path, result.background,
                  {{"content", "background after group extraction"},
                   {"source_fingerprint", fingerprint_hex(result.graph_fingerprint)}});
  write_text_file(path, result_to_json(result, background_name, input).dump(1) + "\n");
}

ExtractionResult read_result(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw IoError("'" + path.string() + "' is not valid JSON: " + e.what());
  }
  if (j.value("format", std::string{}) != kResultFormat) {
    throw IoError("'" + path.string() + "' is not a groups file");
  }
  try {
    ExtractionResult result;
    result.config = config_from_json(j.at("config"));
    result.graph_fingerprint =
        std::stoull(j.at("graph").at("fingerprint").get<std::string>(), nullptr, 16);
    result.original_nodes = j["graph"].at("nodes").get<std::size_t>();
    result.original_links = j["graph"].at("links").get<std::size_t>();
    for (const auto& entry : j.at("groups")) {
      ExtractedGroup g;
      g.source = entry.at("S").get<std::vector<Label>>();
      g.pattern = entry.at("T").get<std::vector<Label>>();
      g.w = entry.at("W").get<double>();
      g.tau = entry.at("tau").get<double>();
      g.type = parse_type(entry.at("type").get<std::string>());
      g.p_value = entry.at("p_value").get<double>();
      g.links_st = entry.value("links_st", std::int64_t{0});
      g.links_stc = entry.value("links_stc", std::int64_t{0});
      g.working_nodes = entry.value("working_nodes", std::size_t{0});
      g.working_links = entry.value("working_links", std::size_t{0});
      for (const auto& link : entry.at("removed_links")) {
        g.removed_links.emplace_back(link.at(0).get<Label>(), link.at(1).get<Label>());
      }
      if (entry.contains("null")) {
        const auto& nj = entry["null"];
        g.null.n = nj.value("n", std::size_t{0});
        g.null.m = nj.value("m", std::size_t{0});
        g.null.restarts = nj.value("restarts", 0);
        g.null.samples = nj.value("samples", std::vector<double>{});
      }
      result.groups.push_back(std::move(g));
    }
    const auto& stop = j.at("stop");
    result.stop.reason = stop.value("reason", std::string{});
    if (stop.contains("candidate_W") && !stop["candidate_W"].is_null()) {
      result.stop.candidate_w = stop["candidate_W"].get<double>();
    }
    if (stop.contains("candidate_p_value") && !stop["candidate_p_value"].is_null()) {
      result.stop.candidate_p = stop["candidate_p_value"].get<double>();
    }
    const auto& background = j.at("background");
    if (background.at("links").get<std::size_t>() > 0) {
      result.background =
          load_edge_list(path.parent_path() / background.at("path").get<std::string>()).graph;
    }
    return result;
  } catch (const json::exception& e) {
    throw IoError("malformed groups file '" + path.string() + "': " + e.what());
  }
}

std::string format_fixed(double value, int decimals) {
  auto text = fmt::format("{:.{}f}", value, decimals);
  if (text.starts_with('-') && text.find_first_not_of("-0.") == std::string::npos) {
    text.erase(0, 1);
  }
  return text;
}

namespace {

/// Whole counts print as integers, run averages with two decimals.
std::string format_count(double value) {
  if (value == std::floor(value)) return format_fixed(value, 0);
  return format_fixed(value, 2);
}

}  // namespace

std::string summary_fields(const SummaryReport& r) {
  return fmt::format("{},{},{},{},{},{},{},{},{},{}", format_count(r.group_count),
                     format_fixed(r.mean_s, 2), format_fixed(r.mean_t, 2),
                     format_fixed(r.mean_tau, 4), format_count(r.community.count),
                     format_fixed(r.community.mean_s, 2), format_count(r.mixture.count),
                     format_fixed(r.mixture.mean_s, 2), format_count(r.module.count),
                     format_fixed(r.module.mean_s, 2));
}

std::string coverage_fields(const CoverageReport& r) {
  return fmt::format("{},{},{},{},{},{},{},{}", format_fixed(r.community_nodes, 1),
                     format_fixed(r.community_links, 1), format_fixed(r.mixture_nodes, 1),
                     format_fixed(r.mixture_links, 1), format_fixed(r.module_nodes, 1),
                     format_fixed(r.module_links, 1), format_fixed(r.background_nodes, 1),
                     format_fixed(r.background_links, 1));
}

void write_summary_csv(std::ostream& out, std::string_view network, const SummaryReport& r) {
  out << kSummaryHeader << '\n' << network << ',' << summary_fields(r) << '\n';
}

void write_coverage_csv(std::ostream& out, std::string_view network, const CoverageReport& r) {
  out << kCoverageHeader << '\n' << network << ',' << coverage_fields(r) << '\n';
}

void write_histogram_csv(std::ostream& out, const Histogram& h) {
  out << "bin_center,density\n";
  if (h.empty) return;
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    out << fmt::format("{:.6g},{:.9g}\n", h.center(i), h.density[i]);
  }
}

}  // namespace nodegroups

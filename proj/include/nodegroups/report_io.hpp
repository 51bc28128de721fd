#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nodegroups/analysis.hpp"
#include "nodegroups/edge_list.hpp"
#include "nodegroups/extraction.hpp"

namespace nodegroups {

inline constexpr std::string_view kResultFormat = "nodegroups-extraction/1";

nlohmann::json config_to_json(const ExtractionConfig& cfg);
ExtractionConfig config_from_json(const nlohmann::json& j);

/// Groups file body. `background_path` is stored as given (usually a file
/// name relative to the groups file); `input` is free-form load metadata.
nlohmann::json result_to_json(const ExtractionResult& result, const std::string& background_path,
                              const nlohmann::json& input = nlohmann::json::object());

/// Writes `<path>` and the background edge list next to it as
/// `<stem>.background.edges`.
void write_result(const std::filesystem::path& path, const ExtractionResult& result,
                  const nlohmann::json& input = nlohmann::json::object());

/// Reads a groups file and the background edge list it references.
ExtractionResult read_result(const std::filesystem::path& path);

std::string fingerprint_hex(std::uint64_t fingerprint);

/// Fixed-point formatting that never prints "-0".
std::string format_fixed(double value, int decimals);

inline constexpr std::string_view kSummaryHeader =
    "network,groups,mean_s,mean_t,mean_tau,communities,community_mean_s,mixtures,"
    "mixture_mean_s,modules,module_mean_s";
inline constexpr std::string_view kCoverageHeader =
    "network,community_nodes,community_links,mixture_nodes,mixture_links,module_nodes,"
    "module_links,background_nodes,background_links";

/// Values after the leading network column(s), comma separated.
std::string summary_fields(const SummaryReport& report);
std::string coverage_fields(const CoverageReport& report);

void write_summary_csv(std::ostream& out, std::string_view network, const SummaryReport& report);
void write_coverage_csv(std::ostream& out, std::string_view network,
                        const CoverageReport& report);
/// Two columns: bin_center,density. An empty histogram writes the header only.
void write_histogram_csv(std::ostream& out, const Histogram& histogram);

void write_text_file(const std::filesystem::path& path, std::string_view contents);

}  // namespace nodegroups

#include "nodegroups/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <string_view>
#include <unordered_set>

namespace nodegroups {

ParseError::ParseError(std::size_t line, const std::string& message)
    : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

namespace {

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\v' || c == '\f'; }

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && is_space(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_space(line[i])) ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

Label parse_label(std::string_view token, std::size_t line_no) {
  Label value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (!token.empty() && token.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || first == last) {
    throw ParseError(line_no, "expected an integer label, got '" + std::string(token) + "'");
  }
  return value;
}

struct PairHash {
  std::size_t operator()(const LabelLink& l) const noexcept {
    const auto a = static_cast<std::uint64_t>(l.first);
    const auto b = static_cast<std::uint64_t>(l.second);
    return std::hash<std::uint64_t>{}(a * 0x9E3779B97F4A7C15ULL ^ (b + (a << 6) + (a >> 2)));
  }
};

}  // namespace

LoadedGraph load_edge_list(std::istream& in, const LoadOptions& options) {
  LoadReport report;
  report.symmetrized = options.treat_directed_as_undirected;

  std::vector<LabelLink> links;
  std::unordered_set<LabelLink, PairHash> seen_oriented;
  std::unordered_set<LabelLink, PairHash> seen_undirected;
  std::vector<Label> isolated;

  std::string line;
  std::size_t line_no = 0;
  const std::string_view directive(kIsolatedDirective);
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view view(line);
    std::size_t first = 0;
    while (first < view.size() && is_space(view[first])) ++first;
    view.remove_prefix(first);
    if (view.empty()) continue;
    if (view.front() == '#') {
      ++report.comment_lines;
      if (view.starts_with(directive)) {
        for (auto token : split_tokens(view.substr(directive.size()))) {
          isolated.push_back(parse_label(token, line_no));
        }
      }
      continue;
    }
    const auto tokens = split_tokens(view);
    if (tokens.size() != 2) {
      throw ParseError(line_no, "expected 2 labels, found " + std::to_string(tokens.size()));
    }
    ++report.data_lines;
    const Label a = parse_label(tokens[0], line_no);
    const Label b = parse_label(tokens[1], line_no);
    if (a == b) {
      ++report.self_loops;
      continue;
    }
    const LabelLink key{std::min(a, b), std::max(a, b)};
    if (!seen_undirected.insert(key).second) {
      if (options.treat_directed_as_undirected && seen_oriented.insert({a, b}).second) {
        ++report.reciprocal_merged;
      } else {
        ++report.duplicates;
      }
      continue;
    }
    seen_oriented.insert({a, b});
    links.emplace_back(a, b);
  }
  if (in.bad()) throw IoError("read error while parsing edge list");
  if (links.empty()) throw EmptyGraphError("edge list contains no links");

  std::sort(isolated.begin(), isolated.end());
  isolated.erase(std::unique(isolated.begin(), isolated.end()), isolated.end());
  return {Graph::from_label_links(links, isolated), report};
}

LoadedGraph load_edge_list(const std::filesystem::path& path, const LoadOptions& options) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  return load_edge_list(in, options);
}

void write_edge_list(std::ostream& out, const Graph& g, const Metadata& metadata) {
  for (const auto& [key, value] : metadata) out << "# " << key << ": " << value << '\n';
  out << "# nodes: " << g.node_count() << '\n';
  out << "# links: " << g.link_count() << '\n';

  std::vector<Label> isolated;
  for (NodeId v = 0; v < g.node_count(); ++v) {
    if (g.degree(v) == 0) isolated.push_back(g.label(v));
  }
  if (!isolated.empty()) {
    std::sort(isolated.begin(), isolated.end());
    out << kIsolatedDirective;
    for (Label l : isolated) out << ' ' << l;
    out << '\n';
  }
  for (auto [a, b] : g.label_links()) out << a << ' ' << b << '\n';
}

void write_edge_list(const std::filesystem::path& path, const Graph& g,
                     const Metadata& metadata) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  write_edge_list(out, g, metadata);
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace nodegroups

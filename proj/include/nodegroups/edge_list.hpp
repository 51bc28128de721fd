#pragma once

#include <cstddef>
#include <filesystem>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nodegroups/graph.hpp"

namespace nodegroups {

/// Malformed edge-list line. `line()` is 1-based.
class ParseError : public std::runtime_error {
public:
  ParseError(std::size_t line, const std::string& message);
  [[nodiscard]] std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Input contained no links once self-loops were dropped.
class EmptyGraphError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct LoadOptions {
  /// Input links are directed (u cites v); the reverse orientation is folded
  /// into the same undirected link and counted as `reciprocal_merged`.
  bool treat_directed_as_undirected = true;
};

/// Counters describing what the loader dropped or merged.
struct LoadReport {
  std::size_t data_lines = 0;
  std::size_t comment_lines = 0;
  std::size_t self_loops = 0;
  std::size_t duplicates = 0;
  std::size_t reciprocal_merged = 0;
  bool symmetrized = true;
};

struct LoadedGraph {
  Graph graph;
  LoadReport report;
};

/// Comment directive that keeps degree-0 nodes through a write/read cycle.
inline constexpr const char* kIsolatedDirective = "# isolated:";

/// Parses a whitespace-separated "u v" edge list. Lines starting with '#'
/// are comments, except for the `# isolated:` directive written by
/// write_edge_list.
LoadedGraph load_edge_list(std::istream& in, const LoadOptions& options = {});
LoadedGraph load_edge_list(const std::filesystem::path& path, const LoadOptions& options = {});

/// Key/value pairs written as "# key: value" before the links.
using Metadata = std::vector<std::pair<std::string, std::string>>;

/// Writes links by external label, smaller label first, in sorted order.
void write_edge_list(std::ostream& out, const Graph& g, const Metadata& metadata = {});
void write_edge_list(const std::filesystem::path& path, const Graph& g,
                     const Metadata& metadata = {});

}  // namespace nodegroups

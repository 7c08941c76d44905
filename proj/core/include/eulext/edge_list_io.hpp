#pragma once

#include <cstddef>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "eulext/graph.hpp"

namespace eulext {

struct ExtensionCertificate;

/// Text edge list:
///
///     n <count>
///     u v
///     ...
///
/// Tokens are whitespace separated; everything after '#' on a line is ignored.
struct EdgeListData {
  int n = 0;
  std::vector<std::pair<Vertex, Vertex>> pairs;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line) {}

  /// 1-based line number, 0 when the problem is not tied to a line.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Raised when a file cannot be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

EdgeListData parse_edge_list(std::string_view text);

/// Header plus one line per edge in canonical sorted order.
std::string serialize_edge_list(const Graph& g);

/// Edge list of H followed by '#' comment lines (m, marked edges, walks,
/// circuit), so the output still parses as a plain edge list.
std::string serialize_certificate(const ExtensionCertificate& cert);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

/// read_text_file + parse_edge_list + Graph::from_edge_list.
Graph load_graph(const std::filesystem::path& path);

}  // namespace eulext

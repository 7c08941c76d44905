#include "eulext/edge_list_io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>

#include "eulext/extension.hpp"

namespace eulext {

namespace {

std::vector<std::string_view> tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

int to_int(std::string_view token, std::size_t line) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "expected an integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

EdgeListData parse_edge_list(std::string_view text) {
  EdgeListData data;
  bool have_header = false;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tok = tokens(line);
    if (tok.empty()) continue;

    if (!have_header) {
      if (tok.size() != 2 || tok[0] != "n") {
        throw ParseError(line_no, "missing header 'n <count>'");
      }
      data.n = to_int(tok[1], line_no);
      if (data.n < 1) throw ParseError(line_no, "vertex count must be positive");
      have_header = true;
      continue;
    }
    if (tok.size() != 2) throw ParseError(line_no, "expected 'u v'");
    data.pairs.emplace_back(to_int(tok[0], line_no), to_int(tok[1], line_no));
  }
  if (!have_header) throw ParseError(0, "missing header 'n <count>'");
  return data;
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string serialize_certificate(const ExtensionCertificate& cert) {
  std::ostringstream out;
  out << serialize_edge_list(cert.h);
  out << "# m " << cert.h.edge_count() << '\n';
  out << "# marked";
  for (const Edge& e : cert.marked) out << ' ' << e.u << '-' << e.v;
  out << '\n';
  for (std::size_t i = 0; i < cert.walks.size(); ++i) {
    out << "# walk " << i + 1 << " retries "
        << (i < cert.stats.walk_retries.size() ? cert.stats.walk_retries[i] : 0) << " edges";
    for (const Edge& e : cert.walks[i]) out << ' ' << e.u << '-' << e.v;
    out << '\n';
  }
  out << "# max_degree " << cert.stats.final_max_degree << '\n';
  out << "# circuit";
  for (Vertex v : cert.circuit) out << ' ' << v;
  out << '\n';
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError("error reading " + path.string());
  return text;
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw IoError("error writing " + path.string());
}

Graph load_graph(const std::filesystem::path& path) {
  const EdgeListData data = parse_edge_list(read_text_file(path));
  return Graph::from_edge_list(data.n, data.pairs);
}

}  // namespace eulext

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "strongcol/error.hpp"
#include "strongcol/graph.hpp"

namespace strongcol {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Parses whitespace separated non-negative integers; returns false on junk.
bool parse_ints(std::string_view s, std::vector<long long>& out) {
  out.clear();
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    if (i == s.size()) break;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    long long value = 0;
    const auto token = s.substr(i, j - i);
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || value < 0 || value > INT32_MAX) {
      return false;
    }
    out.push_back(value);
    i = j;
  }
  return true;
}

}  // namespace

EdgeListDocument read_edge_list(std::istream& in) {
  EdgeListDocument doc;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::vector<int> lines;
  std::optional<VertexId> declared;
  std::string raw;
  std::vector<long long> ints;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const auto line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '#') {
      const auto body = line.substr(1);
      if (body.size() >= 2 && body[0] == 'n' && (body[1] == ' ' || body[1] == '\t')) {
        if (!parse_ints(body.substr(1), ints) || ints.size() != 1) {
          throw Error(ErrorCode::kParse, "malformed vertex count header", line_no);
        }
        declared = static_cast<VertexId>(ints[0]);
      } else {
        doc.comments.emplace_back(body);
      }
      continue;
    }
    if (!parse_ints(line, ints) || ints.size() != 2) {
      throw Error(ErrorCode::kParse, "expected two non-negative integers, got '" + std::string(line) + "'",
                  line_no);
    }
    pairs.emplace_back(static_cast<VertexId>(ints[0]), static_cast<VertexId>(ints[1]));
    lines.push_back(line_no);
  }
  doc.graph = build_graph(pairs, declared, lines);
  return doc;
}

EdgeListDocument read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kParse, "cannot open '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g, std::span<const std::string> comments) {
  for (const auto& c : comments) out << '#' << c << '\n';
  out << "#n " << g.vertex_count() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

}  // namespace strongcol

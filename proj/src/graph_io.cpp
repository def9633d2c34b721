#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "arbor/errors.hpp"
#include "arbor/graph.hpp"

namespace arbor {

namespace {

bool is_blank_or_comment(const std::string& line) {
  auto pos = line.find_first_not_of(" \t\r");
  return pos == std::string::npos || line[pos] == '#';
}

// Parses exactly two integers from the line; anything else is an error.
std::pair<long long, long long> parse_pair(const std::string& line, int lineno) {
  std::istringstream ss(line);
  long long a = 0;
  long long b = 0;
  if (!(ss >> a >> b)) throw ParseError(lineno, "expected two integers");
  std::string rest;
  if (ss >> rest) throw ParseError(lineno, "trailing content '" + rest + "'");
  return {a, b};
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  long long n = -1;
  long long m = -1;
  std::vector<std::pair<int, int>> pairs;
  while (std::getline(in, line)) {
    ++lineno;
    if (is_blank_or_comment(line)) continue;
    auto [a, b] = parse_pair(line, lineno);
    if (n < 0) {
      if (a < 0 || a > kMaxVertices) throw ParseError(lineno, "vertex count out of range");
      if (b < 0) throw ParseError(lineno, "negative edge count");
      n = a;
      m = b;
      continue;
    }
    if (static_cast<long long>(pairs.size()) == m) throw ParseError(lineno, "more edges than declared");
    if (a < 0 || b < 0 || a >= n || b >= n) throw ParseError(lineno, "vertex index out of range");
    if (a == b) throw ParseError(lineno, "self-loop");
    pairs.emplace_back(static_cast<int>(a), static_cast<int>(b));
  }
  if (n < 0) throw ParseError(lineno, "missing header line 'n m'");
  if (static_cast<long long>(pairs.size()) != m) {
    throw ParseError(lineno, "declared " + std::to_string(m) + " edges, found " +
                                 std::to_string(pairs.size()));
  }
  return Graph(static_cast<int>(n), std::span<const std::pair<int, int>>(pairs));
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

void write_dot(std::ostream& out, const Graph& g, std::span<const VertexSet> overlay) {
  static constexpr const char* kPalette[] = {"red",    "blue",   "darkgreen", "orange",
                                             "purple", "brown",  "magenta",   "cyan",
                                             "gold",   "navy",   "olive",     "teal"};
  constexpr int kColors = sizeof kPalette / sizeof kPalette[0];
  out << "graph G {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (const Edge& e : g.edges()) {
    out << "  " << e.u << " -- " << e.v;
    std::string colors;
    for (std::size_t i = 0; i < overlay.size(); ++i) {
      if (overlay[i].contains(e.u) && overlay[i].contains(e.v)) {
        if (!colors.empty()) colors += ':';
        colors += kPalette[i % kColors];
      }
    }
    if (!colors.empty()) out << " [color=\"" << colors << "\", penwidth=2]";
    out << ";\n";
  }
  out << "}\n";
}

}  // namespace arbor

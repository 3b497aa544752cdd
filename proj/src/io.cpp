#include "nprime/io.hpp"

#include <charconv>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>
#include <vector>

namespace nprime {
namespace {

struct Line {
  int number;
  std::string text;
};

// Non-blank, non-comment lines with their 1-based line numbers.
std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back({number, line});
  }
  return out;
}

std::vector<long long> integers(const Line& line) {
  std::vector<long long> out;
  std::istringstream in(line.text);
  std::string tok;
  while (in >> tok) {
    long long v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError(line.number, "'" + tok + "' is not an integer");
    out.push_back(v);
  }
  return out;
}

}  // namespace

Graph parse_edge_list(const std::string& text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(1, "missing header 'n m'");
  const auto header = integers(lines[0]);
  if (header.size() != 2) throw ParseError(lines[0].number, "header must be 'n m'");
  const long long n = header[0], m = header[1];
  if (n < 1 || n > 100'000'000) throw ParseError(lines[0].number, "vertex count must be >= 1");
  if (m < 0 || m > n * (n - 1) / 2) throw ParseError(lines[0].number, "edge count out of range");
  if (static_cast<long long>(lines.size()) - 1 != m)
    throw ParseError(lines.back().number, "header declares " + std::to_string(m) + " edges, found " +
                                              std::to_string(lines.size() - 1));

  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto uv = integers(lines[i]);
    if (uv.size() != 2) throw ParseError(lines[i].number, "edge line must be 'u v'");
    const long long u = uv[0], v = uv[1];
    if (u < 1 || u > n || v < 1 || v > n) throw ParseError(lines[i].number, "endpoint out of range 1.." + std::to_string(n));
    if (u >= v) throw ParseError(lines[i].number, "edge must satisfy u < v");
    Edge e{static_cast<Vertex>(u), static_cast<Vertex>(v)};
    if (!seen.insert(e).second) throw ParseError(lines[i].number, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
    edges.push_back(e);
  }
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string write_edge_list(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

Labeling parse_labels(const std::string& text) {
  std::vector<int> labels;
  for (const auto& line : content_lines(text)) {
    const auto values = integers(line);
    if (values.size() != 1) throw ParseError(line.number, "expected one label per line");
    if (values[0] < std::numeric_limits<int>::min() || values[0] > std::numeric_limits<int>::max())
      throw ParseError(line.number, "label out of range");
    labels.push_back(static_cast<int>(values[0]));
  }
  return Labeling(std::move(labels));
}

std::string write_labels(const Labeling& f) {
  std::string out;
  for (int x : f.values()) out += std::to_string(x) + "\n";
  return out;
}

std::string write_dot(const Graph& g, const Labeling* f, const VerificationReport* report) {
  std::set<Vertex> bad;
  if (report)
    for (const auto& v : report->violations) bad.insert(v.vertex);
  std::string out = "graph G {\n";
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    out += "  " + std::to_string(v);
    std::string attrs;
    if (f && f->size() == g.vertex_count()) attrs += "label=\"" + std::to_string((*f)[v]) + "\"";
    if (bad.count(v)) attrs += std::string(attrs.empty() ? "" : ", ") + "style=filled, fillcolor=red";
    if (!attrs.empty()) out += " [" + attrs + "]";
    out += ";\n";
  }
  for (auto [u, v] : g.edges()) out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
  out += "}\n";
  return out;
}

std::string format_report(const VerificationReport& report) {
  std::string out = (report.ok ? "OK" : "FAIL");
  out += " checked=" + std::to_string(report.checked_count) +
         " violations=" + std::to_string(report.violations.size()) + "\n";
  for (const auto& v : report.violations) {
    out += "vertex " + std::to_string(v.vertex) + ": labels {";
    for (std::size_t i = 0; i < v.neighbor_labels.size(); ++i)
      out += (i ? "," : "") + std::to_string(v.neighbor_labels[i]);
    out += "} gcd " + std::to_string(v.gcd_value) + "\n";
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << content;
  if (!out) throw UsageError("write failed for " + path);
}

}  // namespace nprime

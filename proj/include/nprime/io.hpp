#pragma once

#include <optional>
#include <string>

#include "nprime/graph.hpp"

// Text formats.
//
// Edge list: first non-comment line "n m", then m lines "u v" with
// 1 <= u < v <= n. Lines starting with '#' are comments; blank lines are
// ignored.
//
// Labels: n lines, line v holds the label of vertex v in ASCII decimal.
namespace nprime {

/// Throws ParseError carrying the 1-based line number.
Graph parse_edge_list(const std::string& text);
std::string write_edge_list(const Graph& g);

Labeling parse_labels(const std::string& text);
std::string write_labels(const Labeling& f);

/// Graphviz DOT. With a labeling, node captions show labels; vertices listed
/// in `report` violations are filled red.
std::string write_dot(const Graph& g, const Labeling* f = nullptr, const VerificationReport* report = nullptr);

std::string format_report(const VerificationReport& report);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace nprime

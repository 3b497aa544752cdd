#pragma once

#include <functional>
#include <string>
#include <vector>

#include "nprime/graph.hpp"
#include "nprime/search.hpp"

namespace nprime {

/// AHU encoding of a free tree, rooted at its center; for bicentral trees the
/// lexicographically smaller of the two rootings. Equal strings iff the
/// trees are isomorphic. Throws UsageError for non-trees.
std::string ahu_canonical(const Graph& t);

/// AHU encoding of t rooted at `root`.
std::string ahu_rooted(const Graph& t, Vertex root);

/// Centers of a tree (one or two vertices, ascending).
std::vector<Vertex> tree_centers(const Graph& t);

constexpr int kMaxEnumerationSize = 18;

/// Calls visit once per isomorphism class of trees on n vertices, in a fixed
/// order. Built from canonical level sequences of rooted trees, keeping only
/// the rooting at the center with the smallest encoding. 1 <= n <= 18.
void for_each_free_tree(int n, const std::function<void(const Graph&)>& visit);
std::vector<Graph> enumerate_free_trees(int n);

/// Independent generator: every tree on n-1 vertices extended by a leaf in
/// every position, deduplicated by ahu_canonical. Used to cross-check counts.
std::vector<Graph> enumerate_free_trees_by_extension(int n);

struct SizeReport {
  int n = 0;
  int tree_count = 0;
  int solved_count = 0;
  std::vector<std::string> failures;      // canonical encodings, sorted
  std::vector<Graph> failure_graphs;      // same order as failures
  std::vector<std::string> inconclusive;  // canonical encodings, sorted
  double seconds = 0.0;
};

struct ConjectureReport {
  std::vector<SizeReport> sizes;  // n = 1..max_n

  bool holds() const {
    for (const auto& s : sizes)
      if (!s.failures.empty()) return false;
    return true;
  }
};

/// Runs find_labeling on every free tree with 1..max_n vertices. Searches
/// over distinct trees run on up to `jobs` threads. on_failure, if given, is
/// called for each tree the search proves has no labeling.
ConjectureReport scan_conjecture(int max_n, const SearchConfig& cfg, int jobs = 1,
                                 const std::function<void(const Graph&)>& on_failure = {});

/// Plain-text table: n, trees, solved, failed, inconclusive, seconds.
std::string format_report(const ConjectureReport& report);

}  // namespace nprime

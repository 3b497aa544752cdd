#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "nprime/errors.hpp"

namespace nprime {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 1..n.
///
/// Immutable after construction. Edges are stored normalized (u < v) and
/// sorted; every adjacency list is sorted ascending.
class Graph {
 public:
  Graph() = default;

  /// Throws UsageError on n < 1, self-loops, duplicate edges or endpoints
  /// outside 1..n.
  Graph(int vertex_count, std::vector<Edge> edges);

  int vertex_count() const noexcept { return n_; }
  int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    return {adj_[v].data(), adj_[v].size()};
  }
  int degree(Vertex v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
  }
  bool has_edge(Vertex u, Vertex v) const;
  void check_vertex(Vertex v) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adj_;  // index 0 unused
};

/// Assignment of a label to every vertex; position v-1 holds the label of v.
/// Not validated on construction: verify() is the place bijectivity is checked.
class Labeling {
 public:
  Labeling() = default;
  explicit Labeling(std::vector<int> labels) : labels_(std::move(labels)) {}

  int size() const noexcept { return static_cast<int>(labels_.size()); }
  int operator[](Vertex v) const { return labels_[static_cast<std::size_t>(v - 1)]; }
  int& operator[](Vertex v) { return labels_[static_cast<std::size_t>(v - 1)]; }
  const std::vector<int>& values() const noexcept { return labels_; }

  bool is_bijection() const;

  friend bool operator==(const Labeling&, const Labeling&) = default;

 private:
  std::vector<int> labels_;
};

struct Violation {
  Vertex vertex = 0;
  std::vector<int> neighbor_labels;  // sorted ascending
  std::int64_t gcd_value = 0;
};

struct VerificationReport {
  bool ok = true;
  std::vector<Violation> violations;
  int checked_count = 0;  // vertices of degree >= 2
};

std::int64_t gcd_of(std::span<const std::int64_t> values);
std::int64_t gcd_of(std::initializer_list<std::int64_t> values);

std::vector<Vertex> neighborhood(const Graph& g, Vertex v);

/// Checks the neighborhood-gcd condition at every vertex of degree >= 2 and
/// reports all violations. Throws UsageError on a length mismatch and
/// LabelingInvalid when f is not a bijection onto {1..n}.
VerificationReport verify(const Graph& g, const Labeling& f);

bool is_tree(const Graph& g);
bool is_connected(const Graph& g);

}  // namespace nprime

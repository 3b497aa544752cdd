#include "nprime/graph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace nprime {

Graph::Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
  if (n_ < 1) throw UsageError("graph needs at least one vertex");
  for (auto& [u, v] : edges) {
    if (u < 1 || u > n_ || v < 1 || v > n_)
      throw UsageError("edge endpoint out of range: " + std::to_string(u) + "-" + std::to_string(v));
    if (u == v) throw UsageError("self-loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  if (auto it = std::adjacent_find(edges.begin(), edges.end()); it != edges.end())
    throw UsageError("duplicate edge " + std::to_string(it->first) + "-" + std::to_string(it->second));
  edges_ = std::move(edges);

  adj_.assign(static_cast<std::size_t>(n_) + 1, {});
  for (const auto& [u, v] : edges_) {
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());
}

void Graph::check_vertex(Vertex v) const {
  if (v < 1 || v > n_)
    throw UsageError("vertex " + std::to_string(v) + " out of range 1.." + std::to_string(n_));
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  const auto& list = adj_[u];
  return std::binary_search(list.begin(), list.end(), v);
}

bool Labeling::is_bijection() const {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int x : labels_) {
    if (x < 1 || x > n || seen[x]) return false;
    seen[x] = true;
  }
  return true;
}

std::int64_t gcd_of(std::span<const std::int64_t> values) {
  if (values.empty()) throw UsageError("gcd_of needs at least one value");
  std::int64_t g = 0;
  for (auto x : values) {
    if (x < 1) throw UsageError("gcd_of expects positive integers");
    g = std::gcd(g, x);
  }
  return g;
}

std::int64_t gcd_of(std::initializer_list<std::int64_t> values) {
  return gcd_of(std::span<const std::int64_t>(values.begin(), values.size()));
}

std::vector<Vertex> neighborhood(const Graph& g, Vertex v) {
  auto nb = g.neighbors(v);
  return {nb.begin(), nb.end()};
}

VerificationReport verify(const Graph& g, const Labeling& f) {
  if (f.size() != g.vertex_count())
    throw UsageError("labeling has " + std::to_string(f.size()) + " entries, graph has " +
                     std::to_string(g.vertex_count()) + " vertices");
  if (!f.is_bijection()) throw LabelingInvalid("labeling is not a bijection onto 1.." + std::to_string(f.size()));

  VerificationReport report;
  for (Vertex v = 1; v <= g.vertex_count(); ++v) {
    auto nb = g.neighbors(v);
    if (nb.size() < 2) continue;
    ++report.checked_count;
    std::int64_t d = 0;
    for (Vertex u : nb) d = std::gcd(d, static_cast<std::int64_t>(f[u]));
    if (d == 1) continue;
    Violation viol{v, {}, d};
    for (Vertex u : nb) viol.neighbor_labels.push_back(f[u]);
    std::sort(viol.neighbor_labels.begin(), viol.neighbor_labels.end());
    report.violations.push_back(std::move(viol));
  }
  report.ok = report.violations.empty();
  return report;
}

bool is_connected(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  std::vector<Vertex> stack{1};
  seen[1] = true;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex u : g.neighbors(v)) {
      if (seen[u]) continue;
      seen[u] = true;
      ++reached;
      stack.push_back(u);
    }
  }
  return reached == n;
}

bool is_tree(const Graph& g) {
  return g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

}  // namespace nprime

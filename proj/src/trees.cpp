#include "nprime/trees.hpp"

#include "nprime/families.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <exception>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

namespace nprime {

std::string ahu_rooted(const Graph& t, Vertex root) {
  const int n = t.vertex_count();
  t.check_vertex(root);
  std::vector<Vertex> order{root}, parent(static_cast<std::size_t>(n) + 1, 0);
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex u : t.neighbors(order[i]))
      if (u != parent[order[i]]) {
        parent[u] = order[i];
        order.push_back(u);
      }

  std::vector<std::vector<std::string>> kids(static_cast<std::size_t>(n) + 1);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const Vertex v = *it;
    auto& parts = kids[v];
    std::sort(parts.begin(), parts.end());
    std::string s = "(";
    for (auto& p : parts) s += p;
    s += ')';
    parts.clear();
    parts.shrink_to_fit();
    if (v == root) return s;
    kids[parent[v]].push_back(std::move(s));
  }
  return {};
}

std::vector<Vertex> tree_centers(const Graph& t) {
  const int n = t.vertex_count();
  if (n == 1) return {1};
  std::vector<int> deg(static_cast<std::size_t>(n) + 1);
  std::vector<Vertex> layer;
  for (Vertex v = 1; v <= n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex u : t.neighbors(v))
        if (--deg[u] == 1) next.push_back(u);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string ahu_canonical(const Graph& t) {
  if (!is_tree(t)) throw UsageError("ahu_canonical needs a tree");
  std::string best;
  for (Vertex c : tree_centers(t)) {
    auto s = ahu_rooted(t, c);
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

namespace {

Graph graph_from_levels(const std::vector<int>& level) {
  const int n = static_cast<int>(level.size());
  std::vector<Edge> edges;
  std::vector<Vertex> last_at_depth(static_cast<std::size_t>(n) + 1, 0);
  last_at_depth[0] = 1;
  for (int i = 1; i < n; ++i) {
    const int d = level[static_cast<std::size_t>(i)];
    edges.emplace_back(last_at_depth[static_cast<std::size_t>(d - 1)], i + 1);
    last_at_depth[static_cast<std::size_t>(d)] = i + 1;
  }
  return Graph(n, std::move(edges));
}

bool rooted_at_canonical_center(const Graph& t) {
  const auto centers = tree_centers(t);
  if (centers.front() != 1 && centers.back() != 1) return false;
  if (centers.size() == 1) return true;
  const Vertex other = centers.front() == 1 ? centers.back() : centers.front();
  return ahu_rooted(t, 1) <= ahu_rooted(t, other);
}

}  // namespace

void for_each_free_tree(int n, const std::function<void(const Graph&)>& visit) {
  if (n < 1 || n > kMaxEnumerationSize)
    throw UsageError("tree enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationSize));
  // Canonical level sequences of rooted trees (root depth 0), generated by
  // the constant-time successor rule starting from the path.
  std::vector<int> level(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) level[static_cast<std::size_t>(i)] = i;
  for (;;) {
    const Graph t = graph_from_levels(level);
    if (rooted_at_canonical_center(t)) visit(t);

    int p = n - 1;
    while (p > 0 && level[static_cast<std::size_t>(p)] <= 1) --p;
    if (p == 0) break;
    int q = p - 1;
    while (level[static_cast<std::size_t>(q)] != level[static_cast<std::size_t>(p)] - 1) --q;
    for (int i = p; i < n; ++i) level[static_cast<std::size_t>(i)] = level[static_cast<std::size_t>(i - (p - q))];
  }
}

std::vector<Graph> enumerate_free_trees(int n) {
  std::vector<Graph> out;
  for_each_free_tree(n, [&](const Graph& t) { out.push_back(t); });
  return out;
}

std::vector<Graph> enumerate_free_trees_by_extension(int n) {
  if (n < 1 || n > kMaxEnumerationSize)
    throw UsageError("tree enumeration supports 1 <= n <= " + std::to_string(kMaxEnumerationSize));
  std::vector<Graph> layer{Graph(1, {})};
  for (int size = 2; size <= n; ++size) {
    std::map<std::string, Graph> seen;
    for (const auto& t : layer)
      for (Vertex v = 1; v <= t.vertex_count(); ++v) {
        Graph grown = attach_pendant(t, v);
        seen.try_emplace(ahu_canonical(grown), std::move(grown));
      }
    layer.clear();
    for (auto& [code, g] : seen) layer.push_back(std::move(g));
  }
  return layer;
}

ConjectureReport scan_conjecture(int max_n, const SearchConfig& cfg, int jobs,
                                 const std::function<void(const Graph&)>& on_failure) {
  if (max_n < 1 || max_n > kMaxEnumerationSize)
    throw UsageError("scan supports 1 <= max_n <= " + std::to_string(kMaxEnumerationSize));
  jobs = std::max(1, jobs);
  ConjectureReport report;
  for (int n = 1; n <= max_n; ++n) {
    const auto start = std::chrono::steady_clock::now();
    const auto trees = enumerate_free_trees(n);
    std::vector<SearchStatus> status(trees.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
      for (std::size_t i = next++; i < trees.size(); i = next++) {
        try {
          auto outcome = find_labeling(trees[i], cfg);
          if (outcome.status == SearchStatus::Found && !verify(trees[i], *outcome.labeling).ok)
            throw std::logic_error("search returned a labeling that fails verification");
          status[i] = outcome.status;
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    };
    if (jobs == 1) {
      worker();
    } else {
      std::vector<std::jthread> pool;
      for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    }
    if (error) std::rethrow_exception(error);

    SizeReport size;
    size.n = n;
    size.tree_count = static_cast<int>(trees.size());
    std::vector<std::pair<std::string, std::size_t>> failed;
    for (std::size_t i = 0; i < trees.size(); ++i) {
      switch (status[i]) {
        case SearchStatus::Found: ++size.solved_count; break;
        case SearchStatus::Exhausted: failed.emplace_back(ahu_canonical(trees[i]), i); break;
        case SearchStatus::Inconclusive: size.inconclusive.push_back(ahu_canonical(trees[i])); break;
      }
    }
    std::sort(failed.begin(), failed.end());
    std::sort(size.inconclusive.begin(), size.inconclusive.end());
    for (auto& [code, i] : failed) {
      size.failures.push_back(code);
      size.failure_graphs.push_back(trees[i]);
      if (on_failure) on_failure(trees[i]);
    }
    size.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    report.sizes.push_back(std::move(size));
  }
  return report;
}

std::string format_report(const ConjectureReport& report) {
  std::string out = "n\ttrees\tsolved\tfailed\tinconclusive\tseconds\n";
  char buf[128];
  for (const auto& s : report.sizes) {
    std::snprintf(buf, sizeof buf, "%d\t%d\t%d\t%zu\t%zu\t%.3f\n", s.n, s.tree_count, s.solved_count,
                  s.failures.size(), s.inconclusive.size(), s.seconds);
    out += buf;
  }
  return out;
}

}  // namespace nprime

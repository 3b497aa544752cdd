#include "nprime/labelers.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "nprime/search.hpp"

namespace nprime {
namespace {

template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };

bool is_pow2(long long x) { return x > 0 && (x & (x - 1)) == 0; }

std::string pair_text(int k, int n) { return "(k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")"; }

}  // namespace

Labeling label_path(int n) {
  if (n < 1) throw InvalidSpec("path: need n >= 1");
  return Labeling(shifted_path_labels({ShiftKind::InteriorMin, 0, n}));
}

std::vector<int> shifted_path_labels(const ShiftVariant& v) {
  if (v.offset < 0) throw UsageError("shifted path labels: offset must be >= 0");
  if (v.length < 1) throw UsageError("shifted path labels: length must be >= 1");
  const int N = v.offset, m = v.length;
  std::vector<int> out(static_cast<std::size_t>(m));
  for (int i = 1; i <= m; ++i) {
    const bool odd = i % 2 == 1;
    int label;
    if (v.kind == ShiftKind::InteriorMin)
      label = odd ? N + m / 2 + (i + 1) / 2 : N + i / 2;
    else
      label = odd ? N + (i + 1) / 2 : N + (m + 1) / 2 + i / 2;
    out[static_cast<std::size_t>(i - 1)] = label;
  }
  return out;
}

Labeling label_gear(int n) {
  if (n < 3) throw InvalidSpec("gear: need n >= 3");
  std::vector<int> labels(static_cast<std::size_t>(2 * n + 1));
  std::iota(labels.begin(), labels.end(), 1);
  Labeling f(std::move(labels));
  if (n % 3 == 1) std::swap(f[2 * n - 1], f[2 * n + 1]);
  return f;
}

bool snake_supported(int k, int n) {
  if (k < 3 || n < 2) return false;
  if (k <= 5) return true;
  if (n < 3) return false;
  if (k % 4 == 1 && n - 1 >= 2 && is_pow2(n - 1)) return true;
  if (k % 4 == 0 && n >= 4 && is_pow2(n)) return true;
  if (k % 4 == 0 && n - 1 >= 2 && is_pow2(n - 1)) return true;
  if (k - 2 >= 4 && is_pow2(k - 2) && n % 4 == 3) return true;
  if (k % 2 == 0 && n == 3) return true;
  if (k - 3 >= 4 && is_pow2(k - 3) && n % 2 == 0) return true;
  return false;
}

Labeling label_snake(int k, int n) {
  if (k < 3 || n < 2) throw InvalidSpec("snake: need k >= 3 and n >= 2");
  if (!snake_supported(k, n))
    throw UnsupportedParameters("no polygonal-snake construction for " + pair_text(k, n));
  const int m = (n - 1) * (k - 1) + 1;
  if (k >= 6) return label_path(m);

  std::vector<int> labels(static_cast<std::size_t>(m));
  std::iota(labels.begin(), labels.end(), 1);
  Labeling f(std::move(labels));
  if (k == 4) {
    // u_i, v_i, w_i sit at 3i-2, 3i-1, 3i and take 3i-2, 3i, 3i-1.
    for (int i = 1; i < n; ++i) std::swap(f[3 * i - 1], f[3 * i]);
  } else if (k == 5) {
    // u_i, v_i, w_i, x_i sit at 4i-3 .. 4i and take 4i-3, 4i-1, 4i, 4i-2.
    for (int i = 1; i < n; ++i) {
      f[4 * i - 2] = 4 * i - 1;
      f[4 * i - 1] = 4 * i;
      f[4 * i] = 4 * i - 2;
      if (i % 3 == 0) {
        f[4 * i - 3] = 4 * i - 1;
        f[4 * i - 2] = 4 * i - 3;
      }
    }
  }
  return f;
}

Labeled contract_one_max(const Graph& g, const Labeling& f, Vertex u1, Vertex u2) {
  const int n = g.vertex_count();
  if (u1 < 1 || u1 > n || u2 < 1 || u2 > n) throw PreconditionViolated("contract: vertex out of range");
  if (u1 == u2) throw PreconditionViolated("contract: u1 and u2 must be distinct");
  if (f.size() != n || !verify(g, f).ok)
    throw PreconditionViolated("contract: input labeling is not neighborhood-prime");
  if (f[u1] != 1) throw PreconditionViolated("contract: f(u1) must be 1");
  if (f[u2] != n) throw PreconditionViolated("contract: f(u2) must be n");
  if (g.has_edge(u1, u2)) throw PreconditionViolated("contract: u1 and u2 are adjacent");
  if (g.degree(u1) <= 1 && g.degree(u2) <= 1)
    throw PreconditionViolated("contract: u1 or u2 must have degree > 1");

  Graph merged = contract_vertices(g, u1, u2);
  const Vertex keep = std::min(u1, u2), drop = std::max(u1, u2);
  std::vector<int> labels;
  labels.reserve(static_cast<std::size_t>(n) - 1);
  for (Vertex v = 1; v <= n; ++v) {
    if (v == drop) continue;
    labels.push_back(v == keep ? 1 : f[v]);
  }
  return {std::move(merged), Labeling(std::move(labels))};
}

Labeling label_star_gon(int k, int n) {
  if (k < 3 || k > 5) throw UnsupportedParameters("star gon labeling needs k in {3,4,5}, got k=" + std::to_string(k));
  if (n < 3) throw InvalidSpec("stargon: need n >= 3");
  const Graph snake_graph = generate(SnakeSpec{k, n + 1});
  const Labeling f = label_snake(k, n + 1);
  const Vertex first = snake_base_vertex(k, 1), last = snake_base_vertex(k, n + 1);
  return contract_one_max(snake_graph, f, first, last).labeling;
}

Labeling label_book5(int n) {
  if (n < 1) throw InvalidSpec("book: need n >= 1");
  // u1 = 1, u2 = 2, page i is (v_i, w_i, x_i) = (3i, 3i+1, 3i+2).
  Labeling f(std::vector<int>(static_cast<std::size_t>(3 * n + 2)));
  f[1] = 3;
  f[2] = 1;
  f[3] = 2;
  f[4] = 4;
  f[5] = 5;
  for (int i = 2; i <= n; ++i) {
    f[3 * i] = 3 * i;
    f[3 * i + 1] = i % 2 ? 3 * i + 1 : 3 * i + 2;
    f[3 * i + 2] = i % 2 ? 3 * i + 2 : 3 * i + 1;
  }
  return f;
}

Labeling label_mobius(int n) {
  if (n < 3) throw InvalidSpec("mobius: need n >= 3");
  Labeling f(std::vector<int>(static_cast<std::size_t>(2 * n)));
  for (int i = 1; i <= n; ++i) {
    f[i] = 2 * i - 1;
    f[n + i] = 2 * i;
  }
  return f;
}

Labeled extend_pendant(const Graph& g, const Labeling& f, Vertex v) {
  if (v < 1 || v > g.vertex_count()) throw PreconditionViolated("extend: vertex out of range");
  if (g.degree(v) <= 1) throw PreconditionViolated("extend: deg(v) must be > 1");
  if (f.size() != g.vertex_count() || !verify(g, f).ok)
    throw PreconditionViolated("extend: input labeling is not neighborhood-prime");
  auto labels = f.values();
  labels.push_back(g.vertex_count() + 1);
  return {attach_pendant(g, v), Labeling(std::move(labels))};
}

Labeling label_caterpillar(const std::vector<int>& pendant_counts) {
  const int spine = static_cast<int>(pendant_counts.size()) + 2;
  Labeled cur{generate(PathSpec{spine}), label_path(spine)};
  for (std::size_t j = 0; j < pendant_counts.size(); ++j) {
    if (pendant_counts[j] < 0) throw InvalidSpec("caterpillar: pendant counts must be >= 0");
    for (int c = 0; c < pendant_counts[j]; ++c) cur = extend_pendant(cur.graph, cur.labeling, static_cast<Vertex>(j) + 2);
  }
  return std::move(cur.labeling);
}

Labeling label_spider(const std::vector<int>& leg_lengths) {
  validate(SpiderSpec{leg_lengths});
  const std::size_t legs = leg_lengths.size();

  std::vector<Vertex> leg_start(legs);
  Vertex next = 2;
  for (std::size_t j = 0; j < legs; ++j) {
    leg_start[j] = next;
    next += leg_lengths[j];
  }

  // One odd leg goes first so the center sees label 2 and, on the following
  // leg, an odd label. With no odd leg the last leg is reflected instead.
  std::vector<std::size_t> order(legs);
  std::iota(order.begin(), order.end(), 0);
  auto odd = std::find_if(order.begin(), order.end(), [&](std::size_t j) { return leg_lengths[j] % 2 == 1; });
  const bool all_even = odd == order.end();
  if (!all_even) std::rotate(order.begin(), odd, odd + 1);

  Labeling f(std::vector<int>(static_cast<std::size_t>(next - 1)));
  f[1] = 1;
  int used = 1;
  for (std::size_t pos = 0; pos < legs; ++pos) {
    const std::size_t j = order[pos];
    auto labels = shifted_path_labels({ShiftKind::HeadMin, used, leg_lengths[j]});
    if (all_even && pos + 1 == legs) std::reverse(labels.begin(), labels.end());
    for (int i = 0; i < leg_lengths[j]; ++i) f[leg_start[j] + i] = labels[static_cast<std::size_t>(i)];
    used += leg_lengths[j];
  }
  return f;
}

Labeling label_banana(int n, int k) {
  if (n < 3 || k < 4)
    throw UnsupportedParameters("banana labeling needs n >= 3 and k >= 4, got " + pair_text(k, n));
  Labeling f(std::vector<int>(static_cast<std::size_t>(n * k + 1)));
  f[1] = 1;
  for (int i = 1; i <= n; ++i) {
    const Vertex u = 2 + (i - 1) * k, w = u + 1;
    f[u] = i + 1;
    f[w] = (i - 1) * (k - 1) + n + 2;
    for (int j = 0; j < k - 2; ++j) f[w + 1 + j] = f[w] + 1 + j;
  }
  return f;
}

Labeling label_firecracker(int n, int k) {
  if (n < 1 || k < 3) throw UnsupportedParameters("firecracker labeling needs n >= 1 and k >= 3");
  const auto path = label_path(n);
  const int p = static_cast<int>(bertrand_prime(static_cast<std::uint64_t>(n)));
  const auto match = coprime_matching(n);

  Labeling f(std::vector<int>(static_cast<std::size_t>(3 * n)));
  int next_v = n + 1;
  for (int i = 1; i <= n; ++i) {
    f[i] = path[i];
    if (i == n) {
      f[n + i] = p;
    } else {
      if (next_v == p) ++next_v;
      f[n + i] = next_v++;
    }
    f[2 * n + i] = match[path[i]];
  }

  Labeled cur{generate(FirecrackerSpec{n, 3}), std::move(f)};
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j < k - 3; ++j) cur = extend_pendant(cur.graph, cur.labeling, n + i);
  return std::move(cur.labeling);
}

// ---------------------------------------------------------------------------
// Path decomposition labeling for trees

namespace {

class PathCover {
 public:
  explicit PathCover(const Graph& t)
      : t_(t), on_path_(static_cast<std::size_t>(t.vertex_count()) + 1, false),
        f_(std::vector<int>(static_cast<std::size_t>(t.vertex_count()), 0)) {}

  bool is_leaf(Vertex v) const { return t_.degree(v) <= 1; }

  // Walks from `from` (already claimed) into `start`, always stepping to the
  // lowest-numbered unclaimed neighbor, until a leaf is reached.
  std::vector<Vertex> arm(Vertex start, std::vector<bool>& claimed) const {
    std::vector<Vertex> out{start};
    claimed[start] = true;
    Vertex cur = start;
    while (!is_leaf(cur)) {
      Vertex step = 0;
      for (Vertex u : t_.neighbors(cur))
        if (!claimed[u] && !on_path_[u]) {
          step = u;
          break;
        }
      if (step == 0) throw UnsupportedStructure("path growth got stuck at vertex " + std::to_string(cur));
      claimed[step] = true;
      out.push_back(step);
      cur = step;
    }
    return out;
  }

  // Leaf-to-leaf path through v, using two unclaimed neighbors.
  std::vector<Vertex> grow_through(Vertex v) const {
    std::vector<bool> claimed(on_path_.size(), false);
    claimed[v] = true;
    std::vector<Vertex> free_nb;
    for (Vertex u : t_.neighbors(v))
      if (!on_path_[u]) free_nb.push_back(u);
    if (free_nb.size() < 2)
      throw UnsupportedStructure("vertex " + std::to_string(v) + " has fewer than two unused neighbors");
    auto left = arm(free_nb[0], claimed);
    auto right = arm(free_nb[1], claimed);
    std::vector<Vertex> path(left.rbegin(), left.rend());
    path.push_back(v);
    path.insert(path.end(), right.begin(), right.end());
    return path;
  }

  // Extends a chain of vertices at both ends out to leaves.
  std::vector<Vertex> extend_chain(std::vector<Vertex> chain) const {
    std::vector<bool> claimed(on_path_.size(), false);
    for (Vertex v : chain) claimed[v] = true;
    auto outward = [&](Vertex end) -> std::vector<Vertex> {
      for (Vertex u : t_.neighbors(end))
        if (!claimed[u]) return arm(u, claimed);
      return {};
    };
    auto head = outward(chain.front());
    auto tail = outward(chain.back());
    std::vector<Vertex> path(head.rbegin(), head.rend());
    path.insert(path.end(), chain.begin(), chain.end());
    path.insert(path.end(), tail.begin(), tail.end());
    return path;
  }

  void place(const std::vector<Vertex>& path) {
    const int m = static_cast<int>(path.size());
    const auto labels = shifted_path_labels({ShiftKind::InteriorMin, used_, m});
    for (int i = 0; i < m; ++i) {
      f_[path[static_cast<std::size_t>(i)]] = labels[static_cast<std::size_t>(i)];
      on_path_[path[static_cast<std::size_t>(i)]] = true;
    }
    used_ += m;
    for (int i = 1; i + 1 < m; ++i)
      for (Vertex u : t_.neighbors(path[static_cast<std::size_t>(i)]))
        if (!on_path_[u] && !is_leaf(u)) queue_.push_back(u);
  }

  Labeling finish(std::vector<Vertex> first_path) {
    place(first_path);
    while (!queue_.empty()) {
      const Vertex v = queue_.front();
      queue_.pop_front();
      if (on_path_[v]) continue;
      place(grow_through(v));
    }
    for (Vertex v = 1; v <= t_.vertex_count(); ++v)
      if (!on_path_[v]) f_[v] = ++used_;
    return std::move(f_);
  }

 private:
  const Graph& t_;
  std::vector<bool> on_path_;
  Labeling f_;
  int used_ = 0;
  std::deque<Vertex> queue_;
};

// Degree-2 vertices of a tree, arranged as a single chain, or nullopt when
// no single path contains them all.
std::optional<std::vector<Vertex>> bivalent_chain(const Graph& t) {
  const int n = t.vertex_count();
  std::vector<Vertex> terminals;
  for (Vertex v = 1; v <= n; ++v)
    if (t.degree(v) == 2) terminals.push_back(v);
  if (terminals.empty()) return std::vector<Vertex>{};

  // Prune non-terminal leaves repeatedly; what remains is the minimal
  // subtree spanning the terminals.
  std::vector<int> deg(static_cast<std::size_t>(n) + 1);
  std::vector<bool> terminal(static_cast<std::size_t>(n) + 1, false), gone(static_cast<std::size_t>(n) + 1, false);
  for (Vertex v : terminals) terminal[v] = true;
  std::vector<Vertex> stack;
  for (Vertex v = 1; v <= n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1 && !terminal[v]) stack.push_back(v);
  }
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    if (gone[v]) continue;
    gone[v] = true;
    for (Vertex u : t.neighbors(v))
      if (!gone[u] && --deg[u] <= 1 && !terminal[u]) stack.push_back(u);
  }
  Vertex end = 0;
  for (Vertex v = 1; v <= n; ++v) {
    if (gone[v]) continue;
    if (deg[v] > 2) return std::nullopt;
    if (deg[v] <= 1 && end == 0) end = v;
  }
  std::vector<Vertex> chain{end};
  Vertex prev = 0, cur = end;
  for (;;) {
    Vertex step = 0;
    for (Vertex u : t.neighbors(cur))
      if (!gone[u] && u != prev) step = u;
    if (step == 0) break;
    chain.push_back(step);
    prev = cur;
    cur = step;
  }
  return chain;
}

}  // namespace

Labeling label_bivalent_free(const Graph& t) {
  if (!is_tree(t)) throw UnsupportedStructure("graph is not a tree");
  const int n = t.vertex_count();
  if (n <= 2) return label_path(n);

  auto chain = bivalent_chain(t);
  if (!chain) throw UnsupportedStructure("degree-2 vertices do not lie on a single leaf-to-leaf path");

  PathCover cover(t);
  std::vector<Vertex> first;
  if (chain->empty()) {
    Vertex start = 1;
    while (cover.is_leaf(start)) ++start;
    first = cover.grow_through(start);
  } else {
    first = cover.extend_chain(*chain);
  }
  return cover.finish(std::move(first));
}

Labeling label_full_binary(const Graph& t) {
  if (!is_tree(t)) throw UnsupportedStructure("graph is not a tree");
  const int n = t.vertex_count();
  // Level order: BFS from 1 visiting children ascending reproduces 1..n.
  std::vector<Vertex> parent(static_cast<std::size_t>(n) + 1, 0);
  std::deque<Vertex> queue{1};
  Vertex expected = 1;
  bool full = true;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    if (v != expected++) throw UnsupportedStructure("tree is not in level-order numbering");
    int children = 0;
    for (Vertex u : t.neighbors(v)) {
      if (u == parent[v]) continue;
      parent[u] = v;
      queue.push_back(u);
      ++children;
    }
    if (children > 2) throw UnsupportedStructure("vertex " + std::to_string(v) + " has more than two children");
    if (children == 1) full = false;
  }
  if (!full) return label_bivalent_free(t);
  std::vector<int> labels(static_cast<std::size_t>(n));
  std::iota(labels.begin(), labels.end(), 1);
  return Labeling(std::move(labels));
}

Labeled label_family(const FamilySpec& spec) {
  Graph g = generate(spec);
  Labeling f = std::visit(
      overloaded{
          [](const PathSpec& s) { return label_path(s.n); },
          [](const CycleSpec&) -> Labeling {
            throw UnsupportedParameters("no constructive labeling for cycles");
          },
          [](const GearSpec& s) { return label_gear(s.n); },
          [](const SnakeSpec& s) { return label_snake(s.k, s.n); },
          [](const StarGonSpec& s) { return label_star_gon(s.k, s.n); },
          [](const BookSpec& s) -> Labeling {
            if (s.k != 5) throw UnsupportedParameters("book labeling exists only for k=5");
            return label_book5(s.n);
          },
          [](const MobiusSpec& s) { return label_mobius(s.n); },
          [](const CaterpillarSpec& s) { return label_caterpillar(s.pendant_counts); },
          [](const SpiderSpec& s) { return label_spider(s.leg_lengths); },
          [](const BananaSpec& s) { return label_banana(s.n, s.k); },
          [](const FirecrackerSpec& s) -> Labeling {
            if (s.k == 1) return label_path(s.n);
            // Path plus one pendant per vertex: its degree-2 vertices are the
            // two path ends, so the tree procedure applies.
            if (s.k == 2) return label_bivalent_free(generate(FirecrackerSpec{s.n, 2}));
            return label_firecracker(s.n, s.k);
          },
          [&g](const FullKArySpec&) { return label_bivalent_free(g); },
          [&g](const CayleySpec&) { return label_bivalent_free(g); },
          [&g](const FullBinarySpec&) { return label_full_binary(g); },
          [&g](const CompleteBinarySpec&) { return label_full_binary(g); },
          [&g](const RandomTreeSpec&) {
            try {
              return label_bivalent_free(g);
            } catch (const UnsupportedStructure& e) {
              throw UnsupportedParameters(e.what());
            }
          },
      },
      spec);
  return {std::move(g), std::move(f)};
}

}  // namespace nprime

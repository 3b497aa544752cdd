#include "nprime/families.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <limits>
#include <random>
#include <set>
#include <sstream>

namespace nprime {
namespace {

constexpr std::int64_t kMaxVertices = 10'000'000;

template <class... Ts>
struct overloaded : Ts... { using Ts::operator()...; };

void require(bool cond, const std::string& what) {
  if (!cond) throw InvalidSpec(what);
}

void require_size(std::int64_t vertices) {
  require(vertices <= kMaxVertices, "family would have " + std::to_string(vertices) +
                                        " vertices (limit " + std::to_string(kMaxVertices) + ")");
}

// Level-order construction shared by the k-ary, Cayley and binary shapes.
// children_of(is_root) gives the child count of an internal node.
template <class ChildCount>
Graph tree_from_shape(const std::vector<bool>& shape, ChildCount children_of) {
  std::vector<Edge> edges;
  std::deque<Vertex> queue{1};
  Vertex next = 2;
  std::size_t pos = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    bool internal = pos < shape.size() && shape[pos];
    ++pos;
    if (!internal) continue;
    const int kids = children_of(v == 1);
    require_size(static_cast<std::int64_t>(next) + kids);
    for (int c = 0; c < kids; ++c) {
      edges.emplace_back(v, next);
      queue.push_back(next++);
    }
  }
  require(pos >= shape.size(), "shape descriptor has " + std::to_string(shape.size()) +
                                   " entries but the tree has only " + std::to_string(pos) + " nodes");
  return Graph(next - 1, std::move(edges));
}

Graph snake(int k, int n) {
  const int m = (n - 1) * (k - 1) + 1;
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n - 1) * k);
  for (Vertex i = 1; i < m; ++i) edges.emplace_back(i, i + 1);
  for (int i = 0; i + 2 <= n; ++i) {
    Vertex a = i * (k - 1) + 1, b = (i + 1) * (k - 1) + 1;
    edges.emplace_back(a, b);
  }
  return Graph(m, std::move(edges));
}

}  // namespace

void validate(const FamilySpec& spec) {
  std::visit(
      overloaded{
          [](const PathSpec& s) { require(s.n >= 1, "path: need n >= 1"); require_size(s.n); },
          [](const CycleSpec& s) { require(s.n >= 3, "cycle: need n >= 3"); require_size(s.n); },
          [](const GearSpec& s) {
            require(s.n >= 3, "gear: need n >= 3");
            require_size(2 * static_cast<std::int64_t>(s.n) + 1);
          },
          [](const SnakeSpec& s) {
            require(s.k >= 3, "snake: need k >= 3");
            require(s.n >= 2, "snake: need n >= 2");
            require_size((static_cast<std::int64_t>(s.n) - 1) * (s.k - 1) + 1);
          },
          [](const StarGonSpec& s) {
            require(s.k >= 3, "stargon: need k >= 3");
            require(s.n >= 3, "stargon: need n >= 3");
            require_size(static_cast<std::int64_t>(s.n) * (s.k - 1));
          },
          [](const BookSpec& s) {
            require(s.k >= 3 && s.k <= 5, "book: need k in {3,4,5}");
            require(s.n >= 1, "book: need n >= 1");
            require_size(static_cast<std::int64_t>(s.n) * (s.k - 2) + 2);
          },
          [](const MobiusSpec& s) {
            require(s.n >= 3, "mobius: need n >= 3");
            require_size(2 * static_cast<std::int64_t>(s.n));
          },
          [](const CaterpillarSpec& s) {
            std::int64_t total = static_cast<std::int64_t>(s.pendant_counts.size()) + 2;
            for (int c : s.pendant_counts) {
              require(c >= 0, "caterpillar: pendant counts must be >= 0");
              total += c;
            }
            require_size(total);
          },
          [](const SpiderSpec& s) {
            require(s.leg_lengths.size() >= 3, "spider: need at least 3 legs");
            std::int64_t total = 1;
            for (int len : s.leg_lengths) {
              require(len >= 1, "spider: leg lengths must be >= 1");
              total += len;
            }
            require_size(total);
          },
          [](const BananaSpec& s) {
            require(s.n >= 1, "banana: need n >= 1");
            require(s.k >= 3, "banana: need k >= 3");
            require_size(static_cast<std::int64_t>(s.n) * s.k + 1);
          },
          [](const FirecrackerSpec& s) {
            require(s.n >= 1, "firecracker: need n >= 1");
            require(s.k >= 1, "firecracker: need k >= 1");
            require_size(static_cast<std::int64_t>(s.n) * s.k);
          },
          [](const FullKArySpec& s) { require(s.k >= 2, "kary: need k >= 2"); },
          [](const CayleySpec& s) { require(s.k >= 2, "cayley: need k >= 2"); },
          [](const FullBinarySpec&) {},
          [](const CompleteBinarySpec& s) {
            require(s.n_nodes >= 1, "completebinary: need n_nodes >= 1");
            require_size(s.n_nodes);
          },
          [](const RandomTreeSpec& s) { require(s.n >= 1, "random: need n >= 1"); require_size(s.n); },
      },
      spec);
}

Graph generate(const FamilySpec& spec) {
  validate(spec);
  return std::visit(
      overloaded{
          [](const PathSpec& s) {
            std::vector<Edge> e;
            for (Vertex i = 1; i < s.n; ++i) e.emplace_back(i, i + 1);
            return Graph(s.n, std::move(e));
          },
          [](const CycleSpec& s) {
            std::vector<Edge> e;
            for (Vertex i = 1; i < s.n; ++i) e.emplace_back(i, i + 1);
            e.emplace_back(1, s.n);
            return Graph(s.n, std::move(e));
          },
          [](const GearSpec& s) {
            const int rim_last = 2 * s.n + 1;
            std::vector<Edge> e;
            for (Vertex i = 2; i < rim_last; ++i) e.emplace_back(i, i + 1);
            e.emplace_back(2, rim_last);
            for (Vertex i = 3; i <= rim_last; i += 2) e.emplace_back(1, i);
            return Graph(rim_last, std::move(e));
          },
          [](const SnakeSpec& s) { return snake(s.k, s.n); },
          [](const StarGonSpec& s) {
            const int m = s.n * (s.k - 1) + 1;
            return contract_vertices(snake(s.k, s.n + 1), 1, m);
          },
          [](const BookSpec& s) {
            const int inner = s.k - 2;
            std::vector<Edge> e{{1, 2}};
            Vertex next = 3;
            for (int page = 0; page < s.n; ++page) {
              Vertex prev = 1;
              for (int j = 0; j < inner; ++j) {
                e.emplace_back(prev, next);
                prev = next++;
              }
              e.emplace_back(prev, 2);
            }
            return Graph(next - 1, std::move(e));
          },
          [](const MobiusSpec& s) {
            const int n = s.n;
            std::vector<Edge> e;
            for (int i = 1; i < n; ++i) {
              e.emplace_back(i, i + 1);
              e.emplace_back(n + i, n + i + 1);
            }
            for (int i = 1; i <= n; ++i) e.emplace_back(i, n + i);
            e.emplace_back(n + 1, n);  // v_1 u_n
            e.emplace_back(1, 2 * n);  // u_1 v_n
            return Graph(2 * n, std::move(e));
          },
          [](const CaterpillarSpec& s) {
            const int spine = static_cast<int>(s.pendant_counts.size()) + 2;
            std::vector<Edge> e;
            for (Vertex i = 1; i < spine; ++i) e.emplace_back(i, i + 1);
            Vertex next = spine + 1;
            for (std::size_t j = 0; j < s.pendant_counts.size(); ++j)
              for (int c = 0; c < s.pendant_counts[j]; ++c) e.emplace_back(static_cast<Vertex>(j) + 2, next++);
            return Graph(next - 1, std::move(e));
          },
          [](const SpiderSpec& s) {
            std::vector<Edge> e;
            Vertex next = 2;
            for (int len : s.leg_lengths) {
              Vertex prev = 1;
              for (int j = 0; j < len; ++j) {
                e.emplace_back(prev, next);
                prev = next++;
              }
            }
            return Graph(next - 1, std::move(e));
          },
          [](const BananaSpec& s) {
            std::vector<Edge> e;
            for (int i = 1; i <= s.n; ++i) {
              const Vertex u = 2 + (i - 1) * s.k;
              const Vertex w = u + 1;
              e.emplace_back(1, u);
              e.emplace_back(u, w);
              for (int j = 0; j < s.k - 2; ++j) e.emplace_back(w, w + 1 + j);
            }
            return Graph(s.n * s.k + 1, std::move(e));
          },
          [](const FirecrackerSpec& s) {
            const int n = s.n, k = s.k;
            std::vector<Edge> e;
            for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
            if (k >= 2)
              for (int i = 1; i <= n; ++i) e.emplace_back(i, n + i);
            if (k >= 3)
              for (int i = 1; i <= n; ++i) e.emplace_back(n + i, 2 * n + i);
            Vertex next = 3 * n + 1;
            for (int i = 1; i <= n; ++i)
              for (int j = 0; j < k - 3; ++j) e.emplace_back(n + i, next++);
            return Graph(n * k, std::move(e));
          },
          [](const FullKArySpec& s) { return tree_from_shape(s.shape, [&](bool) { return s.k; }); },
          [](const CayleySpec& s) {
            return tree_from_shape(s.shape, [&](bool root) { return root ? s.k : s.k - 1; });
          },
          [](const FullBinarySpec& s) { return tree_from_shape(s.shape, [](bool) { return 2; }); },
          [](const CompleteBinarySpec& s) {
            std::vector<Edge> e;
            for (Vertex v = 2; v <= s.n_nodes; ++v) e.emplace_back(v / 2, v);
            return Graph(s.n_nodes, std::move(e));
          },
          [](const RandomTreeSpec& s) { return random_tree(s.n, s.seed); },
      },
      spec);
}

Graph tree_from_pruefer(std::span<const int> seq) {
  const int n = static_cast<int>(seq.size()) + 2;
  std::vector<int> degree(static_cast<std::size_t>(n) + 1, 1);
  for (int x : seq) {
    if (x < 1 || x > n) throw UsageError("pruefer entry out of range");
    ++degree[x];
  }
  // Linear-time decoding: `ptr` walks the smallest leaf candidate.
  std::vector<Edge> edges;
  int ptr = 1;
  while (degree[ptr] != 1) ++ptr;
  int leaf = ptr;
  for (int x : seq) {
    edges.emplace_back(leaf, x);
    if (--degree[x] == 1 && x < ptr) {
      leaf = x;
    } else {
      ++ptr;
      while (degree[ptr] != 1) ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(leaf, n);
  return Graph(n, std::move(edges));
}

Graph random_tree(int n, std::uint64_t seed) {
  if (n < 1) throw InvalidSpec("random: need n >= 1");
  if (n == 1) return Graph(1, {});
  if (n == 2) return Graph(2, {{1, 2}});
  std::mt19937_64 rng(seed);
  // Rejection sampling keeps the draw identical across standard libraries.
  const std::uint64_t range = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::vector<int> seq(static_cast<std::size_t>(n) - 2);
  for (auto& x : seq) {
    std::uint64_t r;
    do r = rng(); while (r >= limit);
    x = static_cast<int>(r % range) + 1;
  }
  return tree_from_pruefer(seq);
}

Graph contract_vertices(const Graph& g, Vertex u1, Vertex u2) {
  g.check_vertex(u1);
  g.check_vertex(u2);
  if (u1 == u2) throw UsageError("cannot contract a vertex with itself");
  if (g.has_edge(u1, u2)) throw UsageError("contracted vertices must not be adjacent");
  const Vertex keep = std::min(u1, u2), drop = std::max(u1, u2);
  auto remap = [&](Vertex v) {
    if (v == drop) return keep;
    return v > drop ? v - 1 : v;
  };
  std::set<Edge> merged;
  for (auto [a, b] : g.edges()) {
    Vertex x = remap(a), y = remap(b);
    merged.insert({std::min(x, y), std::max(x, y)});
  }
  return Graph(g.vertex_count() - 1, {merged.begin(), merged.end()});
}

Graph attach_pendant(const Graph& g, Vertex v) {
  g.check_vertex(v);
  auto edges = g.edges();
  edges.emplace_back(v, g.vertex_count() + 1);
  return Graph(g.vertex_count() + 1, std::move(edges));
}

// ---------------------------------------------------------------------------
// Text syntax

namespace {

std::vector<std::int64_t> parse_ints(const std::string& body, const std::string& family) {
  std::vector<std::int64_t> out;
  if (body.empty()) return out;
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
    if (ec != std::errc() || ptr != item.data() + item.size())
      throw InvalidSpec(family + ": '" + item + "' is not an integer");
    out.push_back(value);
  }
  if (!body.empty() && body.back() == ',') throw InvalidSpec(family + ": trailing comma");
  return out;
}

int to_int(std::int64_t v, const std::string& family) {
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw InvalidSpec(family + ": value out of range");
  return static_cast<int>(v);
}

std::vector<int> parse_int_list(const std::string& body, const std::string& family) {
  std::vector<int> out;
  for (auto v : parse_ints(body, family)) out.push_back(to_int(v, family));
  return out;
}

std::vector<int> parse_fixed(const std::string& body, const std::string& family, std::size_t count) {
  auto values = parse_int_list(body, family);
  if (values.size() != count)
    throw InvalidSpec(family + ": expected " + std::to_string(count) + " parameter(s), got " +
                      std::to_string(values.size()));
  return values;
}

std::vector<bool> parse_shape(const std::string& text, const std::string& family) {
  std::vector<bool> shape;
  for (char c : text) {
    if (c != '0' && c != '1') throw InvalidSpec(family + ": shape must be a string of 0/1");
    shape.push_back(c == '1');
  }
  return shape;
}

std::string shape_text(const std::vector<bool>& shape) {
  std::string s;
  for (bool b : shape) s += b ? '1' : '0';
  return s;
}

std::string join(const std::vector<int>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(values[i]);
  }
  return s;
}

}  // namespace

FamilySpec parse_family(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw InvalidSpec("family spec '" + text + "' has no ':'");
  const std::string name = text.substr(0, colon);
  const std::string body = text.substr(colon + 1);

  FamilySpec spec;
  if (name == "path") {
    spec = PathSpec{parse_fixed(body, name, 1)[0]};
  } else if (name == "cycle") {
    spec = CycleSpec{parse_fixed(body, name, 1)[0]};
  } else if (name == "gear") {
    spec = GearSpec{parse_fixed(body, name, 1)[0]};
  } else if (name == "snake") {
    auto v = parse_fixed(body, name, 2);
    spec = SnakeSpec{v[0], v[1]};
  } else if (name == "stargon") {
    auto v = parse_fixed(body, name, 2);
    spec = StarGonSpec{v[0], v[1]};
  } else if (name == "book") {
    auto v = parse_fixed(body, name, 2);
    spec = BookSpec{v[0], v[1]};
  } else if (name == "mobius") {
    spec = MobiusSpec{parse_fixed(body, name, 1)[0]};
  } else if (name == "caterpillar") {
    spec = CaterpillarSpec{parse_int_list(body, name)};
  } else if (name == "spider") {
    spec = SpiderSpec{parse_int_list(body, name)};
  } else if (name == "banana") {
    auto v = parse_fixed(body, name, 2);
    spec = BananaSpec{v[0], v[1]};
  } else if (name == "firecracker") {
    auto v = parse_fixed(body, name, 2);
    spec = FirecrackerSpec{v[0], v[1]};
  } else if (name == "kary" || name == "cayley") {
    const auto comma = body.find(',');
    const int k = parse_fixed(body.substr(0, comma), name, 1)[0];
    const auto shape = parse_shape(comma == std::string::npos ? "" : body.substr(comma + 1), name);
    if (name == "kary")
      spec = FullKArySpec{k, shape};
    else
      spec = CayleySpec{k, shape};
  } else if (name == "fullbinary") {
    spec = FullBinarySpec{parse_shape(body, name)};
  } else if (name == "completebinary") {
    spec = CompleteBinarySpec{parse_fixed(body, name, 1)[0]};
  } else if (name == "random") {
    auto v = parse_ints(body, name);
    if (v.size() != 2 || v[1] < 0) throw InvalidSpec("random: expected n,seed");
    spec = RandomTreeSpec{to_int(v[0], name), static_cast<std::uint64_t>(v[1])};
  } else {
    throw InvalidSpec("unknown family '" + name + "'");
  }
  validate(spec);
  return spec;
}

std::string format_family(const FamilySpec& spec) {
  return std::visit(
      overloaded{
          [](const PathSpec& s) { return "path:" + std::to_string(s.n); },
          [](const CycleSpec& s) { return "cycle:" + std::to_string(s.n); },
          [](const GearSpec& s) { return "gear:" + std::to_string(s.n); },
          [](const SnakeSpec& s) { return "snake:" + std::to_string(s.k) + "," + std::to_string(s.n); },
          [](const StarGonSpec& s) { return "stargon:" + std::to_string(s.k) + "," + std::to_string(s.n); },
          [](const BookSpec& s) { return "book:" + std::to_string(s.k) + "," + std::to_string(s.n); },
          [](const MobiusSpec& s) { return "mobius:" + std::to_string(s.n); },
          [](const CaterpillarSpec& s) { return "caterpillar:" + join(s.pendant_counts); },
          [](const SpiderSpec& s) { return "spider:" + join(s.leg_lengths); },
          [](const BananaSpec& s) { return "banana:" + std::to_string(s.n) + "," + std::to_string(s.k); },
          [](const FirecrackerSpec& s) {
            return "firecracker:" + std::to_string(s.n) + "," + std::to_string(s.k);
          },
          [](const FullKArySpec& s) { return "kary:" + std::to_string(s.k) + "," + shape_text(s.shape); },
          [](const CayleySpec& s) { return "cayley:" + std::to_string(s.k) + "," + shape_text(s.shape); },
          [](const FullBinarySpec& s) { return "fullbinary:" + shape_text(s.shape); },
          [](const CompleteBinarySpec& s) { return "completebinary:" + std::to_string(s.n_nodes); },
          [](const RandomTreeSpec& s) { return "random:" + std::to_string(s.n) + "," + std::to_string(s.seed); },
      },
      spec);
}

}  // namespace nprime

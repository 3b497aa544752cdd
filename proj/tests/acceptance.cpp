// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fail.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <sstream>
#include <string>
#include <thread>

#include "nprime/errors.hpp"
#include "nprime/labelers.hpp"
#include "nprime/search.hpp"
#include "nprime/trees.hpp"
#include "test_util.hpp"

using namespace nprime;
using namespace nprime::testing;

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Result {
  bool ok = true;
  std::string detail;
};

// Collects mismatches; keeps the first few for the report line.
class Tally {
 public:
  void check(bool cond, const std::string& what) {
    ++checked_;
    if (cond) return;
    ++failed_;
    if (failed_ <= 3) first_ += (first_.empty() ? "" : "; ") + what;
  }
  bool ok() const { return failed_ == 0; }
  long checked() const { return checked_; }
  std::string summary() const {
    std::ostringstream s;
    s << checked_ << " checks, " << failed_ << " failed";
    if (!first_.empty()) s << " [" << first_ << "]";
    return s.str();
  }

 private:
  long checked_ = 0, failed_ = 0;
  std::string first_;
};

std::string join(const std::vector<int>& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

// Runs a labeler, turning exceptions into a failed check.
void expect_labeled(Tally& t, const std::string& name, const Graph& g, const std::function<Labeling()>& labeler) {
  try {
    t.check(passes(g, labeler()), name);
  } catch (const std::exception& e) {
    t.check(false, name + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Shapes for binary trees: every full binary tree with up to max_nodes nodes.

struct Shape {
  std::shared_ptr<const Shape> left, right;
};
using ShapePtr = std::shared_ptr<const Shape>;

std::vector<ShapePtr> full_shapes(int nodes, std::map<int, std::vector<ShapePtr>>& memo) {
  if (auto it = memo.find(nodes); it != memo.end()) return it->second;
  std::vector<ShapePtr> out;
  if (nodes == 1) {
    out.push_back(std::make_shared<Shape>());
  } else {
    for (int l = 1; l < nodes - 1; l += 2)
      for (const auto& a : full_shapes(l, memo))
        for (const auto& b : full_shapes(nodes - 1 - l, memo)) out.push_back(std::make_shared<Shape>(Shape{a, b}));
  }
  return memo[nodes] = out;
}

// Level-order numbering: the root is 1 and children follow in BFS order.
Graph level_order_graph(const ShapePtr& root) {
  std::vector<std::pair<const Shape*, int>> queue{{root.get(), 1}};
  std::vector<Edge> edges;
  int next = 2;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const auto [node, id] = queue[i];
    for (const auto& child : {node->left, node->right}) {
      if (!child) continue;
      edges.emplace_back(id, next);
      queue.emplace_back(child.get(), next++);
    }
  }
  return Graph(static_cast<int>(queue.size()), edges);
}

// ---------------------------------------------------------------------------
// The six polygonal-snake case families for k >= 6, n >= 3, written out
// independently of snake_supported.

std::set<std::pair<int, int>> snake_cases(int max_k, int max_n) {
  std::set<std::pair<int, int>> out;
  auto add = [&](int k, int n) {
    if (k >= 6 && k <= max_k && n >= 3 && n <= max_n) out.emplace(k, n);
  };
  for (int k = 6; k <= max_k; ++k) {
    for (int p = 2; p <= 2 * max_n; p *= 2) {
      if (k % 4 == 1) add(k, p + 1);
      if (k % 4 == 0 && p >= 4) add(k, p);
      if (k % 4 == 0) add(k, p + 1);
    }
    if (k % 2 == 0) add(k, 3);
  }
  for (int p = 4; p + 3 <= max_k; p *= 2)
    for (int n = 3; n <= max_n; ++n) {
      if (n % 4 == 3) add(p + 2, n);
      if (n % 2 == 0) add(p + 3, n);
    }
  return out;
}

// ---------------------------------------------------------------------------
// Trees satisfying the bivalent-free precondition, built from random trees.
// Odd trials pad every degree-2 vertex with a pendant; even trials keep the
// degree-2 vertices on one leaf-to-leaf path and pad the rest.

Graph repaired_tree(int n, std::mt19937_64& rng, bool keep_chain) {
  const Graph t = random_tree(n, rng());
  std::set<Vertex> keep;
  if (keep_chain && n >= 2) {
    std::vector<Vertex> leaves;
    for (Vertex v = 1; v <= n; ++v)
      if (t.degree(v) == 1) leaves.push_back(v);
    std::shuffle(leaves.begin(), leaves.end(), rng);
    // BFS parents from leaves[0], then walk back from leaves[1].
    std::vector<Vertex> parent(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Vertex> queue{leaves[0]};
    parent[leaves[0]] = leaves[0];
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (Vertex u : t.neighbors(queue[i]))
        if (!parent[u]) {
          parent[u] = queue[i];
          queue.push_back(u);
        }
    for (Vertex v = leaves[1]; v != leaves[0]; v = parent[v]) keep.insert(v);
  }
  Graph g = t;
  for (Vertex v = 1; v <= n; ++v)
    if (t.degree(v) == 2 && !keep.count(v)) g = attach_pendant(g, v);
  return permute(g, random_permutation(g.vertex_count(), rng));
}

// ---------------------------------------------------------------------------

Result criterion_sweep() {
  const auto t0 = Clock::now();
  Tally t;
  auto fam = [&](const FamilySpec& spec, const std::function<Labeling()>& labeler) {
    expect_labeled(t, format_family(spec), generate(spec), labeler);
  };

  for (int n = 3; n <= 60; ++n) fam(GearSpec{n}, [&] { return label_gear(n); });
  for (int n = 2; n <= 60; ++n) fam(SnakeSpec{3, n}, [&] { return label_snake(3, n); });
  for (int n = 2; n <= 40; ++n) fam(SnakeSpec{4, n}, [&] { return label_snake(4, n); });
  for (int n = 2; n <= 32; ++n) fam(SnakeSpec{5, n}, [&] { return label_snake(5, n); });

  const auto cases = snake_cases(41, 65);
  for (int k = 6; k <= 41; ++k)
    for (int n = 3; n <= 65; ++n)
      t.check(snake_supported(k, n) == cases.count({k, n}) > 0,
              "snake support mismatch at k=" + std::to_string(k) + " n=" + std::to_string(n));
  for (const auto& [k, n] : cases) fam(SnakeSpec{k, n}, [&] { return label_snake(k, n); });

  for (int k = 3; k <= 5; ++k)
    for (int n = 3; n <= 30; ++n) fam(StarGonSpec{k, n}, [&] { return label_star_gon(k, n); });
  for (int n = 1; n <= 50; ++n) fam(BookSpec{5, n}, [&] { return label_book5(n); });
  for (int n = 3; n <= 50; ++n) fam(MobiusSpec{n}, [&] { return label_mobius(n); });

  std::mt19937_64 rng(20240611);
  for (int i = 0; i < 500; ++i) {
    std::vector<int> counts(std::uniform_int_distribution<std::size_t>(0, 18)(rng));
    for (auto& c : counts) c = std::uniform_int_distribution<int>(0, 6)(rng);
    fam(CaterpillarSpec{counts}, [&] { return label_caterpillar(counts); });
  }

  // Spider leg multisets: 3..5 legs, each of length 1..5.
  std::function<void(std::vector<int>&, int)> legs_from = [&](std::vector<int>& legs, int min_len) {
    if (legs.size() >= 3) fam(SpiderSpec{legs}, [&] { return label_spider(legs); });
    if (legs.size() == 5) return;
    for (int len = min_len; len <= 5; ++len) {
      legs.push_back(len);
      legs_from(legs, len);
      legs.pop_back();
    }
  };
  std::vector<int> legs;
  legs_from(legs, 1);
  for (int i = 0; i < 200; ++i) {
    std::vector<int> big(std::uniform_int_distribution<std::size_t>(3, 14)(rng));
    for (auto& len : big) len = std::uniform_int_distribution<int>(1, 25)(rng);
    fam(SpiderSpec{big}, [&] { return label_spider(big); });
  }

  for (int n = 3; n <= 12; ++n)
    for (int k = 4; k <= 10; ++k) fam(BananaSpec{n, k}, [&] { return label_banana(n, k); });
  for (int n = 1; n <= 40; ++n)
    for (int k = 3; k <= 8; ++k) fam(FirecrackerSpec{n, k}, [&] { return label_firecracker(n, k); });

  for (int i = 0; i < 500; ++i) {
    const auto g = repaired_tree(std::uniform_int_distribution<int>(1, 60)(rng), rng, i % 2 == 0);
    expect_labeled(t, "bivalent-free tree #" + std::to_string(i), g, [&] { return label_bivalent_free(g); });
  }

  std::map<int, std::vector<ShapePtr>> memo;
  for (int nodes = 1; nodes <= 15; nodes += 2)
    for (const auto& shape : full_shapes(nodes, memo)) {
      const auto g = level_order_graph(shape);
      try {
        const auto f = label_full_binary(g);
        t.check(passes(g, f), "full binary tree on " + std::to_string(nodes));
        t.check(f == Labeling([&] {
                  std::vector<int> id(static_cast<std::size_t>(nodes));
                  std::iota(id.begin(), id.end(), 1);
                  return id;
                }()),
                "full binary labeling is not level-order identity");
      } catch (const std::exception& e) {
        t.check(false, e.what());
      }
    }
  for (int n = 1; n <= 63; ++n) fam(CompleteBinarySpec{n}, [&] { return label_full_binary(generate(CompleteBinarySpec{n})); });

  const double secs = since(t0);
  std::ostringstream d;
  d << t.summary() << ", " << cases.size() << " large-k snake pairs, " << secs << " s";
  return {t.ok(), d.str()};
}

Result criterion_c6() {
  const auto c6 = cycle_graph(6);
  const auto oracle = brute_force_oracle(c6, true);
  const auto search = find_labeling(c6);
  std::ostringstream d;
  d << "oracle " << to_string(oracle.status) << " after " << oracle.nodes_explored << " bijections, "
    << oracle.all_solutions.size() << " solutions; search " << to_string(search.status);
  const bool ok = oracle.status == SearchStatus::Exhausted && oracle.nodes_explored == 720 &&
                  oracle.all_solutions.empty() && search.status == SearchStatus::Exhausted;
  return {ok, d.str()};
}

Result criterion_cycles() {
  Tally t;
  for (int n : {3, 4, 5, 7, 8, 9, 11, 12, 13}) {
    const auto r = find_labeling(cycle_graph(n));
    t.check(r.status == SearchStatus::Found && passes(cycle_graph(n), *r.labeling), "C" + std::to_string(n));
  }
  std::ostringstream d;
  d << t.summary() << "; data only:";
  for (int n : {6, 10, 14}) d << " C" << n << "=" << to_string(find_labeling(cycle_graph(n)).status);
  return {t.ok(), d.str()};
}

Result criterion_scan() {
  static const std::vector<int> expected{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235};
  const auto t0 = Clock::now();
  Tally t;
  for (int n = 1; n <= 11; ++n) {
    const auto a = enumerate_free_trees(n);
    const auto b = enumerate_free_trees_by_extension(n);
    std::set<std::string> ca, cb;
    for (const auto& g : a) ca.insert(ahu_canonical(g));
    for (const auto& g : b) cb.insert(ahu_canonical(g));
    t.check(a.size() == static_cast<std::size_t>(expected[n - 1]) && ca.size() == a.size() && ca == cb,
            "generators disagree at n=" + std::to_string(n));
  }
  const int jobs = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  const auto report = scan_conjecture(11, {}, jobs);
  std::vector<int> counts;
  std::size_t failures = 0, inconclusive = 0;
  for (const auto& s : report.sizes) {
    counts.push_back(s.tree_count);
    failures += s.failures.size();
    inconclusive += s.inconclusive.size();
  }
  t.check(counts == expected, "scan counts " + join(counts));
  t.check(report.holds() && failures == 0, "counterexample found");
  t.check(inconclusive == 0, "inconclusive searches");
  std::ostringstream d;
  d << "counts " << join(counts) << ", failures " << failures << ", inconclusive " << inconclusive << ", "
    << since(t0) << " s";
  if (!t.ok()) d << "; " << t.summary();
  return {t.ok(), d.str()};
}

Result criterion_oracle_equivalence() {
  Tally t;
  std::vector<Graph> corpus;
  for (int n = 1; n <= 7; ++n)
    for (auto& g : enumerate_free_trees(n)) corpus.push_back(g);
  for (int n = 3; n <= 7; ++n) corpus.push_back(cycle_graph(n));
  std::mt19937_64 rng(77);
  for (int i = 0; i < 200; ++i) {
    const int n = std::uniform_int_distribution<int>(2, 7)(rng);
    corpus.push_back(random_connected_graph(n, std::uniform_real_distribution<double>(0.0, 0.8)(rng), rng));
  }
  int exhausted = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const auto& g = corpus[i];
    const auto oracle = brute_force_oracle(g);
    const auto search = find_labeling(g);
    exhausted += oracle.status == SearchStatus::Exhausted;
    t.check(search.status == oracle.status, "graph #" + std::to_string(i));
    if (search.labeling) t.check(passes(g, *search.labeling), "unverified labeling on graph #" + std::to_string(i));
  }
  std::ostringstream d;
  d << corpus.size() << " graphs, " << exhausted << " without a labeling; " << t.summary();
  return {t.ok(), d.str()};
}

Result criterion_transformations() {
  Tally t;
  std::mt19937_64 rng(31337);
  int contractions = 0, extensions = 0, attempts = 0;
  while (contractions < 200 && attempts < 100000) {
    ++attempts;
    const int n = std::uniform_int_distribution<int>(4, 10)(rng);
    const auto g = random_connected_graph(n, std::uniform_real_distribution<double>(0.05, 0.4)(rng), rng);
    const auto found = find_labeling(g);
    if (!found.labeling) continue;
    const auto& f = *found.labeling;
    Vertex u1 = 0, u2 = 0;
    for (Vertex v = 1; v <= n; ++v) {
      if (f[v] == 1) u1 = v;
      if (f[v] == n) u2 = v;
    }
    if (g.has_edge(u1, u2) || (g.degree(u1) <= 1 && g.degree(u2) <= 1)) continue;
    try {
      const auto [h, fh] = contract_one_max(g, f, u1, u2);
      t.check(h.vertex_count() == n - 1 && passes(h, fh), "contraction on n=" + std::to_string(n));
      ++contractions;
    } catch (const std::exception& e) {
      t.check(false, std::string("contraction threw: ") + e.what());
      ++contractions;
    }
  }
  t.check(contractions == 200, "could not build 200 contraction inputs");

  while (extensions < 200) {
    const int n = std::uniform_int_distribution<int>(3, 10)(rng);
    Graph g = random_connected_graph(n, std::uniform_real_distribution<double>(0.0, 0.4)(rng), rng);
    const auto found = find_labeling(g);
    if (!found.labeling) continue;
    Labeled cur{g, *found.labeling};
    // Chain a few extensions so later steps start from extended outputs.
    const int steps = std::uniform_int_distribution<int>(1, 4)(rng);
    for (int s = 0; s < steps && extensions < 200; ++s) {
      std::vector<Vertex> eligible;
      for (Vertex v = 1; v <= cur.graph.vertex_count(); ++v)
        if (cur.graph.degree(v) > 1) eligible.push_back(v);
      if (eligible.empty()) break;
      const Vertex v = eligible[std::uniform_int_distribution<std::size_t>(0, eligible.size() - 1)(rng)];
      try {
        cur = extend_pendant(cur.graph, cur.labeling, v);
        t.check(passes(cur.graph, cur.labeling), "extension");
      } catch (const std::exception& e) {
        t.check(false, std::string("extension threw: ") + e.what());
      }
      ++extensions;
    }
  }
  std::ostringstream d;
  d << contractions << " contractions, " << extensions << " extensions; " << t.summary();
  return {t.ok(), d.str()};
}

Result criterion_number_theory() {
  const auto t0 = Clock::now();
  Tally t;
  for (int n = 1; n <= 2000; ++n) {
    const auto m = coprime_matching(n);
    std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
    bool ok = m.n == n && m.map.size() == static_cast<std::size_t>(n) + 1;
    for (int x = 1; ok && x <= n; ++x) {
      const int y = m[x];
      ok = y > 2 * n && y <= 3 * n && std::gcd(x, y) == 1 && !hit[y - 2 * n];
      if (ok) hit[y - 2 * n] = true;
    }
    t.check(ok, "matching n=" + std::to_string(n));
  }

  constexpr std::uint64_t kMax = 1'000'000;
  std::vector<bool> composite(2 * kMax + 1, false);
  composite[0] = composite[1] = true;
  for (std::uint64_t p = 2; p * p <= 2 * kMax; ++p)
    if (!composite[p])
      for (auto q = p * p; q <= 2 * kMax; q += p) composite[q] = true;
  // next_prime[n] = smallest prime > n, filled from the top.
  std::vector<std::uint32_t> next_prime(2 * kMax + 1, 0);
  std::uint32_t nxt = 0;
  for (auto x = 2 * kMax; x >= 1; --x) {
    next_prime[x] = nxt;
    if (!composite[x]) nxt = static_cast<std::uint32_t>(x);
  }
  for (std::uint64_t n = 1; n <= kMax; ++n) {
    const auto p = bertrand_prime(n);
    if (p != next_prime[n] || p > 2 * n) t.check(false, "bertrand n=" + std::to_string(n));
  }
  t.check(true, "bertrand range");
  std::ostringstream d;
  d << "matchings n<=2000, bertrand n<=" << kMax << "; " << t.summary() << ", " << since(t0) << " s";
  return {t.ok(), d.str()};
}

Result criterion_gcd_identities() {
  // gcd{a,b} = gcd{ca+db, b} holds when gcd(c,b) = 1, and
  // gcd{a,b} = gcd{a, ca+db} when gcd(d,a) = 1. Coefficients are drawn
  // from that domain; outside it the identities are false (a=1,b=2,c=2,d=0).
  Tally t;
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<std::int64_t> pos(1, 1'000'000'000), coef(-1'000'000, 1'000'000);
  int left = 0, right = 0;
  while (left < 10000 || right < 10000) {
    const auto a = pos(rng), b = pos(rng), c = coef(rng), d = coef(rng);
    const auto combo = std::abs(c * a + d * b);
    if (combo == 0) continue;
    const auto g = gcd_of({a, b});
    if (left < 10000 && std::gcd(c, b) == 1) {
      t.check(g == gcd_of({combo, b}), "left identity");
      ++left;
    }
    if (right < 10000 && std::gcd(d, a) == 1) {
      t.check(g == gcd_of({a, combo}), "right identity");
      ++right;
    }
  }
  std::ostringstream d;
  d << left << " + " << right << " instances; " << t.summary();
  return {t.ok(), d.str()};
}

Result criterion_hexagonal_snakes() {
  Tally t;
  for (int n : {3, 7, 11, 15})
    expect_labeled(t, "S(6," + std::to_string(n) + ")", generate(SnakeSpec{6, n}), [&] { return label_snake(6, n); });
  return {t.ok(), "n in {3,7,11,15}; " + t.summary()};
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria{
      {"constructive labeler sweep", criterion_sweep},
      {"C6 has no labeling", criterion_c6},
      {"cycles with n != 2 mod 4 are labeled", criterion_cycles},
      {"all trees up to 11 vertices are labeled", criterion_scan},
      {"search matches brute force", criterion_oracle_equivalence},
      {"contraction and pendant extension preserve labelings", criterion_transformations},
      {"coprime matchings and Bertrand primes", criterion_number_theory},
      {"gcd linear-combination identities", criterion_gcd_identities},
      {"hexagonal snakes with n = 3 mod 4", criterion_hexagonal_snakes},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Result r;
    try {
      r = criteria[i].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    failed += !r.ok;
    std::printf("%s %zu %s: %s\n", r.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), r.detail.c_str());
    std::fflush(stdout);
  }
  return failed ? 1 : 0;
}

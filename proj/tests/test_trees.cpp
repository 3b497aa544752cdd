#include <doctest.h>

#include "nprime/errors.hpp"
#include "nprime/labelers.hpp"
#include "nprime/trees.hpp"
#include "test_util.hpp"

using namespace nprime;
using namespace nprime::testing;

namespace {

const std::vector<int> kTreeCounts{1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235};

// Third generator: decode every Prüfer sequence and deduplicate.
std::set<std::string> classes_by_pruefer(int n) {
  std::set<std::string> out;
  if (n <= 2) {
    out.insert(ahu_canonical(generate(PathSpec{n})));
    return out;
  }
  std::vector<int> seq(static_cast<std::size_t>(n - 2), 1);
  while (true) {
    out.insert(ahu_canonical(tree_from_pruefer(seq)));
    std::size_t i = 0;
    while (i < seq.size() && seq[i] == n) seq[i++] = 1;
    if (i == seq.size()) break;
    ++seq[i];
  }
  return out;
}

std::set<std::string> classes(const std::vector<Graph>& trees) {
  std::set<std::string> out;
  for (const auto& t : trees) out.insert(ahu_canonical(t));
  return out;
}

// Degree sequence shape tests for the constructive families.
bool is_caterpillar(const Graph& t) {
  // Removing the leaves leaves a path (or nothing).
  const int n = t.vertex_count();
  std::vector<Vertex> inner;
  for (Vertex v = 1; v <= n; ++v)
    if (t.degree(v) > 1) inner.push_back(v);
  for (Vertex v : inner) {
    int inner_deg = 0;
    for (Vertex u : t.neighbors(v)) inner_deg += t.degree(u) > 1;
    if (inner_deg > 2) return false;
  }
  return true;
}

// Leg lengths when exactly one vertex has degree >= 3.
std::optional<std::vector<int>> spider_legs(const Graph& t) {
  Vertex center = 0;
  for (Vertex v = 1; v <= t.vertex_count(); ++v) {
    if (t.degree(v) < 3) continue;
    if (center) return std::nullopt;
    center = v;
  }
  if (!center) return std::nullopt;
  std::vector<int> legs;
  for (Vertex first : t.neighbors(center)) {
    int len = 1;
    Vertex prev = center, cur = first;
    while (t.degree(cur) == 2) {
      const Vertex next = t.neighbors(cur)[0] == prev ? t.neighbors(cur)[1] : t.neighbors(cur)[0];
      prev = cur;
      cur = next;
      ++len;
    }
    legs.push_back(len);
  }
  return legs;
}

}  // namespace

TEST_CASE("ahu_canonical") {
  const Graph p3(3, {{1, 2}, {2, 3}});
  const Graph p3b(3, {{2, 1}, {1, 3}});
  CHECK(ahu_canonical(p3) == ahu_canonical(p3b));
  CHECK(ahu_canonical(path_graph(4)) != ahu_canonical(star_graph(3)));
  CHECK_THROWS_AS(ahu_canonical(cycle_graph(4)), UsageError);
  CHECK(tree_centers(path_graph(4)) == std::vector<Vertex>{2, 3});
  CHECK(tree_centers(path_graph(5)) == std::vector<Vertex>{3});

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 30;
    const auto t = random_tree(n, rng());
    CHECK(ahu_canonical(t) == ahu_canonical(permute(t, random_permutation(n, rng))));
  }
}

TEST_CASE("free tree counts agree across generators") {
  for (int n = 1; n <= 11; ++n) {
    INFO("n=" << n);
    const auto primary = enumerate_free_trees(n);
    const auto secondary = enumerate_free_trees_by_extension(n);
    CHECK(primary.size() == static_cast<std::size_t>(kTreeCounts[n - 1]));
    CHECK(secondary.size() == primary.size());
    const auto a = classes(primary);
    CHECK(a.size() == primary.size());
    CHECK(a == classes(secondary));
    for (const auto& t : primary) {
      CHECK(t.vertex_count() == n);
      CHECK(is_tree(t));
    }
    if (n <= 8) CHECK(classes_by_pruefer(n) == a);
  }
  CHECK(enumerate_free_trees(12).size() == 551);
  CHECK_THROWS_AS(enumerate_free_trees(0), UsageError);
  CHECK_THROWS_AS(enumerate_free_trees(kMaxEnumerationSize + 1), UsageError);
}

TEST_CASE("enumeration order is fixed") {
  const auto a = enumerate_free_trees(9);
  const auto b = enumerate_free_trees(9);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
}

TEST_CASE("scan_conjecture") {
  SUBCASE("up to four vertices") {
    const auto r = scan_conjecture(4, {});
    REQUIRE(r.sizes.size() == 4);
    for (int n = 1; n <= 4; ++n) {
      CHECK(r.sizes[n - 1].n == n);
      CHECK(r.sizes[n - 1].tree_count == kTreeCounts[n - 1]);
      CHECK(r.sizes[n - 1].solved_count == kTreeCounts[n - 1]);
    }
    CHECK(r.holds());
  }
  SUBCASE("up to seven vertices, threaded") {
    const auto serial = scan_conjecture(7, {}, 1);
    const auto threaded = scan_conjecture(7, {}, 4);
    CHECK(serial.sizes[6].tree_count == 11);
    CHECK(serial.holds());
    for (std::size_t i = 0; i < serial.sizes.size(); ++i) {
      CHECK(serial.sizes[i].solved_count == threaded.sizes[i].solved_count);
      CHECK(serial.sizes[i].inconclusive.empty());
    }
    const auto table = format_report(serial);
    CHECK(table.rfind("n\ttrees\tsolved\tfailed\tinconclusive\tseconds\n", 0) == 0);
    CHECK(table.find("\n7\t11\t11\t0\t0\t") != std::string::npos);
  }
  SUBCASE("a tiny budget makes results inconclusive, never failures") {
    const auto r = scan_conjecture(8, {std::uint64_t{3}, VertexOrder::DegreeDescending, false});
    CHECK(r.holds());
    std::size_t inconclusive = 0;
    for (const auto& s : r.sizes) {
      CHECK(s.tree_count == s.solved_count + static_cast<int>(s.failures.size() + s.inconclusive.size()));
      inconclusive += s.inconclusive.size();
    }
    CHECK(inconclusive > 0);
  }
}

TEST_CASE("constructive labelers agree with search on enumerated trees") {
  int caterpillars = 0, bivalent_free = 0, spiders = 0;
  for (int n = 2; n <= 11; ++n)
    for (const auto& t : enumerate_free_trees(n)) {
      std::optional<Labeling> f;
      try {
        f = label_bivalent_free(t);
      } catch (const UnsupportedStructure&) {
      }
      if (f) {
        CHECK(passes(t, *f));
        ++bivalent_free;
      }
      if (auto legs = spider_legs(t)) {
        ++spiders;
        const auto [g, f] = label_family(SpiderSpec{*legs});
        CHECK(ahu_canonical(g) == ahu_canonical(t));
        CHECK(passes(g, f));
      }
      if (is_caterpillar(t)) {
        // Rebuild as a caterpillar spec along a longest spine and label it.
        ++caterpillars;
        const auto spec = [&] {
          std::vector<Vertex> inner;
          for (Vertex v = 1; v <= n; ++v)
            if (t.degree(v) > 1) inner.push_back(v);
          if (inner.empty()) return CaterpillarSpec{{}};
          Vertex start = inner.front();
          for (Vertex v : inner) {
            int inner_deg = 0;
            for (Vertex u : t.neighbors(v)) inner_deg += t.degree(u) > 1;
            if (inner_deg <= 1) start = v;
          }
          std::vector<int> counts;
          Vertex prev = 0, cur = start;
          while (cur) {
            int leaves = 0;
            Vertex next = 0;
            for (Vertex u : t.neighbors(cur)) {
              if (t.degree(u) == 1) ++leaves;
              else if (u != prev) next = u;
            }
            counts.push_back(leaves);
            prev = cur;
            cur = next;
          }
          // One leaf at each end of the inner path becomes a spine end.
          counts.front() -= 1;
          counts.back() -= 1;
          return CaterpillarSpec{counts};
        }();
        const auto [g, f] = label_family(spec);
        CHECK(ahu_canonical(g) == ahu_canonical(t));
        CHECK(passes(g, f));
      }
    }
  CHECK(caterpillars > 100);
  CHECK(bivalent_free > 50);
  CHECK(spiders > 50);
}

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "nprime/graph.hpp"

namespace nprime {

// ---------------------------------------------------------------------------
// Number theory

bool is_prime(std::uint64_t x);

/// Smallest prime p with n+1 <= p <= 2n.
std::uint64_t bertrand_prime(std::uint64_t n);

/// Perfect matching x -> map[x] from {1..n} onto {2n+1..3n} with
/// gcd(x, map[x]) = 1 for every x.
struct CoprimeMatching {
  int n = 0;
  std::vector<int> map;  // index 0 unused

  int operator[](int x) const { return map[static_cast<std::size_t>(x)]; }
};

/// Lexicographically smallest coprime matching (x = 1 takes the smallest
/// feasible partner, then x = 2, ...).
CoprimeMatching coprime_matching(int n);

// ---------------------------------------------------------------------------
// Exact search

enum class VertexOrder { DegreeDescending, Natural };

struct SearchConfig {
  std::optional<std::uint64_t> node_budget = 10'000'000;
  VertexOrder order = VertexOrder::DegreeDescending;
  bool find_all = false;
};

enum class SearchStatus { Found, Exhausted, Inconclusive };

struct SearchOutcome {
  SearchStatus status = SearchStatus::Exhausted;
  std::optional<Labeling> labeling;
  std::uint64_t nodes_explored = 0;
  std::vector<Labeling> all_solutions;  // filled only when find_all
};

const char* to_string(SearchStatus s);

/// Depth-first label assignment with a prune whenever a vertex of degree >= 2
/// has its whole neighborhood labeled and the gcd is not 1. With find_all,
/// every solution is collected; Found then means at least one exists.
SearchOutcome find_labeling(const Graph& g, const SearchConfig& cfg = {});

/// Enumerates all n! bijections and filters with verify(). n <= 9.
SearchOutcome brute_force_oracle(const Graph& g, bool find_all = false);

}  // namespace nprime

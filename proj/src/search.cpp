#include "nprime/search.hpp"

#include <algorithm>
#include <bit>
#include <optional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace nprime {

// ---------------------------------------------------------------------------
// Number theory

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1;
  base %= m;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Fixed-size bitset over indices 0..size-1.
class Bits {
 public:
  explicit Bits(int size, bool fill = false)
      : words_((static_cast<std::size_t>(size) + 63) / 64, fill ? ~u64{0} : 0), size_(size) {
    if (fill) trim();
  }
  void set(int i) { words_[i >> 6] |= u64{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(u64{1} << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
  Bits& operator|=(const Bits& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= o.words_[w];
    return *this;
  }
  void flip() {
    for (auto& w : words_) w = ~w;
    trim();
  }
  // Smallest i >= from set in all of a, b and c; size_ if none.
  static int first_common(const Bits& a, const Bits& b, const Bits& c, int from = 0) {
    for (std::size_t w = static_cast<std::size_t>(from) >> 6; w < a.words_.size(); ++w) {
      u64 bits = a.words_[w] & b.words_[w] & c.words_[w];
      if (w == static_cast<std::size_t>(from) >> 6) bits &= ~u64{0} << (from & 63);
      if (bits) return static_cast<int>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
    }
    return a.size_;
  }

 private:
  void trim() {
    if (size_ % 64) words_.back() &= (u64{1} << (size_ % 64)) - 1;
  }
  std::vector<u64> words_;
  int size_;
};

}  // namespace

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (u64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (x % p == 0) return x == p;
  }
  u64 d = x - 1;
  int s = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++s;
  }
  // Deterministic for all 64-bit inputs.
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 y = pow_mod(a, d, x);
    if (y == 1 || y == x - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      y = mul_mod(y, y, x);
      if (y == x - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t bertrand_prime(std::uint64_t n) {
  if (n < 1) throw UsageError("bertrand_prime needs n >= 1");
  for (u64 p = n + 1; p <= 2 * n; ++p)
    if (is_prime(p)) return p;
  throw std::logic_error("no prime in (n, 2n] for n = " + std::to_string(n));
}

CoprimeMatching coprime_matching(int n) {
  if (n < 1) throw UsageError("coprime_matching needs n >= 1");
  // Rows are x = 1..n, columns j = 1..n stand for y = 2n + j. Bit 0 unused.
  const int base = 2 * n, size = n + 1;
  std::vector<int> spf(static_cast<std::size_t>(3 * n) + 1, 0);
  for (int p = 2; p <= 3 * n; ++p)
    if (!spf[p])
      for (int q = p; q <= 3 * n; q += p)
        if (!spf[q]) spf[q] = p;

  // Adjacency as complements of "shares prime p" masks; only p <= n matters.
  std::vector<std::optional<Bits>> row_mult(static_cast<std::size_t>(n) + 1), col_mult(row_mult.size());
  auto mask = [&](std::vector<std::optional<Bits>>& cache, int p, int first, int step) -> const Bits& {
    auto& m = cache[static_cast<std::size_t>(p)];
    if (!m) {
      m.emplace(size);
      for (int i = first; i <= n; i += step) m->set(i);
    }
    return *m;
  };
  auto adjacency = [&](int value, bool of_row) {
    Bits b(size);
    while (value > 1) {
      const int p = spf[value];
      while (value % p == 0) value /= p;
      if (p > n) continue;
      if (of_row) {
        const int first = (p - base % p) % p;  // base + first = 0 mod p
        b |= mask(col_mult, p, first ? first : p, p);
      } else {
        b |= mask(row_mult, p, p, p);
      }
    }
    b.flip();
    b.reset(0);
    return b;
  };
  std::vector<Bits> row_adj, col_adj;
  row_adj.reserve(static_cast<std::size_t>(n) + 1);
  col_adj.reserve(static_cast<std::size_t>(n) + 1);
  row_adj.emplace_back(size);
  col_adj.emplace_back(size);
  for (int i = 1; i <= n; ++i) {
    row_adj.push_back(adjacency(i, true));
    col_adj.push_back(adjacency(base + i, false));
  }

  std::vector<int> mx(static_cast<std::size_t>(n) + 1, 0), my(mx.size(), 0);
  const Bits all(size, true);

  // Phase 1: greedy smallest free partner, Kuhn augmentation when stuck.
  Bits free_cols(size, true);
  free_cols.reset(0);
  Bits unseen(size);
  auto augment = [&](auto&& self, int x) -> bool {
    for (int j = Bits::first_common(row_adj[x], unseen, all); j < size;
         j = Bits::first_common(row_adj[x], unseen, all, j + 1)) {
      unseen.reset(j);
      if (my[j] == 0 || self(self, my[j])) {
        mx[x] = j;
        my[j] = x;
        return true;
      }
    }
    return false;
  };
  for (int x = 1; x <= n; ++x) {
    const int j = Bits::first_common(row_adj[x], free_cols, all);
    if (j < size) {
      mx[x] = j;
      my[j] = x;
      free_cols.reset(j);
      continue;
    }
    unseen = Bits(size, true);
    if (!augment(augment, x)) throw std::logic_error("coprime bipartite graph has no perfect matching");
    for (int y = Bits::first_common(free_cols, all, all); y < size; y = Bits::first_common(free_cols, all, all, y + 1))
      if (my[y]) free_cols.reset(y);
  }

  // Phase 2: fix x = 1..n to its smallest partner that still extends to a
  // perfect matching. Moving x onto y frees t = mx[x]; that works iff my[y]
  // can shift along an alternating path of unfixed rows ending in t. Rows
  // that failed to reach t stay failed for the rest of x's candidates, since
  // the matching is unchanged between attempts.
  Bits open_cols(size, true);
  open_cols.reset(0);
  for (int x = 1; x <= n; ++x) {
    const int target = mx[x];
    open_cols.reset(target);
    Bits live = open_cols;  // open columns whose occupant is not yet tried
    auto shift = [&](auto&& self, int r) -> bool {
      live.reset(mx[r]);
      if (row_adj[r].test(target)) {
        mx[r] = target;
        my[target] = r;
        return true;
      }
      for (int c = Bits::first_common(row_adj[r], live, all); c < size;
           c = Bits::first_common(row_adj[r], live, all, c + 1)) {
        if (self(self, my[c])) {
          mx[r] = c;
          my[c] = r;
          return true;
        }
      }
      return false;
    };
    for (int y = Bits::first_common(row_adj[x], live, all); y < target;
         y = Bits::first_common(row_adj[x], live, all, y + 1)) {
      if (shift(shift, my[y])) {
        mx[x] = y;
        my[y] = x;
        open_cols.set(target);
        open_cols.reset(y);
        break;
      }
    }
  }

  CoprimeMatching result{n, std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};
  std::vector<bool> hit(static_cast<std::size_t>(n) + 1, false);
  for (int x = 1; x <= n; ++x) {
    const int j = mx[x];
    if (j < 1 || hit[j] || std::gcd(x, base + j) != 1) throw std::logic_error("coprime matching invariant broken");
    hit[j] = true;
    result.map[static_cast<std::size_t>(x)] = base + j;
  }
  return result;
}

// ---------------------------------------------------------------------------
// Exact search

const char* to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "FOUND";
    case SearchStatus::Exhausted: return "EXHAUSTED";
    case SearchStatus::Inconclusive: return "INCONCLUSIVE";
  }
  return "?";
}

namespace {

class Backtracker {
 public:
  Backtracker(const Graph& g, const SearchConfig& cfg) : g_(g), cfg_(cfg), n_(g.vertex_count()) {
    order_.resize(static_cast<std::size_t>(n_));
    std::iota(order_.begin(), order_.end(), 1);
    if (cfg.order == VertexOrder::DegreeDescending)
      std::stable_sort(order_.begin(), order_.end(), [&](Vertex a, Vertex b) { return g.degree(a) > g.degree(b); });
    const auto sz = static_cast<std::size_t>(n_) + 1;
    running_gcd_.assign(sz, 0);
    unlabeled_.resize(sz);
    for (Vertex v = 1; v <= n_; ++v) unlabeled_[v] = g.degree(v);
    label_.assign(sz, 0);
    used_.assign(sz, false);
  }

  SearchOutcome run() {
    dfs(0);
    SearchOutcome out;
    out.nodes_explored = nodes_;
    if (!solutions_.empty()) {
      out.status = SearchStatus::Found;
      out.labeling = solutions_.front();
      if (cfg_.find_all) out.all_solutions = std::move(solutions_);
    } else {
      out.status = budget_hit_ ? SearchStatus::Inconclusive : SearchStatus::Exhausted;
    }
    return out;
  }

 private:
  // Returns true to stop the whole search.
  bool dfs(std::size_t depth) {
    if (depth == order_.size()) {
      solutions_.emplace_back(std::vector<int>(label_.begin() + 1, label_.end()));
      return !cfg_.find_all;
    }
    const Vertex v = order_[depth];
    const auto nb = g_.neighbors(v);
    for (int x = 1; x <= n_; ++x) {
      if (used_[x]) continue;
      if (cfg_.node_budget && nodes_ >= *cfg_.node_budget) {
        budget_hit_ = true;
        return true;
      }
      ++nodes_;

      bool closed_bad = false;
      const std::size_t mark = undo_.size();
      for (Vertex u : nb) {
        undo_.push_back(running_gcd_[u]);
        running_gcd_[u] = std::gcd(running_gcd_[u], x);
        if (--unlabeled_[u] == 0 && g_.degree(u) >= 2 && running_gcd_[u] != 1) closed_bad = true;
      }
      bool stop = false;
      if (!closed_bad) {
        used_[x] = true;
        label_[v] = x;
        stop = dfs(depth + 1);
        used_[x] = false;
        label_[v] = 0;
      }
      for (std::size_t i = 0; i < nb.size(); ++i) {
        running_gcd_[nb[i]] = undo_[mark + i];
        ++unlabeled_[nb[i]];
      }
      undo_.resize(mark);
      if (stop) return true;
    }
    return false;
  }

  const Graph& g_;
  const SearchConfig& cfg_;
  int n_;
  std::vector<Vertex> order_;
  std::vector<int> running_gcd_, unlabeled_, label_;
  std::vector<bool> used_;
  std::vector<int> undo_;  // running gcds overwritten on the current branch
  std::vector<Labeling> solutions_;
  std::uint64_t nodes_ = 0;
  bool budget_hit_ = false;
};

}  // namespace

SearchOutcome find_labeling(const Graph& g, const SearchConfig& cfg) {
  if (g.vertex_count() < 1) throw UsageError("find_labeling needs a nonempty graph");
  if (cfg.node_budget && *cfg.node_budget < 1) throw UsageError("node budget must be >= 1");
  return Backtracker(g, cfg).run();
}

SearchOutcome brute_force_oracle(const Graph& g, bool find_all) {
  const int n = g.vertex_count();
  if (n < 1 || n > 9) throw UsageError("brute_force_oracle supports 1 <= n <= 9");
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  SearchOutcome out;
  do {
    ++out.nodes_explored;
    Labeling f(perm);
    if (!verify(g, f).ok) continue;
    if (!out.labeling) out.labeling = f;
    if (!find_all) break;
    out.all_solutions.push_back(std::move(f));
  } while (std::next_permutation(perm.begin(), perm.end()));
  out.status = out.labeling ? SearchStatus::Found : SearchStatus::Exhausted;
  return out;
}

}  // namespace nprime

#pragma once

#include <utility>
#include <vector>

#include "nprime/families.hpp"
#include "nprime/graph.hpp"

// Constructive neighborhood-prime labelings. Each labeler targets the
// canonical numbering of the matching family in families.hpp.
namespace nprime {

enum class ShiftKind {
  InteriorMin,  // smallest label on the second vertex (path-labeling shape)
  HeadMin,      // smallest label on the first vertex
};

struct ShiftVariant {
  ShiftKind kind = ShiftKind::InteriorMin;
  int offset = 0;  // N
  int length = 1;  // m
};

/// Path labeling: odd i -> floor(n/2) + (i+1)/2, even i -> i/2.
Labeling label_path(int n);

/// Labels N+1..N+m for a path of length m, shaped so that the two path
/// neighbors of every interior position carry consecutive values.
std::vector<int> shifted_path_labels(const ShiftVariant& v);

Labeling label_gear(int n);

/// k = 3, 4, 5 for every n >= 2; k >= 6 only for the (k, n) pairs covered by
/// the polygonal-snake construction (see snake_supported). Otherwise throws
/// UnsupportedParameters.
Labeling label_snake(int k, int n);
bool snake_supported(int k, int n);

struct Labeled {
  Graph graph;
  Labeling labeling;
};

/// Merges u1 (label 1) and u2 (label n) into a vertex labeled 1. Numbering of
/// the result follows contract_vertices. Throws PreconditionViolated.
Labeled contract_one_max(const Graph& g, const Labeling& f, Vertex u1, Vertex u2);

/// Star (k,n)-gon for k in {3,4,5}, n >= 3.
Labeling label_star_gon(int k, int n);

Labeling label_book5(int n);
Labeling label_mobius(int n);

/// Attaches a pendant to v (deg(v) > 1) and gives it label n+1.
/// Throws PreconditionViolated.
Labeled extend_pendant(const Graph& g, const Labeling& f, Vertex v);

Labeling label_caterpillar(const std::vector<int>& pendant_counts);
Labeling label_spider(const std::vector<int>& leg_lengths);

/// n >= 3, k >= 4.
Labeling label_banana(int n, int k);
/// n >= 1, k >= 3.
Labeling label_firecracker(int n, int k);

/// Trees with no degree-2 vertex, or whose degree-2 vertices all lie on one
/// leaf-to-leaf path. Works on any vertex numbering. Throws
/// UnsupportedStructure otherwise.
Labeling label_bivalent_free(const Graph& t);

/// Binary trees in level-order numbering. Full trees get the identity
/// labeling; any other binary tree goes through label_bivalent_free.
Labeling label_full_binary(const Graph& t);

/// Dispatches to the labeler for the family and returns the generated graph
/// alongside. Throws UnsupportedParameters when no construction applies.
Labeled label_family(const FamilySpec& spec);

}  // namespace nprime

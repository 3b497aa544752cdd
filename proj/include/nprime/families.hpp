#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "nprime/graph.hpp"

// Constructors for the graph families, each with one fixed vertex numbering.
//
//   Gear(n)          hub = 1, rim 2..2n+1 in cyclic order, odd rim ids on spokes.
//   Snake(k,n)       trace path 1..m, m = (n-1)(k-1)+1, plus base chords
//                    (i(k-1)+1, (i+1)(k-1)+1); base vertex u_j = (j-1)(k-1)+1.
//   StarGon(k,n)     Snake(k,n+1) with its two end base vertices merged into 1.
//   Book(k,n)        u1 = 1, u2 = 2, then each page's interior path in order.
//   Mobius(n)        u_i = i, v_i = n+i.
//   Caterpillar(c)   spine 1..s (s = |c|+2), then pendants grouped by the
//                    interior spine vertex they hang from, ascending.
//   Spider(lens)     center = 1, legs consecutively, each from the center out.
//   Banana(n,k)      root = 1; star i occupies a block of k ids: u_i, w_i, then
//                    its k-2 other leaves.
//   Firecracker(n,k) u_i = i, v_i = n+i, w_i = 2n+i, remaining leaves after 3n
//                    grouped by star.
//   k-ary / Cayley / binary trees: level order, root = 1.
namespace nprime {

struct PathSpec { int n; };
struct CycleSpec { int n; };
struct GearSpec { int n; };
struct SnakeSpec { int k; int n; };
struct StarGonSpec { int k; int n; };
struct BookSpec { int k; int n; };
struct MobiusSpec { int n; };
struct CaterpillarSpec { std::vector<int> pendant_counts; };
struct SpiderSpec { std::vector<int> leg_lengths; };
struct BananaSpec { int n; int k; };
struct FirecrackerSpec { int n; int k; };

// Shape descriptors list, in level order, whether each node is internal.
// Nodes past the end of the list are leaves.
struct FullKArySpec { int k; std::vector<bool> shape; };
// Internal nodes have degree exactly k: the root gets k children, others k-1.
struct CayleySpec { int k; std::vector<bool> shape; };
struct FullBinarySpec { std::vector<bool> shape; };
struct CompleteBinarySpec { int n_nodes; };
struct RandomTreeSpec { int n; std::uint64_t seed; };

using FamilySpec =
    std::variant<PathSpec, CycleSpec, GearSpec, SnakeSpec, StarGonSpec, BookSpec, MobiusSpec,
                 CaterpillarSpec, SpiderSpec, BananaSpec, FirecrackerSpec, FullKArySpec, CayleySpec,
                 FullBinarySpec, CompleteBinarySpec, RandomTreeSpec>;

/// Throws InvalidSpec naming the violated bound.
void validate(const FamilySpec& spec);

/// Builds the family graph in its canonical numbering. Throws InvalidSpec.
Graph generate(const FamilySpec& spec);

/// Uniformly random labeled tree on n vertices from a random Pruefer sequence.
Graph random_tree(int n, std::uint64_t seed);

/// Tree from a Pruefer sequence over 1..n (n = seq.size() + 2).
Graph tree_from_pruefer(std::span<const int> seq);

/// Merges u1 and u2 into one vertex whose neighborhood is the union of
/// theirs. The merged vertex keeps the smaller id; ids above the larger one
/// shift down by one. u1 and u2 must be distinct and non-adjacent.
Graph contract_vertices(const Graph& g, Vertex u1, Vertex u2);

/// Adds vertex n+1 adjacent to v.
Graph attach_pendant(const Graph& g, Vertex v);

/// Snake base vertex u_j (1-based j) in the trace numbering.
inline Vertex snake_base_vertex(int k, int j) { return (j - 1) * (k - 1) + 1; }

/// Parses the CLI family syntax, e.g. "gear:7", "snake:9,3",
/// "caterpillar:0,2,1", "kary:3,1100", "random:12,7". Throws InvalidSpec.
FamilySpec parse_family(const std::string& text);
std::string format_family(const FamilySpec& spec);

}  // namespace nprime

#pragma once

// Exponential-time reference implementations. Nothing here touches the
// auxiliary graph or the blossom matcher.

#include <cstddef>
#include <vector>

#include "bipaths/bigraph.hpp"

namespace bipaths::oracle {

inline constexpr std::size_t kDefaultPathLimit = 1'000'000;

/// All X-paths, each once (starting at the smaller endpoint), in DFS order
/// from ascending start vertices. Parallel edges give distinct paths.
/// Throws LimitExceeded once more than `limit` paths are found.
std::vector<SignedPath> enumerate_x_paths(const BidirectedMultigraph& g, const VertexSet& x,
                                          std::size_t limit = kDefaultPathLimit);

/// Maximum number of pairwise vertex-disjoint X-paths. Guarded to 24 vertices.
std::size_t brute_max_disjoint(const BidirectedMultigraph& g, const VertexSet& x,
                               std::size_t limit = kDefaultPathLimit);

struct DualMinimum {
    std::size_t value = 0;
    VertexSet s;
    VertexSet t;
};

/// Minimum of dual_value over every admissible (S, T); ties go to the first
/// pair in enumeration order. Guarded to 10 vertices.
DualMinimum brute_dual_min(const BidirectedMultigraph& g, const VertexSet& x);

/// Maximum matching size by exhaustive search. Guarded to 24 vertices.
std::size_t brute_matching(const Multigraph& h);

/// min over U of |U| + sum over components of h - U of floor(|C| / 2).
std::size_t brute_tutte_berge(const Multigraph& h);

/// Maximum number of disjoint directed X-paths (directed paths from X to X
/// with interior outside X).
std::size_t brute_directed_packing(const Digraph& d, const VertexSet& x);

/// Dual expression for digraphs: |S cap T| plus, over the weak components of
/// D minus the arcs entering S and the arcs leaving T, floor(|V(C) cap (X u S u T)| / 2).
std::size_t directed_dual_value(const Digraph& d, const VertexSet& x, const VertexSet& s,
                                const VertexSet& t);

/// Maximum number of disjoint X-paths in an undirected multigraph.
std::size_t brute_undirected_packing(const Multigraph& g, const VertexSet& x);

/// min over S of |S| + sum over components C of G - S of floor(|V(C) cap X| / 2).
std::size_t brute_gallai_bound(const Multigraph& g, const VertexSet& x);

}  // namespace bipaths::oracle

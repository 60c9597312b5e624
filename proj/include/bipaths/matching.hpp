#pragma once

// Maximum cardinality matching on undirected multigraphs (Edmonds' blossom
// shrinking) and the Gallai-Edmonds decomposition read off the final search
// forest, which yields a Tutte-Berge barrier.

#include <cstddef>
#include <vector>

#include "bipaths/bigraph.hpp"

namespace bipaths {

/// Sorted list of edge ids, no two sharing an endpoint.
struct Matching {
    std::vector<EdgeId> edges;

    std::size_t size() const noexcept { return edges.size(); }
    friend bool operator==(const Matching&, const Matching&) = default;
};

bool is_matching(const Multigraph& h, const Matching& m);

/// Augments `seed` to a maximum matching. Parallel edges collapse to the
/// lowest id per endpoint pair, except that pairs matched by the seed keep
/// the seed's edge. Throws InvalidSeed if the seed is not a matching of h.
Matching maximum_matching(const Multigraph& h, const Matching& seed = {});

/// D: vertices missed by some maximum matching. A: neighbours of D outside D.
/// C: everything else.
struct GallaiEdmonds {
    VertexSet deficient;
    VertexSet barrier;
    VertexSet saturated;
};

/// `maximum` must be a maximum matching of h.
GallaiEdmonds gallai_edmonds(const Multigraph& h, const Matching& maximum);
GallaiEdmonds gallai_edmonds(const Multigraph& h);

struct TutteBergeWitness {
    VertexSet barrier;
    std::size_t value = 0;
};

/// |U| + sum over components C of h - U of floor(|C| / 2).
std::size_t tutte_berge_value(const Multigraph& h, const VertexSet& u);

/// U = A of the Gallai-Edmonds decomposition; value equals nu(h).
TutteBergeWitness tutte_berge_witness(const Multigraph& h);

struct AlternatingComponent {
    enum class Kind { Path, Cycle };

    Kind kind;
    /// For a cycle the first vertex is not repeated at the end.
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
};

/// Components of (V(h), M0 u M), isolated vertices included as trivial paths.
/// Paths start at their smaller endpoint, cycles at their smallest vertex.
/// Ordered by first vertex.
std::vector<AlternatingComponent> alternating_components(const Multigraph& h, const Matching& m0,
                                                         const Matching& m);

}  // namespace bipaths

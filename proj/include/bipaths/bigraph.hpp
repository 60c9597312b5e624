#pragma once

// Bidirected multigraphs, signed paths, the restricted graph B_{S,T} and the
// dual value of the X-path min-max formula.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bipaths/error.hpp"

namespace bipaths {

enum class Sign : std::uint8_t { Minus, Plus };

constexpr Sign operator-(Sign s) noexcept { return s == Sign::Minus ? Sign::Plus : Sign::Minus; }
constexpr char to_char(Sign s) noexcept { return s == Sign::Minus ? '-' : '+'; }

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Sorted, duplicate-free list of vertex ids.
using VertexSet = std::vector<VertexId>;

/// Sorts and deduplicates in place; returns the argument for chaining.
VertexSet normalized(VertexSet s);

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

/// Dense membership table over [0, n) for O(1) lookups.
class Indicator {
public:
    Indicator() = default;
    Indicator(std::size_t n, const VertexSet& members);

    bool operator[](VertexId v) const noexcept { return v < bits_.size() && bits_[v] != 0; }
    std::size_t size() const noexcept { return bits_.size(); }

private:
    std::vector<std::uint8_t> bits_;
};

/// Undirected loop-free multigraph with dense vertex and edge ids.
class Multigraph {
public:
    struct Edge {
        VertexId u;
        VertexId v;
    };

    Multigraph() = default;
    explicit Multigraph(std::size_t num_vertices) : incidence_(num_vertices) {}

    VertexId add_vertex();
    EdgeId add_edge(VertexId u, VertexId v);

    std::size_t num_vertices() const noexcept { return incidence_.size(); }
    std::size_t num_edges() const noexcept { return edges_.size(); }

    const Edge& edge(EdgeId e) const { return edges_.at(e); }
    VertexId other(EdgeId e, VertexId v) const;
    /// Incident edge ids in ascending order.
    std::span<const EdgeId> incident(VertexId v) const { return incidence_.at(v); }

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
};

/// A multigraph with a sign at each half-edge. Loops are rejected; parallel
/// edges, including ones with identical sign pairs, are kept.
class BidirectedMultigraph {
public:
    struct Edge {
        VertexId u;
        Sign sign_u;
        VertexId v;
        Sign sign_v;
    };

    BidirectedMultigraph() = default;
    explicit BidirectedMultigraph(std::size_t num_vertices) : incidence_(num_vertices) {}

    VertexId add_vertex();
    EdgeId add_edge(VertexId u, Sign sign_u, VertexId v, Sign sign_v);

    std::size_t num_vertices() const noexcept { return incidence_.size(); }
    std::size_t num_edges() const noexcept { return edges_.size(); }
    bool has_vertex(VertexId v) const noexcept { return v < incidence_.size(); }

    const Edge& edge(EdgeId e) const { return edges_.at(e); }
    std::span<const Edge> edges() const noexcept { return edges_; }
    std::span<const EdgeId> incident(VertexId v) const { return incidence_.at(v); }

    bool is_endpoint(EdgeId e, VertexId v) const;
    VertexId other(EdgeId e, VertexId v) const;
    /// sigma(v, e); v must be an endpoint of e.
    Sign sign_at(EdgeId e, VertexId v) const;

    /// The underlying undirected multigraph, with identical edge ids.
    Multigraph underlying() const;

private:
    std::vector<Edge> edges_;
    std::vector<std::vector<EdgeId>> incidence_;
};

/// v0 e1 v1 ... el vl. A single vertex with no edges is the trivial path.
struct SignedPath {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    std::size_t length() const noexcept { return edges.size(); }
    VertexId front() const { return vertices.front(); }
    VertexId back() const { return vertices.back(); }
    SignedPath reversed() const;

    friend bool operator==(const SignedPath&, const SignedPath&) = default;
    friend auto operator<=>(const SignedPath&, const SignedPath&) = default;
};

bool is_valid_path(const BidirectedMultigraph& g, const SignedPath& p);
bool is_x_path(const BidirectedMultigraph& g, const VertexSet& x, const SignedPath& p);

/// Orientation with the smaller endpoint first.
SignedPath canonical(const SignedPath& p);

struct RestrictedGraph {
    Multigraph graph;
    /// source_edge[i] is the edge of B that became edge i of `graph`.
    std::vector<EdgeId> source_edge;
};

/// B_{S,T}: keeps e iff every endpoint v has v outside S and T, or v in S\T
/// with sign -, or v in T\S with sign +.
RestrictedGraph restrict(const BidirectedMultigraph& g, const VertexSet& s, const VertexSet& t);

/// Components ordered by minimum vertex id, each sorted.
std::vector<VertexSet> weak_components(const Multigraph& h);
/// Components of h - removed (removed vertices are dropped entirely).
std::vector<VertexSet> components_without(const Multigraph& h, const VertexSet& removed);

/// |S cap T| + sum over components C of B_{S,T} of floor(|V(C) cap (X u S u T)| / 2).
/// Throws SideConditionViolated when X cap S != X cap T.
std::size_t dual_value(const BidirectedMultigraph& g, const VertexSet& x, const VertexSet& s,
                       const VertexSet& t);

/// B - Y with vertex ids preserved: every edge touching Y is dropped and the
/// vertices of Y are left isolated.
BidirectedMultigraph delete_vertices(const BidirectedMultigraph& g, const VertexSet& y);

struct Digraph {
    std::size_t num_vertices = 0;
    /// (tail, head) pairs.
    std::vector<std::pair<VertexId, VertexId>> arcs;
};

/// Each arc u->v becomes a (-,+)-edge.
BidirectedMultigraph from_digraph(const Digraph& d);
/// Each edge {u,v} becomes a (-,+)-edge and a (+,-)-edge, in that order.
BidirectedMultigraph from_undirected(const Multigraph& g);

}  // namespace bipaths

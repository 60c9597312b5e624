#pragma once

// The auxiliary multigraph H = H_B(X): every vertex outside X is split into
// copies 1 and 2 joined by a split edge, and each edge of B is rerouted to
// copy 1 at endpoints where it has sign - and to copy 2 where it has sign +.
// Vertices of X stay whole. The split edges form the base matching M0, and
// X-paths of B correspond one-to-one with M0-alternating X-paths of H.

#include <compare>
#include <cstdint>
#include <optional>
#include <vector>

#include "bipaths/bigraph.hpp"
#include "bipaths/matching.hpp"

namespace bipaths {

struct AuxVertex {
    VertexId vertex;
    /// 0 for an X vertex kept whole, otherwise 1 or 2.
    std::uint8_t copy;

    friend auto operator<=>(const AuxVertex&, const AuxVertex&) = default;
};

/// Copy index selected by the sign of a half-edge: - -> 1, + -> 2.
constexpr std::uint8_t copy_for(Sign s) noexcept { return s == Sign::Minus ? 1 : 2; }

/// Path in H given by H-vertex and H-edge ids.
struct AlternatingPath {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    friend bool operator==(const AlternatingPath&, const AlternatingPath&) = default;
};

class AuxiliaryGraph {
public:
    /// Throws UnknownVertex if X is not a subset of V(g).
    AuxiliaryGraph(const BidirectedMultigraph& g, const VertexSet& x);

    const BidirectedMultigraph& source() const noexcept { return source_; }
    const VertexSet& terminals() const noexcept { return x_; }
    bool in_x(VertexId v) const { return in_x_[v]; }

    const Multigraph& graph() const noexcept { return h_; }
    const Matching& base_matching() const noexcept { return m0_; }

    /// p(v, copy): the H vertex for copy 1 or 2 of v (v itself when v is in X).
    VertexId project(VertexId v, std::uint8_t copy) const;
    AuxVertex label(VertexId h_vertex) const { return labels_.at(h_vertex); }

    /// Split edge of v; v must lie outside X.
    EdgeId split_edge(VertexId v) const;
    bool is_split_edge(EdgeId h_edge) const noexcept { return h_edge < num_split_; }
    /// H edge that carries edge e of B.
    EdgeId lifted_edge(EdgeId e) const { return num_split_ + e; }
    /// Edge of B carried by a non-split H edge.
    EdgeId source_edge(EdgeId h_edge) const { return h_edge - num_split_; }

private:
    BidirectedMultigraph source_;
    VertexSet x_;
    Indicator in_x_;
    Multigraph h_;
    std::vector<AuxVertex> labels_;
    std::vector<VertexId> first_copy_;  // H index of copy 1 (or the X vertex)
    std::vector<EdgeId> split_of_;      // per B vertex; unused for X vertices
    EdgeId num_split_ = 0;
    Matching m0_;
};

AuxiliaryGraph build_auxiliary(const BidirectedMultigraph& g, const VertexSet& x);

/// theta(P). Throws NotAnXPath unless p is an X-path of the source graph.
AlternatingPath lift_path(const AuxiliaryGraph& aux, const SignedPath& p);

/// Inverse of lift_path. Throws EndpointsNotInX or NotAlternating.
SignedPath project_path(const AuxiliaryGraph& aux, const AlternatingPath& q);

}  // namespace bipaths

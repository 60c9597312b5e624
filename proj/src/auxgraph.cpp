#include "bipaths/auxgraph.hpp"

#include <algorithm>
#include <string>

namespace bipaths {

namespace {

constexpr EdgeId kNoEdge = static_cast<EdgeId>(-1);

}  // namespace

AuxiliaryGraph::AuxiliaryGraph(const BidirectedMultigraph& g, const VertexSet& x)
    : source_(g), x_(normalized(x)), in_x_(g.num_vertices(), x_) {
    const std::size_t n = g.num_vertices();
    first_copy_.resize(n);
    split_of_.assign(n, kNoEdge);

    for (VertexId v = 0; v < n; ++v) {
        first_copy_[v] = h_.add_vertex();
        if (in_x_[v]) {
            labels_.push_back({v, 0});
        } else {
            labels_.push_back({v, 1});
            h_.add_vertex();
            labels_.push_back({v, 2});
        }
    }
    for (VertexId v = 0; v < n; ++v) {
        if (in_x_[v]) continue;
        split_of_[v] = h_.add_edge(first_copy_[v], first_copy_[v] + 1);
        m0_.edges.push_back(split_of_[v]);
    }
    num_split_ = static_cast<EdgeId>(h_.num_edges());
    for (const auto& e : g.edges())
        h_.add_edge(project(e.u, copy_for(e.sign_u)), project(e.v, copy_for(e.sign_v)));
}

AuxiliaryGraph build_auxiliary(const BidirectedMultigraph& g, const VertexSet& x) {
    return AuxiliaryGraph(g, x);
}

VertexId AuxiliaryGraph::project(VertexId v, std::uint8_t copy) const {
    const VertexId base = first_copy_.at(v);
    return in_x_[v] ? base : base + (copy == 2 ? 1 : 0);
}

EdgeId AuxiliaryGraph::split_edge(VertexId v) const {
    const EdgeId e = split_of_.at(v);
    if (e == kNoEdge) throw Error(ErrorCode::UnknownVertex, "X vertex has no split edge");
    return e;
}

AlternatingPath lift_path(const AuxiliaryGraph& aux, const SignedPath& p) {
    const BidirectedMultigraph& g = aux.source();
    if (!is_x_path(g, aux.terminals(), p)) throw Error(ErrorCode::NotAnXPath, "cannot lift");

    AlternatingPath q;
    q.vertices.push_back(aux.project(p.front(), 0));
    for (std::size_t i = 1; i < p.vertices.size(); ++i) {
        const VertexId v = p.vertices[i];
        const EdgeId in = p.edges[i - 1];
        q.edges.push_back(aux.lifted_edge(in));
        q.vertices.push_back(aux.project(v, copy_for(g.sign_at(in, v))));
        if (i + 1 < p.vertices.size()) {
            q.edges.push_back(aux.split_edge(v));
            q.vertices.push_back(aux.project(v, copy_for(g.sign_at(p.edges[i], v))));
        }
    }
    return q;
}

SignedPath project_path(const AuxiliaryGraph& aux, const AlternatingPath& q) {
    const Multigraph& h = aux.graph();
    if (q.vertices.size() != q.edges.size() + 1 || q.edges.empty())
        throw Error(ErrorCode::NotAlternating, "not a non-trivial path");
    for (VertexId a : q.vertices)
        if (a >= h.num_vertices()) throw Error(ErrorCode::NotAlternating, "unknown H vertex");
    if (aux.label(q.vertices.front()).copy != 0 || aux.label(q.vertices.back()).copy != 0)
        throw Error(ErrorCode::EndpointsNotInX, "endpoints must be X vertices");

    std::vector<VertexId> seen = q.vertices;
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw Error(ErrorCode::NotAlternating, "repeated vertex");

    SignedPath p;
    p.vertices.push_back(aux.label(q.vertices.front()).vertex);
    for (std::size_t i = 0; i < q.edges.size(); ++i) {
        const EdgeId f = q.edges[i];
        if (f >= h.num_edges()) throw Error(ErrorCode::NotAlternating, "unknown H edge");
        const auto& ed = h.edge(f);
        const VertexId a = q.vertices[i], b = q.vertices[i + 1];
        if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)))
            throw Error(ErrorCode::NotAlternating, "edge does not join consecutive vertices");
        // Even positions leave M0, odd positions are split edges.
        if (aux.is_split_edge(f) != (i % 2 == 1))
            throw Error(ErrorCode::NotAlternating, "edges do not alternate with M0");
        if (!aux.is_split_edge(f)) {
            p.edges.push_back(aux.source_edge(f));
            p.vertices.push_back(aux.label(b).vertex);
        }
    }
    if (!is_x_path(aux.source(), aux.terminals(), p))
        throw Error(ErrorCode::NotAlternating, "projection is not an X-path");
    return p;
}

}  // namespace bipaths

#include "bipaths/bigraph.hpp"

#include <algorithm>
#include <iterator>
#include <numeric>
#include <string>

namespace bipaths {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::LoopRejected: return "LoopRejected";
        case ErrorCode::UnknownVertex: return "UnknownVertex";
        case ErrorCode::DuplicateVertex: return "DuplicateVertex";
        case ErrorCode::SideConditionViolated: return "SideConditionViolated";
        case ErrorCode::NotAnXPath: return "NotAnXPath";
        case ErrorCode::NotAlternating: return "NotAlternating";
        case ErrorCode::EndpointsNotInX: return "EndpointsNotInX";
        case ErrorCode::InvalidSeed: return "InvalidSeed";
        case ErrorCode::InvalidK: return "InvalidK";
        case ErrorCode::InternalDualityMismatch: return "InternalDualityMismatch";
        case ErrorCode::LimitExceeded: return "LimitExceeded";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::InvalidParameter: return "InvalidParameter";
    }
    return "Unknown";
}

VertexSet normalized(VertexSet s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    return s;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

Indicator::Indicator(std::size_t n, const VertexSet& members) : bits_(n, 0) {
    for (VertexId v : members) {
        if (v >= n) throw Error(ErrorCode::UnknownVertex, "vertex " + std::to_string(v));
        bits_[v] = 1;
    }
}

// ---------------------------------------------------------------------------

VertexId Multigraph::add_vertex() {
    incidence_.emplace_back();
    return static_cast<VertexId>(incidence_.size() - 1);
}

EdgeId Multigraph::add_edge(VertexId u, VertexId v) {
    if (u >= num_vertices() || v >= num_vertices())
        throw Error(ErrorCode::UnknownVertex, "edge endpoint out of range");
    if (u == v) throw Error(ErrorCode::LoopRejected, "loop at vertex " + std::to_string(u));
    const auto e = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v});
    incidence_[u].push_back(e);
    incidence_[v].push_back(e);
    return e;
}

VertexId Multigraph::other(EdgeId e, VertexId v) const {
    const Edge& ed = edges_.at(e);
    return ed.u == v ? ed.v : ed.u;
}

// ---------------------------------------------------------------------------

VertexId BidirectedMultigraph::add_vertex() {
    incidence_.emplace_back();
    return static_cast<VertexId>(incidence_.size() - 1);
}

EdgeId BidirectedMultigraph::add_edge(VertexId u, Sign sign_u, VertexId v, Sign sign_v) {
    if (!has_vertex(u) || !has_vertex(v))
        throw Error(ErrorCode::UnknownVertex, "edge endpoint out of range");
    if (u == v) throw Error(ErrorCode::LoopRejected, "loop at vertex " + std::to_string(u));
    const auto e = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, sign_u, v, sign_v});
    incidence_[u].push_back(e);
    incidence_[v].push_back(e);
    return e;
}

bool BidirectedMultigraph::is_endpoint(EdgeId e, VertexId v) const {
    if (e >= edges_.size()) return false;
    return edges_[e].u == v || edges_[e].v == v;
}

VertexId BidirectedMultigraph::other(EdgeId e, VertexId v) const {
    const Edge& ed = edges_.at(e);
    return ed.u == v ? ed.v : ed.u;
}

Sign BidirectedMultigraph::sign_at(EdgeId e, VertexId v) const {
    const Edge& ed = edges_.at(e);
    if (ed.u == v) return ed.sign_u;
    if (ed.v == v) return ed.sign_v;
    throw Error(ErrorCode::UnknownVertex,
                "vertex " + std::to_string(v) + " is not an endpoint of edge " + std::to_string(e));
}

Multigraph BidirectedMultigraph::underlying() const {
    Multigraph h(num_vertices());
    for (const Edge& e : edges_) h.add_edge(e.u, e.v);
    return h;
}

// ---------------------------------------------------------------------------

SignedPath SignedPath::reversed() const {
    return {{vertices.rbegin(), vertices.rend()}, {edges.rbegin(), edges.rend()}};
}

SignedPath canonical(const SignedPath& p) {
    if (p.vertices.size() >= 2 && p.back() < p.front()) return p.reversed();
    return p;
}

bool is_valid_path(const BidirectedMultigraph& g, const SignedPath& p) {
    if (p.vertices.empty() || p.vertices.size() != p.edges.size() + 1) return false;
    for (VertexId v : p.vertices)
        if (!g.has_vertex(v)) return false;
    std::vector<VertexId> sorted = p.vertices;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;

    for (std::size_t i = 0; i < p.edges.size(); ++i) {
        const EdgeId e = p.edges[i];
        if (e >= g.num_edges()) return false;
        const auto& ed = g.edge(e);
        const VertexId a = p.vertices[i], b = p.vertices[i + 1];
        if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a))) return false;
    }
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i) {
        const VertexId v = p.vertices[i];
        if (g.sign_at(p.edges[i - 1], v) == g.sign_at(p.edges[i], v)) return false;
    }
    return true;
}

bool is_x_path(const BidirectedMultigraph& g, const VertexSet& x, const SignedPath& p) {
    if (!is_valid_path(g, p) || p.length() == 0) return false;
    const auto in_x = [&](VertexId v) { return std::binary_search(x.begin(), x.end(), v); };
    if (!in_x(p.front()) || !in_x(p.back())) return false;
    for (std::size_t i = 1; i + 1 < p.vertices.size(); ++i)
        if (in_x(p.vertices[i])) return false;
    return true;
}

// ---------------------------------------------------------------------------

RestrictedGraph restrict(const BidirectedMultigraph& g, const VertexSet& s, const VertexSet& t) {
    const Indicator in_s(g.num_vertices(), s), in_t(g.num_vertices(), t);
    const auto keeps = [&](VertexId v, Sign sign) {
        const bool a = in_s[v], b = in_t[v];
        if (!a && !b) return true;
        if (a && !b) return sign == Sign::Minus;
        if (b && !a) return sign == Sign::Plus;
        return false;
    };
    RestrictedGraph out{Multigraph(g.num_vertices()), {}};
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const auto& ed = g.edge(e);
        if (keeps(ed.u, ed.sign_u) && keeps(ed.v, ed.sign_v)) {
            out.graph.add_edge(ed.u, ed.v);
            out.source_edge.push_back(e);
        }
    }
    return out;
}

namespace {

class DisjointSets {
public:
    explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0u); }

    VertexId find(VertexId v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    void unite(VertexId a, VertexId b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (b < a) std::swap(a, b);
        parent_[b] = a;  // root is always the minimum id
    }

private:
    std::vector<VertexId> parent_;
};

std::vector<VertexSet> collect_components(const Multigraph& h, const Indicator& removed) {
    const std::size_t n = h.num_vertices();
    DisjointSets dsu(n);
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
        const auto& ed = h.edge(e);
        if (!removed[ed.u] && !removed[ed.v]) dsu.unite(ed.u, ed.v);
    }
    std::vector<VertexSet> out;
    std::vector<std::size_t> slot(n, static_cast<std::size_t>(-1));
    for (VertexId v = 0; v < n; ++v) {
        if (removed[v]) continue;
        const VertexId r = dsu.find(v);
        if (slot[r] == static_cast<std::size_t>(-1)) {
            slot[r] = out.size();
            out.emplace_back();
        }
        out[slot[r]].push_back(v);
    }
    return out;
}

}  // namespace

std::vector<VertexSet> weak_components(const Multigraph& h) {
    return collect_components(h, Indicator(h.num_vertices(), {}));
}

std::vector<VertexSet> components_without(const Multigraph& h, const VertexSet& removed) {
    return collect_components(h, Indicator(h.num_vertices(), removed));
}

std::size_t dual_value(const BidirectedMultigraph& g, const VertexSet& x, const VertexSet& s,
                       const VertexSet& t) {
    const std::size_t n = g.num_vertices();
    const Indicator in_x(n, x), in_s(n, s), in_t(n, t);
    if (set_intersection(x, s) != set_intersection(x, t))
        throw Error(ErrorCode::SideConditionViolated, "X cap S differs from X cap T");

    std::size_t value = set_intersection(s, t).size();
    const RestrictedGraph r = restrict(g, s, t);
    for (const VertexSet& c : weak_components(r.graph)) {
        const auto hits = std::count_if(c.begin(), c.end(), [&](VertexId v) {
            return in_x[v] || in_s[v] || in_t[v];
        });
        value += static_cast<std::size_t>(hits) / 2;
    }
    return value;
}

BidirectedMultigraph delete_vertices(const BidirectedMultigraph& g, const VertexSet& y) {
    const Indicator in_y(g.num_vertices(), y);
    BidirectedMultigraph out(g.num_vertices());
    for (const auto& e : g.edges())
        if (!in_y[e.u] && !in_y[e.v]) out.add_edge(e.u, e.sign_u, e.v, e.sign_v);
    return out;
}

BidirectedMultigraph from_digraph(const Digraph& d) {
    BidirectedMultigraph g(d.num_vertices);
    for (const auto& [tail, head] : d.arcs) g.add_edge(tail, Sign::Minus, head, Sign::Plus);
    return g;
}

BidirectedMultigraph from_undirected(const Multigraph& h) {
    BidirectedMultigraph g(h.num_vertices());
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
        const auto& ed = h.edge(e);
        g.add_edge(ed.u, Sign::Minus, ed.v, Sign::Plus);
        g.add_edge(ed.u, Sign::Plus, ed.v, Sign::Minus);
    }
    return g;
}

}  // namespace bipaths

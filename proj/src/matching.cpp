#include "bipaths/matching.hpp"

#include <algorithm>
#include <deque>
#include <iterator>
#include <map>
#include <stdexcept>
#include <string>

namespace bipaths {

namespace {

constexpr VertexId kNone = static_cast<VertexId>(-1);

/// Alternating-forest search with blossom contraction via base pointers.
/// Vertices are scanned in ascending order, neighbours in ascending order.
class BlossomSearch {
public:
    BlossomSearch(const std::vector<std::vector<VertexId>>& adj, std::vector<VertexId>& mate)
        : adj_(adj), mate_(mate), n_(adj.size()) {}

    /// Grows a single tree from `root`; augments and returns true if an
    /// exposed vertex is reached.
    bool augment_from(VertexId root) {
        const VertexId end = grow({root});
        if (end == kNone) return false;
        for (VertexId u = end; u != kNone;) {
            const VertexId pu = parent_[u];
            const VertexId next = mate_[pu];
            mate_[u] = pu;
            mate_[pu] = u;
            u = next;
        }
        return true;
    }

    /// Grows the forest rooted at every exposed vertex. The matching must be
    /// maximum; an augmenting path found here is a logic error.
    void grow_full_forest() {
        std::vector<VertexId> roots;
        for (VertexId v = 0; v < n_; ++v)
            if (mate_[v] == kNone) roots.push_back(v);
        if (grow(roots) != kNone) throw std::logic_error("matching is not maximum");
    }

    bool even(VertexId v) const { return even_[v] != 0; }
    bool odd(VertexId v) const { return odd_[v] != 0; }

private:
    VertexId grow(const std::vector<VertexId>& roots) {
        parent_.assign(n_, kNone);
        base_.resize(n_);
        for (VertexId i = 0; i < n_; ++i) base_[i] = i;
        even_.assign(n_, 0);
        odd_.assign(n_, 0);
        queue_.clear();
        for (VertexId r : roots) {
            even_[r] = 1;
            queue_.push_back(r);
        }

        while (!queue_.empty()) {
            const VertexId v = queue_.front();
            queue_.pop_front();
            for (VertexId u : adj_[v]) {
                if (base_[v] == base_[u] || mate_[v] == u) continue;
                if (even_[u]) {
                    contract(v, u);
                } else if (!odd_[u]) {
                    parent_[u] = v;
                    odd_[u] = 1;
                    if (mate_[u] == kNone) return u;
                    even_[mate_[u]] = 1;
                    queue_.push_back(mate_[u]);
                }
            }
        }
        return kNone;
    }

    VertexId lowest_common_base(VertexId a, VertexId b) {
        mark_.assign(n_, 0);
        for (;;) {
            a = base_[a];
            mark_[a] = 1;
            if (mate_[a] == kNone) break;
            a = parent_[mate_[a]];
        }
        for (;;) {
            b = base_[b];
            if (mark_[b]) return b;
            if (mate_[b] == kNone) return kNone;
            b = parent_[mate_[b]];
        }
    }

    void mark_path(VertexId v, VertexId b, VertexId child) {
        while (base_[v] != b) {
            in_blossom_[base_[v]] = 1;
            in_blossom_[base_[mate_[v]]] = 1;
            parent_[v] = child;
            child = mate_[v];
            v = parent_[mate_[v]];
        }
    }

    void contract(VertexId v, VertexId u) {
        const VertexId b = lowest_common_base(v, u);
        // Two even vertices in different trees form an augmenting path. The
        // single-root search never sees this; the full forest only runs on
        // maximum matchings.
        if (b == kNone) throw std::logic_error("matching is not maximum");
        in_blossom_.assign(n_, 0);
        mark_path(v, b, u);
        mark_path(u, b, v);
        for (VertexId i = 0; i < n_; ++i) {
            if (!in_blossom_[base_[i]]) continue;
            base_[i] = b;
            if (!even_[i]) {
                even_[i] = 1;
                queue_.push_back(i);
            }
        }
    }

    const std::vector<std::vector<VertexId>>& adj_;
    std::vector<VertexId>& mate_;
    std::size_t n_;
    std::vector<VertexId> parent_, base_;
    std::vector<std::uint8_t> even_, odd_, mark_, in_blossom_;
    std::deque<VertexId> queue_;
};

using Pair = std::pair<VertexId, VertexId>;

Pair ordered(VertexId a, VertexId b) { return a < b ? Pair{a, b} : Pair{b, a}; }

std::vector<std::vector<VertexId>> simple_support(const Multigraph& h) {
    std::vector<std::vector<VertexId>> adj(h.num_vertices());
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
        const auto& ed = h.edge(e);
        adj[ed.u].push_back(ed.v);
        adj[ed.v].push_back(ed.u);
    }
    for (auto& list : adj) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
    }
    return adj;
}

std::vector<VertexId> mate_of(const Multigraph& h, const Matching& m, ErrorCode on_error) {
    std::vector<VertexId> mate(h.num_vertices(), kNone);
    for (EdgeId e : m.edges) {
        if (e >= h.num_edges()) throw Error(on_error, "edge " + std::to_string(e) + " not in graph");
        const auto& ed = h.edge(e);
        if (mate[ed.u] != kNone || mate[ed.v] != kNone)
            throw Error(on_error, "edges share an endpoint at edge " + std::to_string(e));
        mate[ed.u] = ed.v;
        mate[ed.v] = ed.u;
    }
    return mate;
}

}  // namespace

bool is_matching(const Multigraph& h, const Matching& m) {
    try {
        mate_of(h, m, ErrorCode::InvalidSeed);
    } catch (const Error&) {
        return false;
    }
    return std::adjacent_find(m.edges.begin(), m.edges.end()) == m.edges.end();
}

Matching maximum_matching(const Multigraph& h, const Matching& seed) {
    std::vector<VertexId> mate = mate_of(h, seed, ErrorCode::InvalidSeed);

    std::map<Pair, EdgeId> representative;
    for (EdgeId e = h.num_edges(); e-- > 0;) {
        const auto& ed = h.edge(e);
        representative[ordered(ed.u, ed.v)] = e;
    }
    for (EdgeId e : seed.edges) {
        const auto& ed = h.edge(e);
        representative[ordered(ed.u, ed.v)] = e;
    }

    const auto adj = simple_support(h);
    BlossomSearch search(adj, mate);
    for (VertexId v = 0; v < h.num_vertices(); ++v)
        if (mate[v] == kNone) search.augment_from(v);

    Matching out;
    for (VertexId v = 0; v < h.num_vertices(); ++v)
        if (mate[v] != kNone && v < mate[v]) out.edges.push_back(representative.at({v, mate[v]}));
    std::sort(out.edges.begin(), out.edges.end());
    return out;
}

GallaiEdmonds gallai_edmonds(const Multigraph& h, const Matching& maximum) {
    std::vector<VertexId> mate = mate_of(h, maximum, ErrorCode::InvalidSeed);
    const auto adj = simple_support(h);
    BlossomSearch search(adj, mate);
    search.grow_full_forest();

    GallaiEdmonds out;
    for (VertexId v = 0; v < h.num_vertices(); ++v) {
        if (search.even(v))
            out.deficient.push_back(v);
        else if (search.odd(v))
            out.barrier.push_back(v);
        else
            out.saturated.push_back(v);
    }
    return out;
}

GallaiEdmonds gallai_edmonds(const Multigraph& h) { return gallai_edmonds(h, maximum_matching(h)); }

std::size_t tutte_berge_value(const Multigraph& h, const VertexSet& u) {
    std::size_t value = u.size();
    for (const VertexSet& c : components_without(h, u)) value += c.size() / 2;
    return value;
}

TutteBergeWitness tutte_berge_witness(const Multigraph& h) {
    TutteBergeWitness w;
    w.barrier = gallai_edmonds(h).barrier;
    w.value = tutte_berge_value(h, w.barrier);
    return w;
}

std::vector<AlternatingComponent> alternating_components(const Multigraph& h, const Matching& m0,
                                                         const Matching& m) {
    std::vector<EdgeId> used;
    std::set_union(m0.edges.begin(), m0.edges.end(), m.edges.begin(), m.edges.end(),
                   std::back_inserter(used));
    std::vector<std::vector<EdgeId>> inc(h.num_vertices());
    for (EdgeId e : used) {
        inc[h.edge(e).u].push_back(e);
        inc[h.edge(e).v].push_back(e);
    }

    std::vector<std::uint8_t> visited(h.num_vertices(), 0);
    const auto walk = [&](VertexId start, AlternatingComponent::Kind kind) {
        AlternatingComponent c{kind, {start}, {}};
        visited[start] = 1;
        VertexId cur = start;
        EdgeId prev = static_cast<EdgeId>(-1);
        for (;;) {
            auto it = std::find_if(inc[cur].begin(), inc[cur].end(),
                                   [&](EdgeId e) { return e != prev; });
            if (it == inc[cur].end()) break;
            const VertexId next = h.other(*it, cur);
            c.edges.push_back(*it);
            if (next == start) break;
            c.vertices.push_back(next);
            visited[next] = 1;
            prev = *it;
            cur = next;
        }
        return c;
    };

    std::vector<AlternatingComponent> out;
    for (VertexId v = 0; v < h.num_vertices(); ++v)
        if (!visited[v] && inc[v].size() <= 1) out.push_back(walk(v, AlternatingComponent::Kind::Path));
    for (VertexId v = 0; v < h.num_vertices(); ++v)
        if (!visited[v]) out.push_back(walk(v, AlternatingComponent::Kind::Cycle));
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        return a.vertices.front() < b.vertices.front();
    });
    return out;
}

}  // namespace bipaths

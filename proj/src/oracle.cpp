#include "bipaths/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <string>
#include <unordered_map>

namespace bipaths::oracle {

namespace {

using Mask = std::uint32_t;
constexpr std::size_t kMaskVertices = 24;

void guard_vertices(std::size_t n, std::size_t max, const char* what) {
    if (n > max)
        throw LimitExceeded(std::string(what) + " supports at most " + std::to_string(max) +
                                " vertices, got " + std::to_string(n),
                            0);
}

Mask mask_of(const VertexSet& s) {
    Mask m = 0;
    for (VertexId v : s) m |= Mask{1} << v;
    return m;
}

struct MaskedPath {
    Mask vertices;
    VertexId a;
    VertexId b;
};

/// Maximum number of pairwise disjoint paths. Every path has both endpoints
/// in X and no other X vertex, so branching on the lowest available X vertex
/// (unused, or an endpoint of some path) is exhaustive.
std::size_t max_disjoint(std::size_t n, Mask x_mask, const std::vector<MaskedPath>& paths) {
    std::vector<std::vector<Mask>> by_endpoint(n);
    for (const auto& p : paths) {
        by_endpoint[p.a].push_back(p.vertices);
        by_endpoint[p.b].push_back(p.vertices);
    }
    std::unordered_map<Mask, std::size_t> memo;
    std::function<std::size_t(Mask)> best = [&](Mask avail) -> std::size_t {
        const Mask open_x = avail & x_mask;
        if (std::popcount(open_x) < 2) return 0;
        if (auto it = memo.find(avail); it != memo.end()) return it->second;
        const auto x = static_cast<VertexId>(std::countr_zero(open_x));
        std::size_t result = best(avail & ~(Mask{1} << x));
        for (Mask p : by_endpoint[x])
            if ((p & avail) == p) result = std::max(result, 1 + best(avail & ~p));
        memo.emplace(avail, result);
        return result;
    };
    return best(n == 32 ? ~Mask{0} : (Mask{1} << n) - 1);
}

std::vector<VertexId> find_roots(std::size_t n, const std::vector<std::pair<VertexId, VertexId>>& edges,
                                 Mask removed) {
    std::vector<VertexId> parent(n);
    for (VertexId v = 0; v < n; ++v) parent[v] = v;
    const auto find = [&](VertexId v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto [u, v] : edges) {
        if ((removed >> u & 1) || (removed >> v & 1)) continue;
        parent[find(u)] = find(v);
    }
    std::vector<VertexId> root(n);
    for (VertexId v = 0; v < n; ++v) root[v] = find(v);
    return root;
}

}  // namespace

std::vector<SignedPath> enumerate_x_paths(const BidirectedMultigraph& g, const VertexSet& x_in,
                                          std::size_t limit) {
    const VertexSet x = normalized(x_in);
    const Indicator in_x(g.num_vertices(), x);
    std::vector<std::uint8_t> on_path(g.num_vertices(), 0);
    std::vector<SignedPath> out;
    SignedPath cur;

    std::function<void(VertexId, bool, Sign)> extend = [&](VertexId v, bool has_in, Sign in) {
        for (EdgeId e : g.incident(v)) {
            if (has_in && g.sign_at(e, v) == in) continue;
            const VertexId w = g.other(e, v);
            if (on_path[w]) continue;
            cur.edges.push_back(e);
            cur.vertices.push_back(w);
            if (in_x[w]) {
                if (w > cur.front()) {
                    if (out.size() == limit)
                        throw LimitExceeded("more than " + std::to_string(limit) + " X-paths",
                                            out.size());
                    out.push_back(cur);
                }
            } else {
                on_path[w] = 1;
                extend(w, true, g.sign_at(e, w));
                on_path[w] = 0;
            }
            cur.edges.pop_back();
            cur.vertices.pop_back();
        }
    };

    for (VertexId start : x) {
        cur = SignedPath{{start}, {}};
        on_path[start] = 1;
        extend(start, false, Sign::Minus);
        on_path[start] = 0;
    }
    return out;
}

std::size_t brute_max_disjoint(const BidirectedMultigraph& g, const VertexSet& x,
                               std::size_t limit) {
    guard_vertices(g.num_vertices(), kMaskVertices, "brute_max_disjoint");
    std::vector<MaskedPath> masked;
    for (const SignedPath& p : enumerate_x_paths(g, x, limit))
        masked.push_back({mask_of(normalized(p.vertices)), p.front(), p.back()});
    return max_disjoint(g.num_vertices(), mask_of(normalized(x)), masked);
}

DualMinimum brute_dual_min(const BidirectedMultigraph& g, const VertexSet& x_in) {
    const std::size_t n = g.num_vertices();
    guard_vertices(n, 10, "brute_dual_min");
    const VertexSet x = normalized(x_in);
    const Indicator in_x(n, x);

    // Per-vertex state: 0 neither, 1 S only, 2 T only, 3 both. X vertices
    // only take 0 or 3.
    std::vector<int> state(n, 0);
    DualMinimum best;
    bool have = false;
    for (;;) {
        VertexSet s, t;
        for (VertexId v = 0; v < n; ++v) {
            if (state[v] & 1) s.push_back(v);
            if (state[v] & 2) t.push_back(v);
        }
        const std::size_t value = dual_value(g, x, s, t);
        if (!have || value < best.value) {
            best = {value, s, t};
            have = true;
        }
        VertexId i = 0;
        for (; i < n; ++i) {
            if (in_x[i] && state[i] == 0) {
                state[i] = 3;
                break;
            }
            if (!in_x[i] && state[i] < 3) {
                ++state[i];
                break;
            }
            state[i] = 0;
        }
        if (i == n) break;
    }
    return best;
}

std::size_t brute_matching(const Multigraph& h) {
    const std::size_t n = h.num_vertices();
    guard_vertices(n, kMaskVertices, "brute_matching");
    std::vector<Mask> adj(n, 0);
    for (EdgeId e = 0; e < h.num_edges(); ++e) {
        adj[h.edge(e).u] |= Mask{1} << h.edge(e).v;
        adj[h.edge(e).v] |= Mask{1} << h.edge(e).u;
    }
    std::unordered_map<Mask, std::size_t> memo;
    std::function<std::size_t(Mask)> best = [&](Mask avail) -> std::size_t {
        if (avail == 0) return 0;
        if (auto it = memo.find(avail); it != memo.end()) return it->second;
        const auto v = static_cast<VertexId>(std::countr_zero(avail));
        const Mask rest = avail & ~(Mask{1} << v);
        std::size_t result = best(rest);
        for (Mask cand = adj[v] & rest; cand != 0; cand &= cand - 1) {
            const auto u = static_cast<VertexId>(std::countr_zero(cand));
            result = std::max(result, 1 + best(rest & ~(Mask{1} << u)));
        }
        memo.emplace(avail, result);
        return result;
    };
    return best(n == 0 ? 0 : (Mask{1} << n) - 1);
}

std::size_t brute_tutte_berge(const Multigraph& h) {
    const std::size_t n = h.num_vertices();
    guard_vertices(n, 16, "brute_tutte_berge");
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (EdgeId e = 0; e < h.num_edges(); ++e) edges.emplace_back(h.edge(e).u, h.edge(e).v);

    std::size_t best = n;
    for (Mask u = 0; u < (Mask{1} << n); ++u) {
        const auto root = find_roots(n, edges, u);
        std::vector<std::size_t> size(n, 0);
        for (VertexId v = 0; v < n; ++v)
            if (!(u >> v & 1)) ++size[root[v]];
        std::size_t value = static_cast<std::size_t>(std::popcount(u));
        for (std::size_t s : size) value += s / 2;
        best = std::min(best, value);
    }
    return best;
}

std::size_t brute_directed_packing(const Digraph& d, const VertexSet& x_in) {
    const std::size_t n = d.num_vertices;
    guard_vertices(n, kMaskVertices, "brute_directed_packing");
    const VertexSet x = normalized(x_in);
    const Mask x_mask = mask_of(x);
    std::vector<std::vector<VertexId>> out(n);
    for (auto [a, b] : d.arcs) out[a].push_back(b);

    std::vector<MaskedPath> paths;
    std::function<void(VertexId, VertexId, Mask)> extend = [&](VertexId start, VertexId v, Mask used) {
        for (VertexId w : out[v]) {
            if (used >> w & 1) continue;
            const Mask next = used | Mask{1} << w;
            if (x_mask >> w & 1)
                paths.push_back({next, start, w});
            else
                extend(start, w, next);
        }
    };
    for (VertexId s : x) extend(s, s, Mask{1} << s);
    return max_disjoint(n, x_mask, paths);
}

std::size_t directed_dual_value(const Digraph& d, const VertexSet& x_in, const VertexSet& s_in,
                                const VertexSet& t_in) {
    const std::size_t n = d.num_vertices;
    const VertexSet x = normalized(x_in), s = normalized(s_in), t = normalized(t_in);
    const Indicator in_x(n, x), in_s(n, s), in_t(n, t);
    std::vector<std::pair<VertexId, VertexId>> kept;
    for (auto [a, b] : d.arcs)
        if (!in_s[b] && !in_t[a]) kept.emplace_back(a, b);
    std::vector<VertexId> parent(n);
    for (VertexId v = 0; v < n; ++v) parent[v] = v;
    const auto find = [&](VertexId v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (auto [a, b] : kept) parent[find(a)] = find(b);
    std::vector<std::size_t> hits(n, 0);
    for (VertexId v = 0; v < n; ++v)
        if (in_x[v] || in_s[v] || in_t[v]) ++hits[find(v)];
    std::size_t value = set_intersection(s, t).size();
    for (std::size_t h : hits) value += h / 2;
    return value;
}

std::size_t brute_undirected_packing(const Multigraph& g, const VertexSet& x_in) {
    const std::size_t n = g.num_vertices();
    guard_vertices(n, kMaskVertices, "brute_undirected_packing");
    const VertexSet x = normalized(x_in);
    const Mask x_mask = mask_of(x);

    std::vector<MaskedPath> paths;
    std::function<void(VertexId, VertexId, Mask)> extend = [&](VertexId start, VertexId v, Mask used) {
        for (EdgeId e : g.incident(v)) {
            const VertexId w = g.other(e, v);
            if (used >> w & 1) continue;
            const Mask next = used | Mask{1} << w;
            if (x_mask >> w & 1) {
                if (w > start) paths.push_back({next, start, w});
            } else {
                extend(start, w, next);
            }
        }
    };
    for (VertexId s : x) extend(s, s, Mask{1} << s);
    return max_disjoint(n, x_mask, paths);
}

std::size_t brute_gallai_bound(const Multigraph& g, const VertexSet& x_in) {
    const std::size_t n = g.num_vertices();
    guard_vertices(n, 16, "brute_gallai_bound");
    const Mask x_mask = mask_of(normalized(x_in));
    std::vector<std::pair<VertexId, VertexId>> edges;
    for (EdgeId e = 0; e < g.num_edges(); ++e) edges.emplace_back(g.edge(e).u, g.edge(e).v);

    std::size_t best = static_cast<std::size_t>(-1);
    for (Mask s = 0; s < (Mask{1} << n); ++s) {
        const auto root = find_roots(n, edges, s);
        std::vector<std::size_t> hits(n, 0);
        for (VertexId v = 0; v < n; ++v)
            if (!(s >> v & 1) && (x_mask >> v & 1)) ++hits[root[v]];
        std::size_t value = static_cast<std::size_t>(std::popcount(s));
        for (std::size_t h : hits) value += h / 2;
        best = std::min(best, value);
    }
    return best;
}

}  // namespace bipaths::oracle

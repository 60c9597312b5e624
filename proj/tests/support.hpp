#pragma once

// Fixtures and random generators shared by the test binaries.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "bipaths/bigraph.hpp"
#include "bipaths/generate.hpp"

namespace bipaths::test {

/// K^n with only (-,-)-edges.
inline BidirectedMultigraph complete_minus(std::size_t n) {
    BidirectedMultigraph g(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, Sign::Minus, v, Sign::Minus);
    return g;
}

inline Multigraph complete(std::size_t n) {
    Multigraph g(n);
    for (VertexId u = 0; u < n; ++u)
        for (VertexId v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline VertexSet all_vertices(std::size_t n) {
    VertexSet s(n);
    for (VertexId v = 0; v < n; ++v) s[v] = v;
    return s;
}

inline VertexId pick(std::mt19937_64& rng, std::size_t bound) {
    return static_cast<VertexId>(uniform_below(rng, bound));
}

/// Random loop-free multigraph with parallel edges likely on small n.
inline Multigraph random_multigraph(std::mt19937_64& rng, std::size_t n, std::size_t m) {
    Multigraph g(n);
    if (n < 2) return g;
    for (std::size_t i = 0; i < m; ++i) {
        const VertexId u = pick(rng, n);
        VertexId v = pick(rng, n - 1);
        if (v >= u) ++v;
        g.add_edge(u, v);
    }
    return g;
}

inline Digraph random_digraph(std::mt19937_64& rng, std::size_t n, std::size_t m) {
    Digraph d{n, {}};
    if (n < 2) return d;
    for (std::size_t i = 0; i < m; ++i) {
        const VertexId u = pick(rng, n);
        VertexId v = pick(rng, n - 1);
        if (v >= u) ++v;
        d.arcs.emplace_back(u, v);
    }
    return d;
}

inline VertexSet random_subset(std::mt19937_64& rng, std::size_t n, std::uint64_t percent = 50) {
    VertexSet s;
    for (VertexId v = 0; v < n; ++v)
        if (uniform_below(rng, 100) < percent) s.push_back(v);
    return s;
}

/// Random (S, T) with X cap S = X cap T.
inline std::pair<VertexSet, VertexSet> random_admissible_pair(std::mt19937_64& rng, std::size_t n,
                                                              const VertexSet& x) {
    VertexSet s, t;
    for (VertexId v = 0; v < n; ++v) {
        const bool in_x = std::binary_search(x.begin(), x.end(), v);
        const auto r = uniform_below(rng, 4);
        if (in_x) {
            if (r == 0) {
                s.push_back(v);
                t.push_back(v);
            }
        } else {
            if (r & 1) s.push_back(v);
            if (r & 2) t.push_back(v);
        }
    }
    return {s, t};
}

inline Instance random_instance(std::uint64_t seed, std::size_t max_vertices, std::size_t max_edges,
                                double x_fraction) {
    std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
    GeneratorParams p;
    p.vertices = 1 + uniform_below(rng, max_vertices);
    p.edges = p.vertices < 2 ? 0 : uniform_below(rng, max_edges + 1);
    p.x_fraction = x_fraction;
    p.seed = seed;
    return generate_instance(p);
}

}  // namespace bipaths::test

#include "bipaths/solver.hpp"

#include <algorithm>
#include <string>

#include "bipaths/matching.hpp"

namespace bipaths {

namespace {

void require_subset(const BidirectedMultigraph& g, const VertexSet& s, const char* name) {
    for (VertexId v : s)
        if (!g.has_vertex(v))
            throw Error(ErrorCode::UnknownVertex,
                        std::string(name) + " contains unknown vertex " + std::to_string(v));
}

void require_side_condition(const VertexSet& x, const VertexSet& s, const VertexSet& t) {
    if (set_intersection(x, s) != set_intersection(x, t))
        throw Error(ErrorCode::SideConditionViolated, "X cap S differs from X cap T");
}

std::vector<SignedPath> extract_paths(const AuxiliaryGraph& aux, const Matching& m) {
    std::vector<SignedPath> paths;
    for (const auto& c : alternating_components(aux.graph(), aux.base_matching(), m)) {
        if (c.kind != AlternatingComponent::Kind::Path || c.edges.empty()) continue;
        if (aux.label(c.vertices.front()).copy != 0 || aux.label(c.vertices.back()).copy != 0)
            continue;
        paths.push_back(project_path(aux, AlternatingPath{c.vertices, c.edges}));
    }
    std::sort(paths.begin(), paths.end(),
              [](const SignedPath& a, const SignedPath& b) { return a.front() < b.front(); });
    return paths;
}

}  // namespace

Certificate certificate_from_barrier(const AuxiliaryGraph& aux, const VertexSet& u) {
    const Indicator in_u(aux.graph().num_vertices(), u);
    Certificate cert;
    for (VertexId v = 0; v < aux.source().num_vertices(); ++v) {
        if (in_u[aux.project(v, 1)]) cert.t.push_back(v);
        if (in_u[aux.project(v, 2)]) cert.s.push_back(v);
    }
    return cert;
}

VertexSet barrier_from_pair(const AuxiliaryGraph& aux, const VertexSet& s, const VertexSet& t) {
    VertexSet u;
    for (VertexId v : t) u.push_back(aux.project(v, 1));
    for (VertexId v : s) u.push_back(aux.project(v, 2));
    return normalized(std::move(u));
}

Solution solve(const BidirectedMultigraph& g, const VertexSet& x_in) {
    const VertexSet x = normalized(x_in);
    require_subset(g, x, "X");
    const AuxiliaryGraph aux(g, x);
    const Multigraph& h = aux.graph();
    const std::size_t outside = aux.base_matching().size();

    const Matching m = maximum_matching(h, aux.base_matching());
    Solution sol;
    sol.packing.k = m.size() - outside;
    sol.packing.paths = extract_paths(aux, m);
    if (sol.packing.paths.size() < sol.packing.k)
        throw Error(ErrorCode::InternalDualityMismatch,
                    "found " + std::to_string(sol.packing.paths.size()) +
                        " alternating X-paths for a matching surplus of " +
                        std::to_string(sol.packing.k));
    sol.packing.paths.resize(sol.packing.k);

    const VertexSet u = gallai_edmonds(h, m).barrier;
    sol.certificate = certificate_from_barrier(aux, u);
    sol.certificate.value = dual_value(g, x, sol.certificate.s, sol.certificate.t);
    const std::size_t lifted = tutte_berge_value(h, u) - outside;
    if (sol.certificate.value != sol.packing.k || lifted != sol.packing.k)
        throw Error(ErrorCode::InternalDualityMismatch,
                    "dual value " + std::to_string(sol.certificate.value) + ", barrier value " +
                        std::to_string(lifted) + ", packing " + std::to_string(sol.packing.k));
    return sol;
}

PackingResult max_disjoint_x_paths(const BidirectedMultigraph& g, const VertexSet& x) {
    return solve(g, x).packing;
}

Certificate certificate(const BidirectedMultigraph& g, const VertexSet& x) {
    return solve(g, x).certificate;
}

std::string_view to_string(CertificateCheck c) noexcept {
    switch (c) {
        case CertificateCheck::Ok: return "ok";
        case CertificateCheck::SideConditionViolated: return "SideConditionViolated";
        case CertificateCheck::ValueMismatch: return "ValueMismatch";
        case CertificateCheck::ClaimMismatch: return "ClaimMismatch";
        case CertificateCheck::UnknownVertex: return "UnknownVertex";
    }
    return "unknown";
}

CertificateCheck check_certificate(const BidirectedMultigraph& g, const VertexSet& x_in,
                                   const Certificate& cert, std::size_t claimed_k) {
    const VertexSet x = normalized(x_in), s = normalized(cert.s), t = normalized(cert.t);
    for (const VertexSet* set : {&x, &s, &t})
        for (VertexId v : *set)
            if (!g.has_vertex(v)) return CertificateCheck::UnknownVertex;
    if (set_intersection(x, s) != set_intersection(x, t))
        return CertificateCheck::SideConditionViolated;
    if (dual_value(g, x, s, t) != cert.value) return CertificateCheck::ValueMismatch;
    if (cert.value != claimed_k) return CertificateCheck::ClaimMismatch;
    return CertificateCheck::Ok;
}

std::vector<AuxVertex> gamma_image(const BidirectedMultigraph& g, const VertexSet& x,
                                   const VertexSet& s, const VertexSet& t, VertexId v) {
    require_side_condition(x, s, t);
    if (!g.has_vertex(v)) throw Error(ErrorCode::UnknownVertex, std::to_string(v));
    const auto has = [v](const VertexSet& set) { return std::binary_search(set.begin(), set.end(), v); };
    const bool in_s = has(s), in_t = has(t);
    if (in_s && in_t) return {};
    if (in_s) return {{v, 1}};
    if (in_t) return {{v, 2}};
    if (has(x)) return {{v, 0}};
    return {{v, 1}, {v, 2}};
}

bool verify_component_correspondence(const BidirectedMultigraph& g, const VertexSet& x_in,
                                     const VertexSet& s_in, const VertexSet& t_in) {
    const VertexSet x = normalized(x_in), s = normalized(s_in), t = normalized(t_in);
    require_subset(g, s, "S");
    require_subset(g, t, "T");
    require_side_condition(x, s, t);

    const AuxiliaryGraph aux(g, x);
    std::vector<VertexSet> h_family = components_without(aux.graph(), barrier_from_pair(aux, s, t));

    const std::size_t n = g.num_vertices();
    const Indicator in_x(n, x), in_s(n, s), in_t(n, t);
    std::vector<VertexSet> b_family;
    for (const VertexSet& c : weak_components(restrict(g, s, t).graph)) {
        if (c.size() == 1 && in_s[c[0]] && in_t[c[0]]) continue;
        VertexSet image;
        std::size_t marked = 0, unmarked = 0;
        for (VertexId v : c) {
            for (const AuxVertex& a : gamma_image(g, x, s, t, v))
                image.push_back(aux.project(a.vertex, a.copy));
            (in_x[v] || in_s[v] || in_t[v] ? marked : unmarked) += 1;
        }
        image = normalized(std::move(image));
        if (image.size() != marked + 2 * unmarked) return false;
        b_family.push_back(std::move(image));
    }

    std::sort(h_family.begin(), h_family.end());
    std::sort(b_family.begin(), b_family.end());
    return h_family == b_family;
}

VertexSet hitting_set_from_certificate(const BidirectedMultigraph& g, const VertexSet& x,
                                       const Certificate& cert) {
    const std::size_t n = g.num_vertices();
    const Indicator in_x(n, x), in_s(n, cert.s), in_t(n, cert.t);
    VertexSet y = set_intersection(cert.s, cert.t);
    for (const VertexSet& c : weak_components(restrict(g, cert.s, cert.t).graph)) {
        bool first = true;
        for (VertexId v : c) {
            if (!(in_x[v] || in_s[v] || in_t[v])) continue;
            if (first) {
                first = false;  // leave out the minimum
                continue;
            }
            y.push_back(v);
        }
    }
    return normalized(std::move(y));
}

std::variant<HittingSet, PackingResult> hitting_set(const BidirectedMultigraph& g,
                                                    const VertexSet& x_in, std::size_t k) {
    if (k == 0) throw Error(ErrorCode::InvalidK, "k must be at least 1");
    const VertexSet x = normalized(x_in);
    Solution sol = solve(g, x);
    if (sol.packing.k >= k) {
        sol.packing.paths.resize(k);
        sol.packing.k = k;
        return sol.packing;
    }
    HittingSet hs{hitting_set_from_certificate(g, x, sol.certificate), k};
    if (hs.y.size() > 2 * k - 2)
        throw Error(ErrorCode::InternalDualityMismatch,
                    "hitting set of size " + std::to_string(hs.y.size()) + " exceeds 2k-2");
    return hs;
}

bool has_x_path(const BidirectedMultigraph& g, const VertexSet& x) {
    const Indicator in_x(g.num_vertices(), normalized(x));
    std::vector<std::uint8_t> on_path(g.num_vertices(), 0);

    struct Frame {
        VertexId v;
        bool has_in;
        Sign sign_in;
        std::size_t next;
    };
    std::vector<Frame> stack;

    for (VertexId start : normalized(x)) {
        stack.push_back({start, false, Sign::Minus, 0});
        on_path[start] = 1;
        while (!stack.empty()) {
            Frame& f = stack.back();
            const auto inc = g.incident(f.v);
            if (f.next == inc.size()) {
                on_path[f.v] = 0;
                stack.pop_back();
                continue;
            }
            const EdgeId e = inc[f.next++];
            if (f.has_in && g.sign_at(e, f.v) == f.sign_in) continue;
            const VertexId w = g.other(e, f.v);
            if (on_path[w]) continue;
            if (in_x[w]) return true;
            stack.push_back({w, true, g.sign_at(e, w), 0});
            on_path[w] = 1;
        }
    }
    return false;
}

}  // namespace bipaths

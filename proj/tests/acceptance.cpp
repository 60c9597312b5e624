// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "bipaths/auxgraph.hpp"
#include "bipaths/oracle.hpp"
#include "bipaths/solver.hpp"
#include "support.hpp"

using namespace bipaths;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
    std::string first_failure;

    void fail(const std::string& why) {
        if (pass) first_failure = why;
        pass = false;
    }
};

constexpr double fractions[] = {0.3, 0.6, 1.0};
constexpr std::uint64_t instance_count = 600;

Instance criterion_instance(std::uint64_t seed) {
    return test::random_instance(seed, 7, 14, fractions[seed % 3]);
}

std::string tag(std::uint64_t seed) { return "seed " + std::to_string(seed); }

bool disjoint_family(const std::vector<std::vector<VertexId>>& family) {
    std::vector<VertexId> all;
    for (const auto& f : family) all.insert(all.end(), f.begin(), f.end());
    std::sort(all.begin(), all.end());
    return std::adjacent_find(all.begin(), all.end()) == all.end();
}

bool no_x_path(const BidirectedMultigraph& g, const VertexSet& x) {
    return oracle::enumerate_x_paths(g, x).empty();
}

Outcome min_max_equality() {
    Outcome o;
    for (std::uint64_t seed = 0; seed < instance_count; ++seed) {
        const Instance inst = criterion_instance(seed);
        const std::size_t brute = oracle::brute_max_disjoint(inst.graph, inst.x);
        const std::size_t k = max_disjoint_x_paths(inst.graph, inst.x).k;
        const std::size_t dual = oracle::brute_dual_min(inst.graph, inst.x).value;
        if (brute != k || k != dual)
            o.fail(tag(seed) + ": brute " + std::to_string(brute) + ", solver " + std::to_string(k) +
                   ", dual " + std::to_string(dual));
    }
    o.detail = std::to_string(instance_count) + " instances";
    return o;
}

Outcome certificate_soundness() {
    Outcome o;
    std::size_t mismatches = 0;
    for (std::uint64_t seed = 0; seed < instance_count; ++seed) {
        const Instance inst = criterion_instance(seed);
        try {
            const Solution sol = solve(inst.graph, inst.x);
            const Certificate cert = certificate(inst.graph, inst.x);
            if (cert.value != sol.packing.k) o.fail(tag(seed) + ": certificate value differs from k");
            if (!verify_certificate(inst.graph, inst.x, cert, sol.packing.k))
                o.fail(tag(seed) + ": certificate rejected");
        } catch (const Error& e) {
            if (e.code() == ErrorCode::InternalDualityMismatch) ++mismatches;
            o.fail(tag(seed) + ": " + e.what());
        }
    }
    o.detail = std::to_string(instance_count) + " instances, " + std::to_string(mismatches) +
               " duality mismatches";
    return o;
}

Outcome hitting_set_bound() {
    Outcome o;
    std::size_t sets = 0, packings = 0;
    for (std::uint64_t seed = 0; seed < instance_count; ++seed) {
        const Instance inst = criterion_instance(seed);
        const std::size_t best = oracle::brute_max_disjoint(inst.graph, inst.x);
        for (std::size_t k = 1; k <= best + 2; ++k) {
            const auto result = hitting_set(inst.graph, inst.x, k);
            const std::string where = tag(seed) + ", k=" + std::to_string(k);
            if (const auto* hs = std::get_if<HittingSet>(&result)) {
                ++sets;
                const auto rest = delete_vertices(inst.graph, hs->y);
                if (hs->y.size() > 2 * k - 2) o.fail(where + ": |Y| = " + std::to_string(hs->y.size()));
                if (has_x_path(rest, inst.x) || !no_x_path(rest, inst.x)) o.fail(where + ": X-path survives");
            } else {
                ++packings;
                const auto& paths = std::get<PackingResult>(result).paths;
                std::vector<std::vector<VertexId>> family;
                for (const auto& p : paths) {
                    if (!is_x_path(inst.graph, inst.x, p)) o.fail(where + ": invalid path");
                    family.push_back(p.vertices);
                }
                if (paths.size() != k || !disjoint_family(family)) o.fail(where + ": bad packing");
            }
        }
    }
    o.detail = std::to_string(sets) + " hitting sets, " + std::to_string(packings) + " packings";
    return o;
}

Outcome tightness_family() {
    Outcome o;
    std::size_t subsets = 0;
    for (std::size_t k = 1; k <= 4; ++k) {
        const std::size_t n = 2 * k - 1;
        const auto g = test::complete_minus(n);
        const auto x = test::all_vertices(n);
        const std::size_t packing = max_disjoint_x_paths(g, x).k;
        if (packing != k - 1 || oracle::brute_max_disjoint(g, x) != k - 1)
            o.fail("k=" + std::to_string(k) + ": packing " + std::to_string(packing));
        for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (std::popcount(mask) + 3 > static_cast<int>(2 * k)) continue;
            VertexSet y;
            for (VertexId v = 0; v < n; ++v)
                if (mask >> v & 1) y.push_back(v);
            ++subsets;
            if (no_x_path(delete_vertices(g, y), x))
                o.fail("k=" + std::to_string(k) + ": small Y hits every X-path");
        }
    }
    o.detail = "k = 1..4, " + std::to_string(subsets) + " small sets Y checked";
    return o;
}

Outcome matching_engine() {
    Outcome o;
    std::mt19937_64 rng(5150);
    constexpr int rounds = 600;
    for (int round = 0; round < rounds; ++round) {
        const std::size_t n = 1 + test::pick(rng, 10);
        const Multigraph h = test::random_multigraph(rng, n, test::pick(rng, 3 * n + 1));
        const std::size_t nu = oracle::brute_matching(h);
        const Matching m = maximum_matching(h);
        const auto witness = tutte_berge_witness(h);
        // deficiency of the witness, recounted from its odd components
        std::size_t odd = 0;
        for (const auto& c : components_without(h, witness.barrier)) odd += c.size() % 2;
        const std::size_t recount = (n + witness.barrier.size() - odd) / 2;
        const std::string where = "round " + std::to_string(round);
        if (!is_matching(h, m) || m.size() != nu) o.fail(where + ": matching size " + std::to_string(m.size()));
        if (witness.value != m.size() || recount != nu) o.fail(where + ": witness value differs");
    }
    o.detail = std::to_string(rounds) + " multigraphs";
    return o;
}

/// gamma by its five cases, written against the auxiliary labelling
std::vector<VertexId> gamma_ids(const AuxiliaryGraph& aux, const VertexSet& s, const VertexSet& t, VertexId v) {
    const bool in_s = std::binary_search(s.begin(), s.end(), v);
    const bool in_t = std::binary_search(t.begin(), t.end(), v);
    if (in_s && in_t) return {};
    if (aux.in_x(v)) return {aux.project(v, 0)};
    if (in_s) return {aux.project(v, 1)};
    if (in_t) return {aux.project(v, 2)};
    return {aux.project(v, 1), aux.project(v, 2)};
}

Outcome correspondence_identity() {
    Outcome o;
    std::mt19937_64 rng(77);
    constexpr std::uint64_t tuples = 300;
    for (std::uint64_t seed = 0; seed < tuples; ++seed) {
        const Instance inst = test::random_instance(1000 + seed, 8, 14, fractions[seed % 3]);
        const auto& g = inst.graph;
        const auto [s, t] = test::random_admissible_pair(rng, g.num_vertices(), inst.x);
        const std::string where = tag(1000 + seed);
        if (!verify_component_correspondence(g, inst.x, s, t)) o.fail(where + ": library check rejects");

        const AuxiliaryGraph aux(g, inst.x);
        const VertexSet u = barrier_from_pair(aux, s, t);
        auto h_family = components_without(aux.graph(), u);
        for (auto& d : h_family) std::sort(d.begin(), d.end());
        std::sort(h_family.begin(), h_family.end());

        const VertexSet both = set_intersection(s, t);
        const VertexSet marked = set_union(inst.x, set_union(s, t));
        std::vector<std::vector<VertexId>> b_family;
        for (const VertexSet& c : weak_components(restrict(g, s, t).graph)) {
            if (c.size() == 1 && std::binary_search(both.begin(), both.end(), c.front())) continue;
            std::vector<VertexId> image;
            std::size_t weight = 0;
            for (VertexId v : c) {
                const auto gv = gamma_ids(aux, s, t, v);
                image.insert(image.end(), gv.begin(), gv.end());
                weight += std::binary_search(marked.begin(), marked.end(), v) ? 1 : 2;
            }
            std::sort(image.begin(), image.end());
            if (image.size() != weight) o.fail(where + ": cardinality identity fails");
            b_family.push_back(image);
        }
        std::sort(b_family.begin(), b_family.end());
        if (b_family != h_family) o.fail(where + ": component families differ");
    }
    o.detail = std::to_string(tuples) + " tuples";
    return o;
}

/// All H-paths between copy-0 vertices with non-terminal interior whose even
/// edges are outside M0 and odd edges inside it; each listed once (front < back).
std::vector<AlternatingPath> enumerate_alternating(const AuxiliaryGraph& aux) {
    const Multigraph& h = aux.graph();
    std::vector<AlternatingPath> out;
    std::vector<std::uint8_t> on(h.num_vertices(), 0);
    AlternatingPath cur;
    const auto terminal = [&](VertexId w) { return aux.label(w).copy == 0; };
    std::function<void()> grow = [&] {
        const VertexId v = cur.vertices.back();
        const bool want_split = cur.edges.size() % 2 == 1;
        for (EdgeId e : h.incident(v)) {
            if (aux.is_split_edge(e) != want_split) continue;
            const VertexId w = h.other(e, v);
            if (on[w]) continue;
            cur.vertices.push_back(w);
            cur.edges.push_back(e);
            if (terminal(w)) {
                if (cur.vertices.front() < w) out.push_back(cur);
            } else {
                on[w] = 1;
                grow();
                on[w] = 0;
            }
            cur.vertices.pop_back();
            cur.edges.pop_back();
        }
    };
    for (VertexId r = 0; r < h.num_vertices(); ++r) {
        if (!terminal(r)) continue;
        cur = AlternatingPath{{r}, {}};
        on[r] = 1;
        grow();
        on[r] = 0;
    }
    return out;
}

Outcome theta_bijection() {
    Outcome o;
    std::size_t paths_checked = 0, pairs_checked = 0;
    constexpr std::uint64_t instances = 150;
    for (std::uint64_t seed = 0; seed < instances; ++seed) {
        const Instance inst = test::random_instance(2000 + seed, 7, 12, fractions[seed % 3]);
        const std::string where = tag(2000 + seed);
        const AuxiliaryGraph aux(inst.graph, inst.x);
        const auto paths = oracle::enumerate_x_paths(inst.graph, inst.x);
        std::vector<AlternatingPath> lifts;
        for (const auto& p : paths) {
            const AlternatingPath q = lift_path(aux, p);
            if (project_path(aux, q) != p) o.fail(where + ": project(lift(P)) != P");
            lifts.push_back(q);
            ++paths_checked;
        }

        // every alternating path of H comes from some X-path
        std::vector<SignedPath> projected;
        for (const AlternatingPath& q : enumerate_alternating(aux)) {
            const SignedPath p = project_path(aux, q);
            if (!(lift_path(aux, p) == q)) o.fail(where + ": lift(project(Q)) != Q");
            projected.push_back(canonical(p));
        }
        auto sorted = paths;
        std::sort(sorted.begin(), sorted.end());
        std::sort(projected.begin(), projected.end());
        if (projected != sorted) o.fail(where + ": alternating paths and X-paths do not correspond");

        for (std::size_t i = 0; i < lifts.size(); ++i)
            for (std::size_t j = i + 1; j < lifts.size(); ++j) {
                const bool b_disjoint = disjoint_family({paths[i].vertices, paths[j].vertices});
                if (b_disjoint != disjoint_family({lifts[i].vertices, lifts[j].vertices}))
                    o.fail(where + ": disjointness not preserved");
                ++pairs_checked;
            }
    }
    o.detail = std::to_string(instances) + " instances, " + std::to_string(paths_checked) + " paths, " +
               std::to_string(pairs_checked) + " pairs";
    return o;
}

Outcome reductions() {
    Outcome o;
    std::mt19937_64 rng(31337);
    constexpr int rounds = 250;
    for (int round = 0; round < rounds; ++round) {
        const std::string where = "round " + std::to_string(round);
        const std::size_t n = 1 + test::pick(rng, 6);
        const VertexSet x = test::random_subset(rng, n, 50);

        const Digraph d = test::random_digraph(rng, n, test::pick(rng, 2 * n + 1));
        const Solution sol = solve(from_digraph(d), x);
        if (sol.packing.k != oracle::brute_directed_packing(d, x)) o.fail(where + ": directed packing differs");
        if (oracle::directed_dual_value(d, x, sol.certificate.s, sol.certificate.t) != sol.certificate.value)
            o.fail(where + ": directed dual value differs");

        const Multigraph u = test::random_multigraph(rng, n, test::pick(rng, 2 * n + 1));
        const std::size_t k = max_disjoint_x_paths(from_undirected(u), x).k;
        if (k != oracle::brute_gallai_bound(u, x)) o.fail(where + ": Gallai bound differs");
        if (k != oracle::brute_undirected_packing(u, x)) o.fail(where + ": undirected packing differs");
    }
    o.detail = std::to_string(rounds) + " digraphs, " + std::to_string(rounds) + " undirected graphs";
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        Outcome (*run)();
    };
    const Criterion criteria[] = {
        {"min-max equality", min_max_equality},
        {"certificate soundness", certificate_soundness},
        {"hitting-set bound", hitting_set_bound},
        {"tightness family", tightness_family},
        {"matching engine", matching_engine},
        {"correspondence identity", correspondence_identity},
        {"lift/project bijection", theta_bijection},
        {"reductions", reductions},
    };
    int failures = 0;
    int index = 1;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %d %s: %s (%.2fs)%s%s\n", o.pass ? "PASS" : "FAIL", index++, c.name, o.detail.c_str(),
                    secs, o.pass ? "" : "; first failure: ", o.first_failure.c_str());
        failures += !o.pass;
    }
    return failures == 0 ? 0 : 1;
}

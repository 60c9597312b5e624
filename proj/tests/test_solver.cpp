#include "doctest.h"

#include <bit>

#include "bipaths/oracle.hpp"
#include "bipaths/solver.hpp"
#include "support.hpp"

using namespace bipaths;

namespace {

bool pairwise_disjoint(const std::vector<SignedPath>& paths, std::size_t n) {
    std::vector<std::uint8_t> used(n, 0);
    for (const auto& p : paths)
        for (VertexId v : p.vertices) {
            if (used[v]) return false;
            used[v] = 1;
        }
    return true;
}

/// Every Y with |Y| = size leaves an X-path (checked by the oracle search).
bool every_subset_leaves_path(const BidirectedMultigraph& g, const VertexSet& x, std::size_t size) {
    const std::size_t n = g.num_vertices();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (static_cast<std::size_t>(std::popcount(mask)) != size) continue;
        VertexSet y;
        for (VertexId v = 0; v < n; ++v)
            if (mask >> v & 1) y.push_back(v);
        if (oracle::enumerate_x_paths(delete_vertices(g, y), x).empty()) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("packing examples") {
    CHECK(max_disjoint_x_paths(test::complete_minus(4), {}).k == 0);

    const auto k5 = max_disjoint_x_paths(test::complete_minus(5), test::all_vertices(5));
    CHECK(k5.k == 2);
    CHECK(k5.paths.size() == 2);
    CHECK(pairwise_disjoint(k5.paths, 5));

    BidirectedMultigraph arc(2);
    arc.add_edge(0, Sign::Minus, 1, Sign::Plus);
    const auto one = max_disjoint_x_paths(arc, {0, 1});
    CHECK(one.k == 1);
    CHECK(one.paths.front() == SignedPath{{0, 1}, {0}});

    CHECK_THROWS_AS(max_disjoint_x_paths(arc, {4}), Error);
}

TEST_CASE("certificate examples") {
    const auto empty = certificate(test::complete_minus(3), {});
    CHECK(empty.value == 0);

    const auto k5 = certificate(test::complete_minus(5), test::all_vertices(5));
    CHECK(k5.s.empty());
    CHECK(k5.t.empty());
    CHECK(k5.value == 2);
}

TEST_CASE("blocked instance has no X-path") {
    // x1 -> v <- x2 as (-,+)-edges: both half-edges at v carry +
    BidirectedMultigraph g(3);
    g.add_edge(0, Sign::Minus, 2, Sign::Plus);
    g.add_edge(1, Sign::Minus, 2, Sign::Plus);
    CHECK_FALSE(has_x_path(g, {0, 1}));
    CHECK(max_disjoint_x_paths(g, {0, 1}).k == 0);
    CHECK_FALSE(has_x_path(BidirectedMultigraph(3), {0, 1, 2}));

    BidirectedMultigraph edge(2);
    edge.add_edge(0, Sign::Plus, 1, Sign::Plus);
    CHECK(has_x_path(edge, {0, 1}));
}

TEST_CASE("verify_certificate reasons") {
    const auto g = test::complete_minus(5);
    const auto x = test::all_vertices(5);
    const Certificate cert = certificate(g, x);
    CHECK(verify_certificate(g, x, cert, 2));
    CHECK(check_certificate(g, x, cert, 3) == CertificateCheck::ClaimMismatch);

    Certificate perturbed = cert;
    perturbed.value = 3;
    CHECK(check_certificate(g, x, perturbed, 3) == CertificateCheck::ValueMismatch);

    const Certificate lopsided{{0}, {}, 2};
    CHECK(check_certificate(g, x, lopsided, 2) == CertificateCheck::SideConditionViolated);
    CHECK(check_certificate(g, x, Certificate{{9}, {9}, 2}, 2) == CertificateCheck::UnknownVertex);
}

TEST_CASE("gamma image cases") {
    BidirectedMultigraph g(5);
    const VertexSet x = {0, 1};
    const VertexSet s = {0, 2, 4}, t = {0, 3, 4};
    CHECK(gamma_image(g, x, s, t, 0).empty());
    CHECK(gamma_image(g, x, s, t, 4).empty());
    CHECK(gamma_image(g, x, s, t, 2) == std::vector<AuxVertex>{{2, 1}});
    CHECK(gamma_image(g, x, s, t, 3) == std::vector<AuxVertex>{{3, 2}});
    CHECK(gamma_image(g, x, s, t, 1) == std::vector<AuxVertex>{{1, 0}});
    CHECK(gamma_image(g, {0}, {}, {}, 1) == std::vector<AuxVertex>{{1, 1}, {1, 2}});
    CHECK_THROWS_AS(gamma_image(g, x, {1}, {}, 1), Error);
}

TEST_CASE("component correspondence") {
    CHECK(verify_component_correspondence(test::complete_minus(5), test::all_vertices(5), {}, {}));
    std::mt19937_64 rng(99);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto inst = test::random_instance(seed, 7, 14, 0.5);
        const auto [s, t] = test::random_admissible_pair(rng, inst.graph.num_vertices(), inst.x);
        CHECK(verify_component_correspondence(inst.graph, inst.x, s, t));
    }
}

TEST_CASE("barrier and pair translate back and forth") {
    std::mt19937_64 rng(8);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto inst = test::random_instance(seed, 7, 10, 0.5);
        const AuxiliaryGraph aux(inst.graph, inst.x);
        const auto [s, t] = test::random_admissible_pair(rng, inst.graph.num_vertices(), inst.x);
        const VertexSet u = barrier_from_pair(aux, s, t);
        const Certificate back = certificate_from_barrier(aux, u);
        CHECK(back.s == s);
        CHECK(back.t == t);
    }
}

TEST_CASE("solver agrees with the exhaustive oracles") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const double fraction = seed % 3 == 0 ? 0.3 : (seed % 3 == 1 ? 0.6 : 1.0);
        const auto inst = test::random_instance(seed, 7, 14, fraction);
        const Solution sol = solve(inst.graph, inst.x);
        CAPTURE(seed);
        CHECK(sol.packing.k == oracle::brute_max_disjoint(inst.graph, inst.x));
        CHECK(sol.certificate.value == oracle::brute_dual_min(inst.graph, inst.x).value);
        CHECK(verify_certificate(inst.graph, inst.x, sol.certificate, sol.packing.k));
        for (const auto& p : sol.packing.paths) {
            CHECK(is_x_path(inst.graph, inst.x, p));
            CHECK(p.front() < p.back());
        }
        CHECK(pairwise_disjoint(sol.packing.paths, inst.graph.num_vertices()));
        CHECK(std::is_sorted(sol.packing.paths.begin(), sol.packing.paths.end(),
                             [](const auto& a, const auto& b) { return a.front() < b.front(); }));
    }
}

TEST_CASE("weak duality on random admissible pairs") {
    std::mt19937_64 rng(17);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto inst = test::random_instance(seed, 8, 14, 0.5);
        const std::size_t k = max_disjoint_x_paths(inst.graph, inst.x).k;
        for (int i = 0; i < 10; ++i) {
            const auto [s, t] = test::random_admissible_pair(rng, inst.graph.num_vertices(), inst.x);
            CHECK(dual_value(inst.graph, inst.x, s, t) >= k);
        }
    }
}

TEST_CASE("hitting set examples") {
    const auto g = test::complete_minus(5);
    const auto x = test::all_vertices(5);

    const auto three = hitting_set(g, x, 3);
    REQUIRE(std::holds_alternative<HittingSet>(three));
    const auto& hs = std::get<HittingSet>(three);
    CHECK(hs.y.size() == 4);
    CHECK_FALSE(has_x_path(delete_vertices(g, hs.y), x));

    const auto two = hitting_set(g, x, 2);
    REQUIRE(std::holds_alternative<PackingResult>(two));
    CHECK(std::get<PackingResult>(two).paths.size() == 2);

    BidirectedMultigraph blocked(3);
    blocked.add_edge(0, Sign::Minus, 2, Sign::Plus);
    blocked.add_edge(1, Sign::Minus, 2, Sign::Plus);
    const auto none = hitting_set(blocked, {0, 1}, 1);
    REQUIRE(std::holds_alternative<HittingSet>(none));
    CHECK(std::get<HittingSet>(none).y.empty());

    try {
        hitting_set(g, x, 0);
        FAIL("expected InvalidK");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::InvalidK);
    }
}

TEST_CASE("hitting sets are sound on random instances") {
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto inst = test::random_instance(seed, 8, 14, seed % 2 ? 0.6 : 1.0);
        const std::size_t best = max_disjoint_x_paths(inst.graph, inst.x).k;
        for (std::size_t k = 1; k <= best + 2; ++k) {
            const auto result = hitting_set(inst.graph, inst.x, k);
            if (const auto* hs = std::get_if<HittingSet>(&result)) {
                CHECK(k > best);
                CHECK(hs->y.size() <= 2 * k - 2);
                CHECK_FALSE(has_x_path(delete_vertices(inst.graph, hs->y), inst.x));
                CHECK(oracle::enumerate_x_paths(delete_vertices(inst.graph, hs->y), inst.x).empty());
            } else {
                const auto& packing = std::get<PackingResult>(result);
                CHECK(k <= best);
                CHECK(packing.paths.size() == k);
            }
        }
    }
}

TEST_CASE("has_x_path agrees with enumeration") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        const auto inst = test::random_instance(seed, 8, 10, 0.4);
        CHECK(has_x_path(inst.graph, inst.x) == !oracle::enumerate_x_paths(inst.graph, inst.x).empty());
    }
}

TEST_CASE("tightness family K^{2k-1} with (-,-)-edges") {
    for (std::size_t k = 1; k <= 4; ++k) {
        const std::size_t n = 2 * k - 1;
        const auto g = test::complete_minus(n);
        const auto x = test::all_vertices(n);
        CAPTURE(k);
        CHECK(max_disjoint_x_paths(g, x).k == k - 1);
        if (k >= 2) CHECK(every_subset_leaves_path(g, x, 2 * k - 3));
        const auto result = hitting_set(g, x, k);
        REQUIRE(std::holds_alternative<HittingSet>(result));
        CHECK(std::get<HittingSet>(result).y.size() == 2 * k - 2);
    }
}

TEST_CASE("monotonicity") {
    std::mt19937_64 rng(4);
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
        auto inst = test::random_instance(seed, 7, 12, 0.5);
        auto& g = inst.graph;
        if (g.num_vertices() < 2) continue;
        const std::size_t before = max_disjoint_x_paths(g, inst.x).k;
        const VertexId u = test::pick(rng, g.num_vertices());
        VertexId v = test::pick(rng, g.num_vertices() - 1);
        if (v >= u) ++v;
        g.add_edge(u, test::pick(rng, 2) ? Sign::Plus : Sign::Minus, v,
                   test::pick(rng, 2) ? Sign::Plus : Sign::Minus);
        CHECK(max_disjoint_x_paths(g, inst.x).k >= before);

        VertexSet y = test::random_subset(rng, g.num_vertices(), 30);
        const bool had = has_x_path(delete_vertices(g, y), inst.x);
        y = normalized(set_union(y, {test::pick(rng, g.num_vertices())}));
        if (!had) CHECK_FALSE(has_x_path(delete_vertices(g, y), inst.x));
    }
}

TEST_CASE("reductions from digraphs and undirected graphs") {
    std::mt19937_64 rng(31);
    for (int round = 0; round < 150; ++round) {
        const std::size_t n = 1 + test::pick(rng, 6);
        const Digraph d = test::random_digraph(rng, n, test::pick(rng, 2 * n + 1));
        const VertexSet x = test::random_subset(rng, n, 50);
        const Solution sol = solve(from_digraph(d), x);
        CHECK(sol.packing.k == oracle::brute_directed_packing(d, x));
        CHECK(oracle::directed_dual_value(d, x, sol.certificate.s, sol.certificate.t) ==
              sol.certificate.value);

        const Multigraph u = test::random_multigraph(rng, n, test::pick(rng, 2 * n + 1));
        const std::size_t k = max_disjoint_x_paths(from_undirected(u), x).k;
        CHECK(k == oracle::brute_gallai_bound(u, x));
        CHECK(k == oracle::brute_undirected_packing(u, x));
    }
}

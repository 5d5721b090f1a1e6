#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "vcapprox/error.hpp"
#include "vcapprox/nt_kernel.hpp"

using namespace vcapprox;
using namespace vcapprox::testing;

namespace {

std::vector<Vertex> ids(const VertexSet& s) { return {s.members().begin(), s.members().end()}; }

}  // namespace

TEST_SUITE("nt-kernel") {
    TEST_CASE("partition examples") {
        const auto edge = unit_graph(2, {{0, 1}});
        auto p = partition(edge, half_integral_solution(edge));
        CHECK(p.v0.empty());
        CHECK(ids(p.vhalf) == std::vector<Vertex>{0, 1});
        CHECK(p.v1.empty());

        const auto star = star3();
        p = partition(star, half_integral_solution(star));
        CHECK(ids(p.v0) == std::vector<Vertex>{1, 2, 3});
        CHECK(p.vhalf.empty());
        CHECK(ids(p.v1) == std::vector<Vertex>{0});

        const auto e = edgeless(3);
        p = partition(e, half_integral_solution(e));
        CHECK(p.v0.size() == 3);
    }

    TEST_CASE("partition rejects a non-crown solution") {
        const auto p3 = path3();
        const HalfIntegralSolution bad{{0, 1, 2}, 5};
        try {
            partition(p3, bad);
            FAIL("expected CrownViolation");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::CrownViolation);
        }
    }

    TEST_CASE("kernelize examples") {
        const auto star = star3();
        auto k = kernelize(star);
        CHECK(k.kernel_graph.size() == 0);
        CHECK(ids(k.forced) == std::vector<Vertex>{0});
        CHECK(ids(k.free) == std::vector<Vertex>{1, 2, 3});

        const auto c5 = cycle5();
        const auto c5_opt = brute_half_integral(c5);
        CHECK(c5_opt.twice_value == 5);
        CHECK(c5_opt.argmin_count == 1);  // all halves, uniquely
        k = kernelize(c5);
        CHECK(k.kernel_graph == c5);
        CHECK(k.forced.empty());
        CHECK(k.free.empty());

        const auto heavy = make_graph(2, {3, 1}, {{0, 1}});
        k = kernelize(heavy);
        CHECK(k.kernel_graph.size() == 0);
        CHECK(ids(k.forced) == std::vector<Vertex>{1});
        CHECK(ids(k.free) == std::vector<Vertex>{0});
    }

    TEST_CASE("lift examples") {
        const auto star = star3();
        const auto ks = kernelize(star);
        const auto cs = lift(star, ks, VertexSet{});
        CHECK(ids(cs) == std::vector<Vertex>{0});
        CHECK(cs.weight() == brute_vc(star));

        const auto c5 = cycle5();
        const auto k5 = kernelize(c5);
        const auto c = lift(c5, k5, VertexSet::of(k5.kernel_graph, {0, 2, 3}));
        CHECK(ids(c) == std::vector<Vertex>{0, 2, 3});
        CHECK(c.weight() == 3);
        CHECK(brute_vc(c5) == 3);

        try {
            lift(c5, k5, VertexSet::of(k5.kernel_graph, {0, 2}));
            FAIL("expected NotACover");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::NotACover);
        }
    }

    TEST_CASE("kernel_density_check examples") {
        CHECK(kernel_density_check(kernelize(cycle5())));
        CHECK(kernel_density_check(kernelize(star3())));
        const auto tri = kernelize(triangle());
        CHECK(tri.kernel_graph.size() == 3);
        CHECK(kernel_density_check(tri));
        CHECK(brute_half_integral(triangle()).twice_value == 3);
    }

    TEST_CASE("NT properties on random graphs") {
        std::mt19937_64 rng(77);
        for (int trial = 0; trial < 200; ++trial) {
            const std::size_t n = 1 + rng() % 12;
            const auto g = random_graph(rng, n, 0.1 + 0.05 * static_cast<double>(rng() % 8), 1, 4);
            const auto k = kernelize(g);

            // crown: free is independent and touches only forced
            const auto free_mask = k.free.mask(n);
            const auto forced_mask = k.forced.mask(n);
            for (auto [u, v] : g.edges()) {
                if (free_mask[u]) REQUIRE(forced_mask[v]);
                if (free_mask[v]) REQUIRE(forced_mask[u]);
            }

            // preservation
            const Weight opt = brute_vc(g);
            REQUIRE(opt == k.forced.weight() + brute_vc(k.kernel_graph));

            // some minimum cover is sandwiched between forced and forced ∪ body
            std::uint64_t lo = 0, hi = 0;
            for (Vertex v : k.forced.members()) lo |= std::uint64_t{1} << v;
            hi = lo;
            for (Vertex v : k.back_map) hi |= std::uint64_t{1} << v;
            bool sandwiched = false;
            for (auto m : all_min_covers(g)) sandwiched |= (m & lo) == lo && (m & ~hi) == 0;
            REQUIRE(sandwiched);

            REQUIRE(kernel_density_check(k));

            // lift of any kernel cover is a cover of G with additive weight
            const auto& kg = k.kernel_graph;
            for (int r = 0; r < 5; ++r) {
                std::vector<bool> pick(kg.size());
                for (std::size_t v = 0; v < kg.size(); ++v) pick[v] = rng() % 3 != 0;
                for (auto [u, v] : kg.edges()) {
                    if (!pick[u] && !pick[v]) pick[u] = true;
                }
                const auto kc = VertexSet::from_mask(kg, pick);
                const auto c = lift(g, k, kc);
                REQUIRE(is_vertex_cover(g, c));
                REQUIRE(c.weight() == kc.weight() + k.forced.weight());
            }
        }
    }
}

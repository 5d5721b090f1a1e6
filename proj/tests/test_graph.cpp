#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "vcapprox/error.hpp"
#include "vcapprox/graph.hpp"

using namespace vcapprox;
using namespace vcapprox::testing;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::MalformedLine;
}

}  // namespace

TEST_SUITE("graph") {
    TEST_CASE("build_graph normalizes and validates") {
        const auto g = make_graph(2, {1, 1}, {{0, 1}});
        CHECK(g.edge_count() == 1);
        CHECK(g.total_weight() == 2);

        const auto dedup = make_graph(3, {1, 1, 1}, {{0, 1}, {1, 0}});
        CHECK(dedup.edge_count() == 1);
        CHECK(dedup.edges()[0] == Edge{0, 1});

        CHECK(code_of([] { make_graph(1, {5}, {{0, 0}}); }) == ErrorCode::InvalidEdge);
        CHECK(code_of([] { make_graph(2, {1, 1}, {{0, 2}}); }) == ErrorCode::InvalidEdge);
        CHECK(code_of([] { make_graph(2, {1, 0}, {}); }) == ErrorCode::InvalidWeight);
        CHECK(code_of([] { make_graph(2, {1, -3}, {}); }) == ErrorCode::InvalidWeight);
        CHECK(code_of([] { make_graph(2, {1}, {}); }) == ErrorCode::InvalidWeight);
    }

    TEST_CASE("induced_subgraph") {
        const auto p = path3();
        auto sub = induced_subgraph(p, VertexSet::of(p, {0, 2}));
        CHECK(sub.graph.size() == 2);
        CHECK(sub.graph.edge_count() == 0);
        CHECK(sub.back_map == std::vector<Vertex>{0, 2});

        const auto c5 = cycle5();
        auto all = induced_subgraph(c5, VertexSet::of(c5, {0, 1, 2, 3, 4}));
        CHECK(all.graph == c5);
        CHECK(all.back_map == std::vector<Vertex>{0, 1, 2, 3, 4});

        const auto t = triangle();
        auto pair = induced_subgraph(t, VertexSet::of(t, {0, 1}));
        CHECK(pair.graph.edge_count() == 1);

        CHECK(code_of([&] { VertexSet::of(t, {0, 7}); }) == ErrorCode::InvalidSet);
    }

    TEST_CASE("cover and independence predicates") {
        const auto e = unit_graph(2, {{0, 1}});
        CHECK(is_vertex_cover(e, VertexSet::of(e, {0})));
        CHECK_FALSE(is_vertex_cover(e, VertexSet{}));
        CHECK_FALSE(is_independent_set(e, VertexSet::of(e, {0, 1})));
        CHECK(is_independent_set(edgeless(4), VertexSet::of(edgeless(4), {0, 1, 2, 3})));

        const auto c5 = cycle5();
        CHECK(is_vertex_cover(c5, VertexSet::of(c5, {0, 2, 4})));
        CHECK(is_independent_set(c5, VertexSet::of(c5, {1, 3})));
        CHECK_FALSE(is_vertex_cover(c5, VertexSet::of(c5, {0, 2})));
    }

    TEST_CASE("complementation and weight identity over all subsets") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 40; ++trial) {
            const std::size_t n = 1 + rng() % 12;
            const auto g = random_graph(rng, n, 0.35, 1, 9);
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
                std::vector<bool> mask(n);
                for (std::size_t v = 0; v < n; ++v) mask[v] = (m >> v) & 1;
                const auto s = VertexSet::from_mask(g, mask);
                const auto rest = s.complement(g);
                REQUIRE(is_vertex_cover(g, s) == is_independent_set(g, rest));
                REQUIRE(s.weight() + rest.weight() == g.total_weight());
            }
        }
    }

    TEST_CASE("induced_subgraph preserves weights through back_map") {
        std::mt19937_64 rng(5);
        for (int trial = 0; trial < 50; ++trial) {
            const std::size_t n = 1 + rng() % 15;
            const auto g = random_graph(rng, n, 0.4, 1, 20);
            std::vector<Vertex> pick;
            for (Vertex v = 0; v < n; ++v) {
                if (rng() % 2) pick.push_back(v);
            }
            const auto s = VertexSet::of(g, pick);
            const auto sub = induced_subgraph(g, s);
            REQUIRE(sub.graph.size() == s.size());
            REQUIRE(sub.graph.total_weight() == s.weight());
            for (Vertex a = 0; a < sub.graph.size(); ++a) {
                REQUIRE(sub.graph.weight(a) == g.weight(sub.back_map[a]));
                for (Vertex b = 0; b < sub.graph.size(); ++b) {
                    if (a != b) REQUIRE(sub.graph.adjacent(a, b) == g.adjacent(sub.back_map[a], sub.back_map[b]));
                }
            }
        }
    }
}

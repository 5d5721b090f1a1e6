#include <random>

#include "doctest.h"
#include "support/oracles.hpp"
#include "vcapprox/error.hpp"
#include "vcapprox/vc_approx.hpp"

using namespace vcapprox;
using namespace vcapprox::testing;

namespace {

std::vector<Vertex> ids(const VertexSet& s) { return {s.members().begin(), s.members().end()}; }

LocalSearchOracle local_search(std::size_t t) {
    LocalSearchOptions o;
    o.swap_size = t;
    return LocalSearchOracle(o, 0.5);
}

}  // namespace

TEST_SUITE("vc-approx") {
    TEST_CASE("approx_vc examples") {
        const ExactOracle exact;
        const auto star = approx_vc(star3(), exact, 0.0);
        CHECK(ids(star.cover) == std::vector<Vertex>{0});
        CHECK(star.cover_weight() == 1);
        CHECK(brute_vc(star3()) == 1);
        CHECK(star.lp_lower_bound == Rational(1));
        CHECK(star.kernel_stats.v0.size == 3);
        CHECK(star.kernel_stats.v1.size == 1);

        const auto c5 = approx_vc(cycle5(), exact, 0.0);
        CHECK(c5.cover_weight() == 3);
        CHECK(c5.lp_lower_bound == Rational(5, 2));
        CHECK(c5.certified_ratio_bound() == Rational(6, 5));

        const auto heavy = make_graph(2, {3, 1}, {{0, 1}});
        const GreedyOracle greedy;
        for (const ISOracle* o : {static_cast<const ISOracle*>(&exact), static_cast<const ISOracle*>(&greedy)}) {
            const auto r = approx_vc(heavy, *o, 0.3);
            CHECK(ids(r.cover) == std::vector<Vertex>{1});
            CHECK(r.cover_weight() == 1);
        }

        const auto empty = approx_vc(edgeless(4), greedy, 0.5);
        CHECK(empty.cover.empty());
        CHECK_FALSE(empty.certified_ratio_bound().has_value());
    }

    TEST_CASE("approx_vc validates eps") {
        const GreedyOracle greedy;
        const ExactOracle exact;
        for (double bad : {-0.1, 1.0, 2.0}) CHECK_THROWS_AS(approx_vc(cycle5(), exact, bad), Error);
        try {
            approx_vc(cycle5(), greedy, 0.0);
            FAIL("expected InvalidEpsilon");
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::InvalidEpsilon);
        }
    }

    TEST_CASE("exact_vc and matching baseline examples") {
        CHECK(exact_vc(unit_graph(2, {{0, 1}})).weight() == 1);
        CHECK(exact_vc(triangle()).weight() == 2);
        CHECK(brute_vc(triangle()) == 2);
        CHECK(ids(exact_vc(star3())) == std::vector<Vertex>{0});

        CHECK(ids(matching_2approx_vc(unit_graph(2, {{0, 1}}))) == std::vector<Vertex>{0, 1});
        CHECK(matching_2approx_vc(edgeless(3)).empty());
        const auto p = matching_2approx_vc(path3());
        CHECK(ids(p) == std::vector<Vertex>{0, 1});
        CHECK(brute_vc(path3()) == 1);
    }

    TEST_CASE("verify_result") {
        const ExactOracle exact;
        const auto g = cycle5();
        auto r = approx_vc(g, exact, 0.0);
        auto report = verify_result(g, r);
        CHECK(report.passed());
        REQUIRE(report.exact_ratio.has_value());
        CHECK(*report.exact_ratio == Rational(1));
        CHECK(report.optimum == 3);

        std::vector<Vertex> fewer(r.cover.members().begin() + 1, r.cover.members().end());
        r.cover = VertexSet::of(g, fewer);
        report = verify_result(g, r);
        CHECK_FALSE(report.passed());
        bool cover_failed = false;
        for (const auto& c : report.checks) cover_failed |= c.name == "cover-valid" && !c.passed;
        CHECK(cover_failed);

        const auto good = approx_vc(g, exact, 0.0);
        CHECK_FALSE(verify_result(g, good, good.cover_weight() + 1).passed());
    }

    TEST_CASE("pipeline properties on random graphs") {
        std::mt19937_64 rng(4242);
        const ExactOracle exact;
        const GreedyOracle greedy;
        const auto ls1 = local_search(1);
        const auto ls2 = local_search(2);
        for (int trial = 0; trial < 150; ++trial) {
            const std::size_t n = 1 + rng() % 14;
            const bool unit = trial % 3 == 0;
            const auto g = random_graph(rng, n, 0.1 + 0.05 * static_cast<double>(rng() % 8), 1, unit ? 1 : 4);
            const Weight opt = brute_vc(g);

            const auto r = approx_vc(g, exact, 0.0);
            REQUIRE(r.cover_weight() == opt);
            REQUIRE(is_vertex_cover(g, r.cover));
            REQUIRE(r.lp_lower_bound <= Rational(opt));
            if (auto ratio = r.certified_ratio_bound()) REQUIRE(*ratio >= Rational(1));

            const auto k = kernelize(g);
            const Weight is_star = brute_is(k.kernel_graph);
            for (const ISOracle* o : {static_cast<const ISOracle*>(&greedy), static_cast<const ISOracle*>(&ls1),
                                      static_cast<const ISOracle*>(&ls2)}) {
                const auto h = approx_vc(g, *o, 0.5);
                REQUIRE(is_vertex_cover(g, h.cover));
                REQUIRE(r.lp_lower_bound <= Rational(opt));
                REQUIRE(Rational(opt) <= Rational(h.cover_weight()));
                if (is_star == 0) {
                    REQUIRE(h.cover_weight() == opt);
                    continue;
                }
                const Weight found = k.kernel_graph.size() == 0 ? 0 : o->solve(k.kernel_graph).weight();
                const Rational eps_measured = Rational(1) - Rational(found, is_star);
                REQUIRE(Rational(h.cover_weight()) <= (Rational(1) + eps_measured) * Rational(opt));
            }

            if (unit) REQUIRE(matching_2approx_vc(g).weight() <= 2 * opt);
            REQUIRE(verify_result(g, r).passed());
        }
    }

    TEST_CASE("geometric pipeline matches the graph pipeline") {
        GenerateParams p;
        p.n = 40;
        p.region = 30;
        p.seed = 3;
        const GreedyOracle greedy;
        for (auto kind : {ShapeKind::Disks, ShapeKind::Rects}) {
            p.kind = kind;
            const auto shapes = generate_instance(p);
            const auto g = intersection_graph(shapes).graph;
            const auto a = approx_vc(shapes, greedy, 0.5);
            const auto b = approx_vc(g, greedy, 0.5);
            CHECK(a.cover == b.cover);
            CHECK(a.lp_lower_bound == b.lp_lower_bound);
        }
    }
}

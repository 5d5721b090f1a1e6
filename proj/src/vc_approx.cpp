#include "vcapprox/vc_approx.hpp"

#include <algorithm>

#include "vcapprox/error.hpp"

namespace vcapprox {

KernelStats summarize(const Kernel& kernel) {
    return {{kernel.free.size(), kernel.free.weight()},
            {kernel.kernel_graph.size(), kernel.kernel_graph.total_weight()},
            {kernel.forced.size(), kernel.forced.weight()}};
}

std::optional<Rational> ApproxResult::certified_ratio_bound() const {
    if (lp_lower_bound.num() == 0) return std::nullopt;
    return Rational(cover_weight()) / lp_lower_bound;
}

namespace {

void check_eps(const ISOracle& oracle, double eps) {
    if (!(eps >= 0.0) || !(eps < 1.0)) {
        throw Error(ErrorCode::InvalidEpsilon, "eps must lie in [0, 1), got " + std::to_string(eps));
    }
    if (eps == 0.0 && oracle.quality().kind != OracleKind::Exact) {
        throw Error(ErrorCode::InvalidEpsilon, "eps = 0 requires the exact oracle");
    }
}

ApproxResult finish(const WeightedGraph& g, const Kernel& kernel, const ISOracle& oracle, double eps,
                    const VertexSet& independent) {
    if (!is_independent_set(kernel.kernel_graph, independent)) {
        throw Error(ErrorCode::InvalidSet, "oracle '" + oracle.name() + "' returned a dependent set");
    }
    ApproxResult result;
    result.cover = lift(g, kernel, independent.complement(kernel.kernel_graph));
    result.lp_lower_bound = kernel.lp.objective();
    result.kernel_stats = summarize(kernel);
    result.oracle_name = oracle.name();
    result.eps_requested = eps;
    if (const auto* ls = dynamic_cast<const LocalSearchOracle*>(&oracle)) result.swap_size = ls->swap_size();
    return result;
}

}  // namespace

ApproxResult approx_vc(const WeightedGraph& g, const ISOracle& oracle, double eps) {
    check_eps(oracle, eps);
    const Kernel kernel = kernelize(g);
    const VertexSet independent = kernel.kernel_graph.size() == 0 ? VertexSet{} : oracle.solve(kernel.kernel_graph);
    return finish(g, kernel, oracle, eps, independent);
}

ApproxResult approx_vc(const ShapeSet& shapes, const ISOracle& oracle, double eps) {
    check_eps(oracle, eps);
    const auto full = intersection_graph(shapes);
    const Kernel kernel = kernelize(full.graph);
    VertexSet independent;
    if (kernel.kernel_graph.size() > 0) {
        const auto body = VertexSet::of(full.graph, kernel.back_map);
        const auto sub = intersection_graph(restrict_shapes(shapes, body, full.shape_map));
        if (!(sub.graph == kernel.kernel_graph)) {
            throw Error(ErrorCode::InvalidSet, "kernel shapes do not reproduce the kernel graph");
        }
        independent = oracle.solve(sub.graph);
    }
    return finish(full.graph, kernel, oracle, eps, independent);
}

VertexSet exact_vc(const WeightedGraph& g, std::size_t cap) {
    return exact_is(g, cap).complement(g);
}

VertexSet matching_2approx_vc(const WeightedGraph& g) {
    std::vector<bool> matched(g.size(), false);
    for (auto [u, v] : g.edges()) {
        if (!matched[u] && !matched[v]) matched[u] = matched[v] = true;
    }
    return VertexSet::from_mask(g, matched);
}

bool VerifyReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

VerifyReport verify_result(const WeightedGraph& g, const ApproxResult& result, std::size_t cap) {
    return verify_result(g, result, result.cover_weight(), cap);
}

VerifyReport verify_result(const WeightedGraph& g, const ApproxResult& result, Weight claimed_weight,
                           std::size_t cap) {
    VerifyReport report;
    const auto members = result.cover.members();
    const bool in_range = std::all_of(members.begin(), members.end(), [&](Vertex v) { return v < g.size(); });
    report.checks.push_back({"cover-ids-in-range", in_range, in_range ? "" : "cover names a vertex outside the graph"});
    if (!in_range) return report;

    const auto cover = VertexSet::of(g, {members.begin(), members.end()});
    const bool covers = is_vertex_cover(g, cover);
    std::string uncovered;
    if (!covers) {
        const auto in = cover.mask(g.size());
        for (auto [u, v] : g.edges()) {
            if (!in[u] && !in[v]) {
                uncovered = "edge (" + std::to_string(u + 1) + "," + std::to_string(v + 1) + ") uncovered";
                break;
            }
        }
    }
    report.checks.push_back({"cover-valid", covers, uncovered});

    const bool weight_ok = cover.weight() == claimed_weight;
    report.checks.push_back({"cover-weight", weight_ok,
                             weight_ok ? "" : "claimed " + std::to_string(claimed_weight) + ", actual " +
                                                  std::to_string(cover.weight())});

    const Rational lp = half_integral_solution(g).objective();
    const bool lp_ok = lp == result.lp_lower_bound;
    report.checks.push_back({"lp-bound", lp_ok,
                             lp_ok ? "" : "claimed " + result.lp_lower_bound.to_string() + ", recomputed " + lp.to_string()});

    const bool above_lp = Rational(cover.weight()) >= lp;
    report.checks.push_back({"cover-above-lp", above_lp, above_lp ? "" : "cover lighter than the LP bound"});

    if (g.size() <= cap) {
        const Weight optimum = exact_vc(g, cap).weight();
        report.optimum = optimum;
        if (optimum > 0) report.exact_ratio = Rational(cover.weight(), optimum);
        const bool sandwich = lp <= Rational(optimum) && optimum <= cover.weight();
        report.checks.push_back({"lp-opt-cover-sandwich", sandwich, sandwich ? "" : "lp <= opt <= cover violated"});
    }
    return report;
}

}  // namespace vcapprox

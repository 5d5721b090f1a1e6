#include "vcapprox/nt_kernel.hpp"

#include <string>

#include "vcapprox/error.hpp"

namespace vcapprox {

NTPartition partition(const WeightedGraph& g, const HalfIntegralSolution& sol) {
    if (sol.twice.size() != g.size()) {
        throw Error(ErrorCode::DimensionMismatch, "solution size differs from vertex count");
    }
    std::vector<Vertex> zero, half, one;
    for (Vertex v = 0; v < g.size(); ++v) {
        switch (sol.twice[v]) {
            case 0: zero.push_back(v); break;
            case 1: half.push_back(v); break;
            case 2: one.push_back(v); break;
            default: throw Error(ErrorCode::InvalidParameter, "entry is not in {0, 1/2, 1}");
        }
    }
    for (auto [u, v] : g.edges()) {
        if (sol.twice[u] + sol.twice[v] < 2 && (sol.twice[u] == 0 || sol.twice[v] == 0)) {
            throw Error(ErrorCode::CrownViolation,
                        "edge (" + std::to_string(u) + "," + std::to_string(v) + ") joins V0 to V0 or Vhalf");
        }
    }
    return {VertexSet::of(g, std::move(zero)), VertexSet::of(g, std::move(half)),
            VertexSet::of(g, std::move(one))};
}

Kernel kernelize(const WeightedGraph& g) {
    auto sol = half_integral_solution(g);
    auto parts = partition(g, sol);
    auto sub = induced_subgraph(g, parts.vhalf);
    for (Vertex v = 0; v < sub.graph.size(); ++v) {
        // an isolated vertex would have LP value 0, not 1/2
        if (sub.graph.degree(v) == 0) {
            throw Error(ErrorCode::CrownViolation,
                        "isolated kernel vertex " + std::to_string(sub.back_map[v]));
        }
    }
    return {std::move(sub.graph), std::move(parts.v1), std::move(parts.v0), std::move(sub.back_map),
            std::move(sol)};
}

VertexSet lift(const WeightedGraph& g, const Kernel& kernel, const VertexSet& kernel_cover) {
    if (!is_vertex_cover(kernel.kernel_graph, kernel_cover)) {
        throw Error(ErrorCode::NotACover, "set does not cover the kernel graph");
    }
    std::vector<Vertex> members(kernel.forced.members().begin(), kernel.forced.members().end());
    for (Vertex v : kernel_cover.members()) members.push_back(kernel.back_map[v]);
    return VertexSet::of(g, std::move(members));
}

bool kernel_density_check(const Kernel& kernel) {
    const auto sol = half_integral_solution(kernel.kernel_graph);
    return sol.twice_objective == kernel.kernel_graph.total_weight();
}

}  // namespace vcapprox

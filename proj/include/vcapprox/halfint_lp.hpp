#pragma once

#include <cstdint>
#include <vector>

#include "vcapprox/graph.hpp"
#include "vcapprox/rational.hpp"

namespace vcapprox {

struct Arc {
    std::uint32_t from;
    std::uint32_t to;
    Weight capacity;

    friend bool operator==(const Arc&, const Arc&) = default;
};

/// s-t network over the bipartite double of a graph.
///
/// Node numbering: s = 0, t = 1, left copy u1 = 2 + u, right copy u2 = 2 + n + u.
/// Arcs: s->u1 and u2->t with capacity w(u); u1->v2 and v1->u2 per edge uv with
/// capacity `infinite()` = w(G) + 1, which exceeds any feasible s-t flow.
class FlowNetwork {
public:
    std::size_t vertex_count() const noexcept { return n_; }
    std::size_t node_count() const noexcept { return 2 * n_ + 2; }
    std::uint32_t source() const noexcept { return 0; }
    std::uint32_t sink() const noexcept { return 1; }
    std::uint32_t left(Vertex u) const noexcept { return 2 + u; }
    std::uint32_t right(Vertex u) const noexcept { return static_cast<std::uint32_t>(2 + n_ + u); }
    Weight infinite() const noexcept { return infinite_; }
    const std::vector<Arc>& arcs() const noexcept { return arcs_; }
    const std::vector<Weight>& weights() const noexcept { return weights_; }

    friend FlowNetwork build_bipartite_double(const WeightedGraph& g);

private:
    std::size_t n_ = 0;
    Weight infinite_ = 1;
    std::vector<Weight> weights_;
    std::vector<Arc> arcs_;
};

FlowNetwork build_bipartite_double(const WeightedGraph& g);

struct MaxFlowResult {
    Weight value = 0;
    /// Nodes reachable from s in the final residual network (s-side of the
    /// canonical, s-closest minimum cut).
    std::vector<bool> residual_reachable;
};

/// Dinic blocking-flow max-flow.
MaxFlowResult max_flow(const FlowNetwork& network);

/// Vertex cover of the doubled bipartite graph read off the canonical cut.
struct BipartiteCover {
    std::vector<bool> left;   // u1 in cover
    std::vector<bool> right;  // u2 in cover
    Weight weight = 0;
};

/// cover = {u1 : u1 unreachable} ∪ {u2 : u2 reachable}.
/// Throws InconsistentCut if an infinite arc leaves the s-side.
BipartiteCover min_cut_cover(const FlowNetwork& network, const std::vector<bool>& residual_reachable);

/// Optimal LP solution with every entry in {0, 1/2, 1}. Values are stored
/// doubled (0, 1, 2) so all arithmetic stays integral.
struct HalfIntegralSolution {
    std::vector<std::uint8_t> twice;
    Weight twice_objective = 0;

    Rational objective() const { return Rational(twice_objective, 2); }
    friend bool operator==(const HalfIntegralSolution&, const HalfIntegralSolution&) = default;
};

HalfIntegralSolution half_integral_solution(const WeightedGraph& g);

/// sum_v w(v) x_v, exact. Throws DimensionMismatch on size mismatch and
/// InvalidParameter on entries outside {0, 1, 2}.
Rational lp_value(const HalfIntegralSolution& sol, const WeightedGraph& g);

/// x_u + x_v >= 1 on every edge.
bool is_lp_feasible(const HalfIntegralSolution& sol, const WeightedGraph& g);

}  // namespace vcapprox

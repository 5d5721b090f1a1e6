#include "vcapprox/halfint_lp.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "vcapprox/error.hpp"

namespace vcapprox {

FlowNetwork build_bipartite_double(const WeightedGraph& g) {
    FlowNetwork net;
    net.n_ = g.size();
    net.infinite_ = g.total_weight() + 1;
    net.weights_.assign(g.weights().begin(), g.weights().end());
    net.arcs_.reserve(2 * g.size() + 2 * g.edge_count());
    for (Vertex u = 0; u < g.size(); ++u) {
        net.arcs_.push_back({net.source(), net.left(u), g.weight(u)});
    }
    for (auto [u, v] : g.edges()) {
        net.arcs_.push_back({net.left(u), net.right(v), net.infinite_});
        net.arcs_.push_back({net.left(v), net.right(u), net.infinite_});
    }
    for (Vertex u = 0; u < g.size(); ++u) {
        net.arcs_.push_back({net.right(u), net.sink(), g.weight(u)});
    }
    return net;
}

namespace {

class Dinic {
public:
    explicit Dinic(const FlowNetwork& network) : head_(network.node_count()) {
        for (const Arc& a : network.arcs()) {
            add(a.from, a.to, a.capacity);
        }
        level_.resize(head_.size());
        next_.resize(head_.size());
    }

    Weight run(std::uint32_t s, std::uint32_t t) {
        Weight flow = 0;
        while (bfs(s, t)) {
            for (std::size_t i = 0; i < head_.size(); ++i) next_[i] = 0;
            while (Weight pushed = dfs(s, t, std::numeric_limits<Weight>::max())) flow += pushed;
        }
        return flow;
    }

    std::vector<bool> reachable(std::uint32_t s) const {
        std::vector<bool> seen(head_.size(), false);
        std::vector<std::uint32_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            const auto u = stack.back();
            stack.pop_back();
            for (std::size_t e : head_[u]) {
                const auto& edge = edges_[e];
                if (edge.residual > 0 && !seen[edge.to]) {
                    seen[edge.to] = true;
                    stack.push_back(edge.to);
                }
            }
        }
        return seen;
    }

private:
    struct ResidualEdge {
        std::uint32_t to;
        Weight residual;
    };

    void add(std::uint32_t from, std::uint32_t to, Weight cap) {
        head_[from].push_back(edges_.size());
        edges_.push_back({to, cap});
        head_[to].push_back(edges_.size());
        edges_.push_back({from, 0});
    }

    bool bfs(std::uint32_t s, std::uint32_t t) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<std::uint32_t> queue;
        level_[s] = 0;
        queue.push(s);
        while (!queue.empty()) {
            const auto u = queue.front();
            queue.pop();
            for (std::size_t e : head_[u]) {
                const auto& edge = edges_[e];
                if (edge.residual > 0 && level_[edge.to] < 0) {
                    level_[edge.to] = level_[u] + 1;
                    queue.push(edge.to);
                }
            }
        }
        return level_[t] >= 0;
    }

    Weight dfs(std::uint32_t u, std::uint32_t t, Weight limit) {
        if (u == t) return limit;
        for (auto& i = next_[u]; i < head_[u].size(); ++i) {
            const std::size_t e = head_[u][i];
            auto& edge = edges_[e];
            if (edge.residual <= 0 || level_[edge.to] != level_[u] + 1) continue;
            const Weight pushed = dfs(edge.to, t, std::min(limit, edge.residual));
            if (pushed > 0) {
                edge.residual -= pushed;
                edges_[e ^ 1].residual += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<std::vector<std::size_t>> head_;
    std::vector<ResidualEdge> edges_;
    std::vector<int> level_;
    std::vector<std::size_t> next_;
};

}  // namespace

MaxFlowResult max_flow(const FlowNetwork& network) {
    Dinic dinic(network);
    MaxFlowResult result;
    result.value = dinic.run(network.source(), network.sink());
    result.residual_reachable = dinic.reachable(network.source());
    return result;
}

BipartiteCover min_cut_cover(const FlowNetwork& network, const std::vector<bool>& residual_reachable) {
    if (residual_reachable.size() != network.node_count()) {
        throw Error(ErrorCode::DimensionMismatch, "reachability vector does not match network");
    }
    if (!residual_reachable[network.source()] || residual_reachable[network.sink()]) {
        throw Error(ErrorCode::InconsistentCut, "source/sink on the wrong side of the cut");
    }
    for (const Arc& a : network.arcs()) {
        if (a.capacity == network.infinite() && residual_reachable[a.from] && !residual_reachable[a.to]) {
            throw Error(ErrorCode::InconsistentCut, "infinite arc " + std::to_string(a.from) + "->" +
                                                        std::to_string(a.to) + " crosses the cut");
        }
    }
    const std::size_t n = network.vertex_count();
    BipartiteCover cover;
    cover.left.assign(n, false);
    cover.right.assign(n, false);
    for (Vertex u = 0; u < n; ++u) {
        cover.left[u] = !residual_reachable[network.left(u)];
        cover.right[u] = residual_reachable[network.right(u)];
        if (cover.left[u]) cover.weight += network.weights()[u];
        if (cover.right[u]) cover.weight += network.weights()[u];
    }
    return cover;
}

HalfIntegralSolution half_integral_solution(const WeightedGraph& g) {
    const auto network = build_bipartite_double(g);
    const auto flow = max_flow(network);
    const auto cover = min_cut_cover(network, flow.residual_reachable);
    HalfIntegralSolution sol;
    sol.twice.resize(g.size());
    for (Vertex v = 0; v < g.size(); ++v) {
        sol.twice[v] = static_cast<std::uint8_t>(cover.left[v]) + static_cast<std::uint8_t>(cover.right[v]);
        sol.twice_objective += g.weight(v) * sol.twice[v];
    }
    return sol;
}

Rational lp_value(const HalfIntegralSolution& sol, const WeightedGraph& g) {
    if (sol.twice.size() != g.size()) {
        throw Error(ErrorCode::DimensionMismatch, "solution has " + std::to_string(sol.twice.size()) +
                                                      " entries, graph has " + std::to_string(g.size()));
    }
    Weight twice = 0;
    for (Vertex v = 0; v < g.size(); ++v) {
        if (sol.twice[v] > 2) throw Error(ErrorCode::InvalidParameter, "entry is not in {0, 1/2, 1}");
        twice += g.weight(v) * sol.twice[v];
    }
    return Rational(twice, 2);
}

bool is_lp_feasible(const HalfIntegralSolution& sol, const WeightedGraph& g) {
    if (sol.twice.size() != g.size()) return false;
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return sol.twice[e.first] + sol.twice[e.second] >= 2; });
}

}  // namespace vcapprox

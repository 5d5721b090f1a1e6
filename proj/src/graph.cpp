#include "vcapprox/graph.hpp"

#include <algorithm>
#include <string>

#include "vcapprox/error.hpp"

namespace vcapprox {

VertexSet VertexSet::of(const WeightedGraph& g, std::vector<Vertex> members) {
    std::sort(members.begin(), members.end());
    members.erase(std::unique(members.begin(), members.end()), members.end());
    VertexSet s;
    for (Vertex v : members) {
        if (v >= g.size()) {
            throw Error(ErrorCode::InvalidSet, "vertex " + std::to_string(v) + " out of range (n=" +
                                                   std::to_string(g.size()) + ")");
        }
        s.weight_ += g.weight(v);
    }
    s.members_ = std::move(members);
    return s;
}

VertexSet VertexSet::from_mask(const WeightedGraph& g, const std::vector<bool>& mask) {
    if (mask.size() != g.size()) {
        throw Error(ErrorCode::DimensionMismatch, "mask size differs from vertex count");
    }
    VertexSet s;
    for (Vertex v = 0; v < mask.size(); ++v) {
        if (mask[v]) {
            s.members_.push_back(v);
            s.weight_ += g.weight(v);
        }
    }
    return s;
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members_.begin(), members_.end(), v);
}

std::vector<bool> VertexSet::mask(std::size_t n) const {
    std::vector<bool> m(n, false);
    for (Vertex v : members_) {
        if (v >= n) throw Error(ErrorCode::InvalidSet, "vertex " + std::to_string(v) + " out of range");
        m[v] = true;
    }
    return m;
}

VertexSet VertexSet::complement(const WeightedGraph& g) const {
    auto m = mask(g.size());
    m.flip();
    return from_mask(g, m);
}

bool WeightedGraph::adjacent(Vertex u, Vertex v) const {
    const auto& a = adjacency_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

bool WeightedGraph::unit_weights() const {
    return std::all_of(weights_.begin(), weights_.end(), [](Weight w) { return w == 1; });
}

WeightedGraph build_graph(std::size_t n, std::vector<Weight> weights, std::span<const Edge> edges) {
    if (weights.size() != n) {
        throw Error(ErrorCode::InvalidWeight, "expected " + std::to_string(n) + " weights, got " +
                                                  std::to_string(weights.size()));
    }
    WeightedGraph g;
    for (std::size_t v = 0; v < n; ++v) {
        if (weights[v] < 1) {
            throw Error(ErrorCode::InvalidWeight,
                        "vertex " + std::to_string(v) + " has weight " + std::to_string(weights[v]));
        }
        g.total_weight_ += weights[v];
    }
    g.weights_ = std::move(weights);

    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw Error(ErrorCode::InvalidEdge, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                                    ") has endpoint >= n=" + std::to_string(n));
        }
        if (u == v) throw Error(ErrorCode::InvalidEdge, "self-loop at vertex " + std::to_string(u));
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

    g.adjacency_.assign(n, {});
    for (auto [u, v] : g.edges_) {
        g.adjacency_[u].push_back(v);
        g.adjacency_[v].push_back(u);
    }
    for (auto& a : g.adjacency_) std::sort(a.begin(), a.end());
    return g;
}

InducedSubgraph induced_subgraph(const WeightedGraph& g, const VertexSet& s) {
    constexpr Vertex absent = static_cast<Vertex>(-1);
    std::vector<Vertex> index(g.size(), absent);
    InducedSubgraph out;
    std::vector<Weight> weights;
    for (Vertex v : s.members()) {
        if (v >= g.size()) throw Error(ErrorCode::InvalidSet, "vertex " + std::to_string(v) + " out of range");
        index[v] = static_cast<Vertex>(out.back_map.size());
        out.back_map.push_back(v);
        weights.push_back(g.weight(v));
    }
    std::vector<Edge> edges;
    for (auto [u, v] : g.edges()) {
        if (index[u] != absent && index[v] != absent) edges.emplace_back(index[u], index[v]);
    }
    out.graph = build_graph(out.back_map.size(), std::move(weights), edges);
    return out;
}

bool is_vertex_cover(const WeightedGraph& g, const VertexSet& c) {
    const auto in = c.mask(g.size());
    return std::all_of(g.edges().begin(), g.edges().end(),
                       [&](const Edge& e) { return in[e.first] || in[e.second]; });
}

bool is_independent_set(const WeightedGraph& g, const VertexSet& s) {
    const auto in = s.mask(g.size());
    return std::none_of(g.edges().begin(), g.edges().end(),
                        [&](const Edge& e) { return in[e.first] && in[e.second]; });
}

}  // namespace vcapprox

#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace vcapprox {

using Vertex = std::uint32_t;
using Weight = std::int64_t;
using Edge = std::pair<Vertex, Vertex>;

class WeightedGraph;

/// Sorted, duplicate-free vertex ids together with their total weight.
class VertexSet {
public:
    VertexSet() = default;

    /// Validates `members` against `g` (range), sorts and deduplicates them.
    static VertexSet of(const WeightedGraph& g, std::vector<Vertex> members);
    /// Builds from a membership mask of size g.size().
    static VertexSet from_mask(const WeightedGraph& g, const std::vector<bool>& mask);

    std::span<const Vertex> members() const noexcept { return members_; }
    Weight weight() const noexcept { return weight_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(Vertex v) const;

    std::vector<bool> mask(std::size_t n) const;
    /// V \ this.
    VertexSet complement(const WeightedGraph& g) const;

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> members_;
    Weight weight_ = 0;
};

/// Simple undirected graph with positive integer vertex weights.
/// Immutable after construction.
class WeightedGraph {
public:
    WeightedGraph() = default;

    std::size_t size() const noexcept { return weights_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    Weight weight(Vertex v) const { return weights_[v]; }
    std::span<const Weight> weights() const noexcept { return weights_; }
    /// Edges with u < v, sorted lexicographically.
    std::span<const Edge> edges() const noexcept { return edges_; }
    /// Sorted neighbor list.
    std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
    std::size_t degree(Vertex v) const { return adjacency_[v].size(); }
    bool adjacent(Vertex u, Vertex v) const;
    Weight total_weight() const noexcept { return total_weight_; }
    bool unit_weights() const;

    friend bool operator==(const WeightedGraph& a, const WeightedGraph& b) {
        return a.weights_ == b.weights_ && a.edges_ == b.edges_;
    }

    friend WeightedGraph build_graph(std::size_t n, std::vector<Weight> weights,
                                     std::span<const Edge> edges);

private:
    std::vector<Weight> weights_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adjacency_;
    Weight total_weight_ = 0;
};

/// Validates and normalizes: endpoints ordered, parallel edges dropped.
/// Throws InvalidWeight / InvalidEdge.
WeightedGraph build_graph(std::size_t n, std::vector<Weight> weights, std::span<const Edge> edges);

struct InducedSubgraph {
    WeightedGraph graph;
    std::vector<Vertex> back_map;  // sub id -> original id
};

InducedSubgraph induced_subgraph(const WeightedGraph& g, const VertexSet& s);

bool is_vertex_cover(const WeightedGraph& g, const VertexSet& c);
bool is_independent_set(const WeightedGraph& g, const VertexSet& s);

}  // namespace vcapprox

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <string_view>

#include "vcapprox/graph.hpp"

namespace vcapprox {

inline constexpr std::size_t kDefaultExactCap = 30;

/// Branch and bound maximum-weight independent set. Throws TooLarge when
/// g.size() > cap (cap itself is clamped to 64).
VertexSet exact_is(const WeightedGraph& g, std::size_t cap = kDefaultExactCap);

/// Repeatedly takes the remaining vertex maximizing w(v) / (deg(v) + 1),
/// degrees taken in the remaining graph, then deletes its closed neighborhood.
/// Ties go to the smallest id when seed == 0, otherwise to the smallest rank in
/// a seeded permutation.
VertexSet greedy_is(const WeightedGraph& g, std::uint64_t seed = 0);

using WarningSink = std::function<void(std::string_view)>;

enum class SwapScan { Serial, Parallel };

struct LocalSearchOptions {
    std::size_t swap_size = 1;
    std::uint64_t seed = 0;
    SwapScan scan = SwapScan::Parallel;
    WarningSink warn;  // called once for non-unit weights
};

/// Cardinality t-swap local search started from greedy_is(g, seed).
/// Result admits no independent X outside it, |X| <= t, with
/// |(I \ N(X)) ∪ X| > |I|. Throws InvalidSwapSize for t < 1.
VertexSet local_search_is(const WeightedGraph& g, const LocalSearchOptions& options);

/// Lexicographically first improving swap of size <= t, or empty if `current`
/// is t-swap-optimal. Exposed for certificate checks.
std::vector<Vertex> find_improving_swap(const WeightedGraph& g, const VertexSet& current,
                                        std::size_t swap_size, SwapScan scan = SwapScan::Serial);

/// t = ceil(c / eps^2), for 0 < eps <= 1 and c > 0.
std::size_t epsilon_to_swap_size(double eps, double c = 1.0);

enum class OracleKind { Exact, Heuristic, ApproximationScheme };

struct OracleQuality {
    OracleKind kind = OracleKind::Heuristic;
    double eps = 0.0;         // ApproximationScheme only
    std::string graph_class;  // where the guarantee holds
};

/// Independent-set black box used by the vertex cover wrapper. It must accept
/// any induced subgraph of the instance; outputs are deterministic.
class ISOracle {
public:
    virtual ~ISOracle() = default;
    virtual VertexSet solve(const WeightedGraph& g) const = 0;
    virtual std::string name() const = 0;
    virtual OracleQuality quality() const = 0;
};

class ExactOracle final : public ISOracle {
public:
    explicit ExactOracle(std::size_t cap = kDefaultExactCap) : cap_(cap) {}
    VertexSet solve(const WeightedGraph& g) const override { return exact_is(g, cap_); }
    std::string name() const override { return "exact"; }
    OracleQuality quality() const override { return {OracleKind::Exact, 0.0, "all graphs"}; }

private:
    std::size_t cap_;
};

class GreedyOracle final : public ISOracle {
public:
    explicit GreedyOracle(std::uint64_t seed = 0) : seed_(seed) {}
    VertexSet solve(const WeightedGraph& g) const override { return greedy_is(g, seed_); }
    std::string name() const override { return "greedy"; }
    OracleQuality quality() const override { return {OracleKind::Heuristic, 0.0, ""}; }

private:
    std::uint64_t seed_;
};

class LocalSearchOracle final : public ISOracle {
public:
    LocalSearchOracle(LocalSearchOptions options, double eps)
        : options_(std::move(options)), eps_(eps) {}
    VertexSet solve(const WeightedGraph& g) const override { return local_search_is(g, options_); }
    std::string name() const override { return "local-search"; }
    OracleQuality quality() const override {
        return {OracleKind::ApproximationScheme, eps_, "unweighted pseudo-disk intersection graphs"};
    }
    std::size_t swap_size() const noexcept { return options_.swap_size; }

private:
    LocalSearchOptions options_;
    double eps_;
};

struct OracleConfig {
    std::size_t exact_cap = kDefaultExactCap;
    double eps = 0.0;
    double swap_constant = 1.0;
    std::size_t swap_size_override = 0;  // 0: derive from eps
    std::uint64_t seed = 0;
    WarningSink warn;
};

/// "exact" | "greedy" | "local-search". Throws InvalidParameter otherwise.
std::unique_ptr<ISOracle> make_oracle(std::string_view name, const OracleConfig& config);

}  // namespace vcapprox

#include "vcapprox/is_oracles.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "vcapprox/error.hpp"

namespace vcapprox {

// ---------------------------------------------------------------------------
// exact

namespace {

using Mask = std::uint64_t;

class BranchAndBound {
public:
    explicit BranchAndBound(const WeightedGraph& g) : g_(g), adj_(g.size(), 0) {
        for (auto [u, v] : g.edges()) {
            adj_[u] |= Mask{1} << v;
            adj_[v] |= Mask{1} << u;
        }
    }

    Mask run() {
        const Mask all = g_.size() == 64 ? ~Mask{0} : (Mask{1} << g_.size()) - 1;
        search(all, 0, 0);
        return best_set_;
    }

private:
    Weight mass(Mask m) const {
        Weight total = 0;
        for (; m; m &= m - 1) total += g_.weight(static_cast<Vertex>(std::countr_zero(m)));
        return total;
    }

    void search(Mask remaining, Mask chosen, Weight chosen_weight) {
        if (chosen_weight + mass(remaining) <= best_weight_ && best_weight_ > 0) return;

        int pivot = -1;
        int pivot_degree = 0;
        for (Mask m = remaining; m; m &= m - 1) {
            const int v = std::countr_zero(m);
            const int d = std::popcount(adj_[v] & remaining);
            if (d > pivot_degree) {
                pivot = v;
                pivot_degree = d;
            }
        }
        if (pivot < 0) {
            // remaining vertices are pairwise non-adjacent
            const Weight total = chosen_weight + mass(remaining);
            if (total > best_weight_ || best_set_ == 0) {
                best_weight_ = total;
                best_set_ = chosen | remaining;
            }
            return;
        }
        const Mask bit = Mask{1} << pivot;
        search(remaining & ~bit & ~adj_[pivot], chosen | bit,
               chosen_weight + g_.weight(static_cast<Vertex>(pivot)));
        search(remaining & ~bit, chosen, chosen_weight);
    }

    const WeightedGraph& g_;
    std::vector<Mask> adj_;
    Weight best_weight_ = 0;
    Mask best_set_ = 0;
};

}  // namespace

VertexSet exact_is(const WeightedGraph& g, std::size_t cap) {
    cap = std::min<std::size_t>(cap, 64);
    if (g.size() > cap) {
        throw Error(ErrorCode::TooLarge,
                    "exact oracle limited to " + std::to_string(cap) + " vertices, got " + std::to_string(g.size()));
    }
    if (g.size() == 0) return {};
    const Mask best = BranchAndBound(g).run();
    std::vector<Vertex> members;
    for (Mask m = best; m; m &= m - 1) members.push_back(static_cast<Vertex>(std::countr_zero(m)));
    return VertexSet::of(g, std::move(members));
}

// ---------------------------------------------------------------------------
// greedy

namespace {

// Fisher-Yates over raw mt19937_64 draws; std::shuffle is not portable across
// standard libraries.
std::vector<std::size_t> seeded_ranks(std::size_t n, std::uint64_t seed) {
    std::vector<std::size_t> rank(n);
    for (std::size_t i = 0; i < n; ++i) rank[i] = i;
    if (seed == 0) return rank;
    std::mt19937_64 rng(seed);
    for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = rng() % i;
        std::swap(rank[i - 1], rank[j]);
    }
    return rank;
}

}  // namespace

VertexSet greedy_is(const WeightedGraph& g, std::uint64_t seed) {
    const std::size_t n = g.size();
    const auto rank = seeded_ranks(n, seed);
    std::vector<bool> alive(n, true);
    std::vector<std::size_t> degree(n);
    for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);

    // a beats b iff w(a)/(d(a)+1) > w(b)/(d(b)+1), ties by rank
    const auto better = [&](Vertex a, Vertex b) {
        const auto lhs = static_cast<__int128>(g.weight(a)) * static_cast<__int128>(degree[b] + 1);
        const auto rhs = static_cast<__int128>(g.weight(b)) * static_cast<__int128>(degree[a] + 1);
        if (lhs != rhs) return lhs > rhs;
        return rank[a] < rank[b];
    };

    std::vector<Vertex> chosen;
    std::size_t alive_count = n;
    while (alive_count > 0) {
        Vertex pick = 0;
        bool found = false;
        for (Vertex v = 0; v < n; ++v) {
            if (alive[v] && (!found || better(v, pick))) {
                pick = v;
                found = true;
            }
        }
        chosen.push_back(pick);
        std::vector<Vertex> removed{pick};
        for (Vertex u : g.neighbors(pick)) {
            if (alive[u]) removed.push_back(u);
        }
        for (Vertex r : removed) {
            alive[r] = false;
            --alive_count;
        }
        for (Vertex r : removed) {
            for (Vertex u : g.neighbors(r)) {
                if (alive[u]) --degree[u];
            }
        }
    }
    return VertexSet::of(g, std::move(chosen));
}

// ---------------------------------------------------------------------------
// local search

namespace {

class SwapSearch {
public:
    SwapSearch(const WeightedGraph& g, std::vector<bool> in_set)
        : g_(g), in_(std::move(in_set)), blockers_(g.size(), 0) {
        for (Vertex v = 0; v < g.size(); ++v) {
            if (!in_[v]) continue;
            for (Vertex u : g.neighbors(v)) ++blockers_[u];
        }
    }

    const std::vector<bool>& members() const noexcept { return in_; }

    /// Lexicographically first improving swap of size exactly k.
    std::vector<Vertex> first_swap(std::size_t k, SwapScan scan) const {
        std::vector<Vertex> starts;
        for (Vertex v = 0; v < g_.size(); ++v) {
            if (usable(v, k)) starts.push_back(v);
        }
        if (starts.empty()) return {};
        if (k == 1) return {starts.front()};  // usable(v, 1) means no blockers

        if (scan == SwapScan::Serial) {
            for (Vertex x : starts) {
                auto swap = swap_from(x, k);
                if (!swap.empty()) return swap;
            }
            return {};
        }

        const auto count = static_cast<std::ptrdiff_t>(starts.size());
        std::atomic<std::ptrdiff_t> winner{count};
        std::vector<std::vector<Vertex>> found(starts.size());
#pragma omp parallel for schedule(dynamic, 1)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            if (i > winner.load(std::memory_order_relaxed)) continue;
            auto swap = swap_from(starts[static_cast<std::size_t>(i)], k);
            if (swap.empty()) continue;
            found[static_cast<std::size_t>(i)] = std::move(swap);
            auto current = winner.load();
            while (i < current && !winner.compare_exchange_weak(current, i)) {
            }
        }
        const auto w = winner.load();
        return w < count ? found[static_cast<std::size_t>(w)] : std::vector<Vertex>{};
    }

    void apply(const std::vector<Vertex>& swap) {
        for (Vertex x : swap) {
            for (Vertex u : g_.neighbors(x)) {
                if (in_[u]) remove(u);
            }
        }
        for (Vertex x : swap) add(x);
    }

private:
    bool usable(Vertex v, std::size_t k) const { return !in_[v] && blockers_[v] + 1 <= k; }

    void add(Vertex v) {
        in_[v] = true;
        for (Vertex u : g_.neighbors(v)) ++blockers_[u];
    }

    void remove(Vertex v) {
        in_[v] = false;
        for (Vertex u : g_.neighbors(v)) --blockers_[u];
    }

    // Usable vertices > first reachable from `first` by alternating
    // outside/inside steps within 2(k-1) hops. A minimum improving swap is
    // connected through its blockers, so it lies entirely in this window.
    std::vector<Vertex> window(Vertex first, std::size_t k) const {
        std::vector<std::size_t> dist(g_.size(), std::numeric_limits<std::size_t>::max());
        std::vector<Vertex> frontier{first};
        dist[first] = 0;
        std::vector<Vertex> out;
        const std::size_t radius = 2 * (k - 1);
        for (std::size_t level = 0; level < radius && !frontier.empty(); ++level) {
            std::vector<Vertex> next;
            for (Vertex v : frontier) {
                for (Vertex u : g_.neighbors(v)) {
                    if (dist[u] != std::numeric_limits<std::size_t>::max()) continue;
                    // outside vertices step into the set, set vertices step out
                    if (in_[v] == in_[u]) continue;
                    if (!in_[u] && !usable(u, k)) continue;
                    dist[u] = level + 1;
                    next.push_back(u);
                    if (!in_[u] && u > first) out.push_back(u);
                }
            }
            frontier = std::move(next);
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    std::vector<Vertex> swap_from(Vertex first, std::size_t k) const {
        const auto candidates = window(first, k);
        std::vector<Vertex> chosen{first};
        std::vector<std::uint32_t> hit(g_.size(), 0);
        std::size_t blocked = 0;
        for (Vertex u : g_.neighbors(first)) {
            if (in_[u] && hit[u]++ == 0) ++blocked;
        }
        if (extend(candidates, 0, k, chosen, hit, blocked)) return chosen;
        return {};
    }

    bool extend(const std::vector<Vertex>& candidates, std::size_t from, std::size_t k,
                std::vector<Vertex>& chosen, std::vector<std::uint32_t>& hit, std::size_t blocked) const {
        if (chosen.size() == k) return blocked + 1 <= k;
        for (std::size_t i = from; i < candidates.size(); ++i) {
            const Vertex c = candidates[i];
            if (std::any_of(chosen.begin(), chosen.end(), [&](Vertex x) { return g_.adjacent(x, c); })) {
                continue;
            }
            std::size_t added = 0;
            for (Vertex u : g_.neighbors(c)) {
                if (in_[u] && hit[u]++ == 0) ++added;
            }
            if (blocked + added + 1 <= k) {
                chosen.push_back(c);
                if (extend(candidates, i + 1, k, chosen, hit, blocked + added)) return true;
                chosen.pop_back();
            }
            for (Vertex u : g_.neighbors(c)) {
                if (in_[u]) --hit[u];
            }
        }
        return false;
    }

    const WeightedGraph& g_;
    std::vector<bool> in_;
    std::vector<std::size_t> blockers_;
};

}  // namespace

std::vector<Vertex> find_improving_swap(const WeightedGraph& g, const VertexSet& current,
                                        std::size_t swap_size, SwapScan scan) {
    if (swap_size < 1) throw Error(ErrorCode::InvalidSwapSize, "swap size must be >= 1");
    SwapSearch search(g, current.mask(g.size()));
    for (std::size_t k = 1; k <= swap_size; ++k) {
        auto swap = search.first_swap(k, scan);
        if (!swap.empty()) return swap;
    }
    return {};
}

VertexSet local_search_is(const WeightedGraph& g, const LocalSearchOptions& options) {
    if (options.swap_size < 1) throw Error(ErrorCode::InvalidSwapSize, "swap size must be >= 1");
    if (!g.unit_weights() && options.warn) {
        options.warn("local search optimizes cardinality; vertex weights are ignored");
    }
    SwapSearch search(g, greedy_is(g, options.seed).mask(g.size()));
    for (std::size_t k = 1; k <= options.swap_size;) {
        auto swap = search.first_swap(k, options.scan);
        if (swap.empty()) {
            ++k;
            continue;
        }
        search.apply(swap);
        k = 1;
    }
    return VertexSet::from_mask(g, search.members());
}

std::size_t epsilon_to_swap_size(double eps, double c) {
    if (!(eps > 0.0) || eps > 1.0) {
        throw Error(ErrorCode::InvalidEpsilon, "eps must lie in (0, 1], got " + std::to_string(eps));
    }
    if (!(c > 0.0) || !std::isfinite(c)) {
        throw Error(ErrorCode::InvalidParameter, "swap constant must be positive");
    }
    // the slack absorbs representation error, e.g. 1 / 0.1^2 = 99.999...
    const double t = std::ceil(c / (eps * eps) - 1e-9);
    return static_cast<std::size_t>(std::max(1.0, t));
}

std::unique_ptr<ISOracle> make_oracle(std::string_view name, const OracleConfig& config) {
    if (name == "exact") return std::make_unique<ExactOracle>(config.exact_cap);
    if (name == "greedy") return std::make_unique<GreedyOracle>(config.seed);
    if (name == "local-search") {
        LocalSearchOptions options;
        options.seed = config.seed;
        options.warn = config.warn;
        options.swap_size = config.swap_size_override > 0
                                ? config.swap_size_override
                                : epsilon_to_swap_size(config.eps, config.swap_constant);
        return std::make_unique<LocalSearchOracle>(std::move(options), config.eps);
    }
    throw Error(ErrorCode::InvalidParameter, "unknown oracle '" + std::string(name) + "'");
}

}  // namespace vcapprox

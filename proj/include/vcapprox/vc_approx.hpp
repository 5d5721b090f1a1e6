#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vcapprox/geometry.hpp"
#include "vcapprox/graph.hpp"
#include "vcapprox/is_oracles.hpp"
#include "vcapprox/nt_kernel.hpp"
#include "vcapprox/rational.hpp"

namespace vcapprox {

struct PartSummary {
    std::size_t size = 0;
    Weight weight = 0;
    friend bool operator==(const PartSummary&, const PartSummary&) = default;
};

struct KernelStats {
    PartSummary v0, vhalf, v1;
    friend bool operator==(const KernelStats&, const KernelStats&) = default;
};

KernelStats summarize(const Kernel& kernel);

struct ApproxResult {
    VertexSet cover;
    Rational lp_lower_bound;  // half-integral LP optimum of G
    KernelStats kernel_stats;
    std::string oracle_name;
    double eps_requested = 0.0;
    std::optional<std::size_t> swap_size;  // local search only

    Weight cover_weight() const noexcept { return cover.weight(); }
    /// cover weight / LP bound; absent when the LP bound is 0 (edgeless).
    std::optional<Rational> certified_ratio_bound() const;
};

/// Kernelize, run the oracle on the kernel, complement inside the kernel and
/// lift. If the oracle achieves w(I) >= (1 - eps) is*(kernel) the cover is
/// within (1 + eps) of optimal. eps must lie in [0, 1); eps = 0 requires an
/// exact oracle (InvalidEpsilon otherwise).
ApproxResult approx_vc(const WeightedGraph& g, const ISOracle& oracle, double eps);

/// Same pipeline for a geometric instance: the oracle sees the intersection
/// graph of the kernel's shapes, which stays inside the shape class.
ApproxResult approx_vc(const ShapeSet& shapes, const ISOracle& oracle, double eps);

/// Minimum-weight vertex cover as the complement of exact_is.
VertexSet exact_vc(const WeightedGraph& g, std::size_t cap = kDefaultExactCap);

/// Endpoints of a maximal matching built by scanning edges in sorted order.
VertexSet matching_2approx_vc(const WeightedGraph& g);

struct Check {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<Check> checks;
    std::optional<Weight> optimum;           // brute force, when n <= cap
    std::optional<Rational> exact_ratio;     // cover weight / optimum

    bool passed() const;
};

/// Re-checks cover validity, cover weight, the LP bound (recomputed) and the
/// ratio bound; adds an exact ratio against brute force when g.size() <= cap.
VerifyReport verify_result(const WeightedGraph& g, const ApproxResult& result,
                           std::size_t cap = kDefaultExactCap);

/// As above, but for a result whose stored weight may disagree with its cover
/// (e.g. read back from a document).
VerifyReport verify_result(const WeightedGraph& g, const ApproxResult& result, Weight claimed_weight,
                           std::size_t cap = kDefaultExactCap);

}  // namespace vcapprox

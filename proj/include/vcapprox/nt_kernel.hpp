#pragma once

#include <vector>

#include "vcapprox/graph.hpp"
#include "vcapprox/halfint_lp.hpp"

namespace vcapprox {

/// Crown decomposition induced by an optimal half-integral LP solution:
/// crown V0 (x=0), body Vhalf (x=1/2), head V1 (x=1).
struct NTPartition {
    VertexSet v0;
    VertexSet vhalf;
    VertexSet v1;
};

/// Nemhauser-Trotter kernel: G[Vhalf] plus what is already decided.
struct Kernel {
    WeightedGraph kernel_graph;
    VertexSet forced;  // V1: in every cover we build
    VertexSet free;    // V0: in none
    std::vector<Vertex> back_map;  // kernel id -> original id
    HalfIntegralSolution lp;       // the solution of G the partition came from
};

/// Splits vertices by LP value. Throws CrownViolation if some edge touches V0
/// and does not end in V1 (i.e. `sol` is infeasible or not optimal), and
/// DimensionMismatch if the sizes disagree.
NTPartition partition(const WeightedGraph& g, const HalfIntegralSolution& sol);

Kernel kernelize(const WeightedGraph& g);

/// back_map(cover_in_kernel) ∪ forced. Throws NotACover if `kernel_cover`
/// does not cover the kernel graph.
VertexSet lift(const WeightedGraph& g, const Kernel& kernel, const VertexSet& kernel_cover);

/// LP optimum of the kernel graph equals half its total weight.
bool kernel_density_check(const Kernel& kernel);

}  // namespace vcapprox

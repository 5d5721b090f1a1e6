#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "vcapprox/geometry.hpp"
#include "vcapprox/graph.hpp"
#include "vcapprox/rational.hpp"
#include "vcapprox/vc_approx.hpp"

namespace vcapprox {

// Graph files (1-based ids on disk, 0-based in memory):
//
//   c <comment>
//   p graph <n> <m>
//   v <id> <weight>      exactly one per vertex
//   e <u> <v>            exactly m lines
//
// Shape files:
//
//   p disks <n>   followed by   d <cx> <cy> <r> [w]
//   p rects <n>   followed by   r <x1> <y1> <x2> <y2> [w]
//
// All parse errors are ParseError with a 1-based line number.

WeightedGraph parse_graph(std::string_view text);
std::string serialize_graph(const WeightedGraph& g);

ShapeSet parse_shapes(std::string_view text);
std::string serialize_shapes(const ShapeSet& shapes);

enum class InstanceFormat { Graph, Shapes };

/// Looks at the first `p` line. Throws MissingHeader if there is none.
InstanceFormat detect_format(std::string_view text);

using Instance = std::variant<WeightedGraph, ShapeSet>;
Instance parse_instance(std::string_view text, std::optional<InstanceFormat> format = std::nullopt);

/// JSON document with sorted keys: cover (1-based, sorted), cover_weight,
/// eps, kernel sizes/weights, lp_bound ("p/q"), oracle, ratio_bound ("p/q",
/// omitted when the LP bound is 0) and swap_size for local search.
std::string write_result(const ApproxResult& result);

/// Result document as read back, before validation against an instance.
struct ResultDocument {
    std::vector<std::int64_t> cover;  // 0-based, as written (may be out of range)
    Weight cover_weight = 0;
    Rational lp_bound;
    std::optional<Rational> ratio_bound;
    KernelStats kernel;
    std::string oracle;
    double eps = 0.0;
    std::optional<std::size_t> swap_size;
};

/// Throws ParseError(MalformedLine, 0, ...) on malformed documents.
ResultDocument read_result(std::string_view text);

}  // namespace vcapprox

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "vcapprox/graph.hpp"

namespace vcapprox {

/// Decimal coordinate held exactly as fixed point with nine fractional digits.
/// Magnitudes are limited to 1e9 so squared distances fit in 128 bits.
class Coord {
public:
    static constexpr std::int64_t kScale = 1'000'000'000;
    static constexpr std::int64_t kLimit = kScale * kScale;  // |scaled| <= 1e18

    constexpr Coord() = default;
    static Coord from_scaled(std::int64_t scaled);
    /// Plain decimal ("-12.5", "3", ".25"); no exponents, at most nine
    /// fractional digits. Throws InvalidShape.
    static Coord parse(std::string_view text);

    constexpr std::int64_t scaled() const noexcept { return scaled_; }
    /// Shortest exact decimal form, no trailing zeros.
    std::string to_string() const;

    friend constexpr auto operator<=>(const Coord&, const Coord&) = default;

private:
    constexpr explicit Coord(std::int64_t scaled) : scaled_(scaled) {}
    std::int64_t scaled_ = 0;
};

struct Disk {
    Coord cx, cy, r;
    friend bool operator==(const Disk&, const Disk&) = default;
};

struct Rect {
    Coord x1, y1, x2, y2;
    friend bool operator==(const Rect&, const Rect&) = default;
};

/// Closed disks: squared center distance <= (r1 + r2)^2, exact.
bool intersects(const Disk& a, const Disk& b);
/// Closed rectangles: intervals overlap on both axes.
bool intersects(const Rect& a, const Rect& b);

enum class ShapeKind { Disks, Rects };

/// Homogeneous list of shapes with positive integer weights.
struct ShapeSet {
    ShapeKind kind = ShapeKind::Disks;
    std::vector<Disk> disks;
    std::vector<Rect> rects;
    std::vector<Weight> weights;

    std::size_t size() const noexcept { return weights.size(); }
    friend bool operator==(const ShapeSet&, const ShapeSet&) = default;
};

/// Checks radii > 0, corners ordered, weights >= 1 and that only the list
/// matching `kind` is populated. Throws InvalidShape.
void validate(const ShapeSet& shapes);

struct IntersectionGraph {
    WeightedGraph graph;
    std::vector<std::size_t> shape_map;  // vertex -> index into the shape set
};

enum class Parallelism { Serial, OpenMP };

/// One vertex per shape (in order), one edge per intersecting pair. The
/// OpenMP path partitions rows across threads and merges in row order, so it
/// produces the same graph as the serial reference.
IntersectionGraph intersection_graph(const ShapeSet& shapes, Parallelism mode = Parallelism::OpenMP);

struct GenerateParams {
    ShapeKind kind = ShapeKind::Disks;
    std::size_t n = 0;
    double region = 100.0;    // shapes placed in [0, region]^2
    double min_size = 1.0;    // radius, or rectangle side
    double max_size = 5.0;
    std::uint64_t seed = 0;
};

/// Uniform random shapes on a 1e-3 grid. Deterministic in (params).
/// Throws InvalidParameter.
ShapeSet generate_instance(const GenerateParams& params);

/// Shapes behind the vertices of `subset`, in subset order, so that
/// intersection_graph(result) equals induced_subgraph(graph, subset).
ShapeSet restrict_shapes(const ShapeSet& shapes, const VertexSet& subset,
                         const std::vector<std::size_t>& shape_map);

}  // namespace vcapprox

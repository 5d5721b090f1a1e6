#include "vcapprox/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "vcapprox/error.hpp"

namespace vcapprox {

Coord Coord::from_scaled(std::int64_t scaled) {
    if (scaled > kLimit || scaled < -kLimit) {
        throw Error(ErrorCode::InvalidShape, "coordinate magnitude exceeds 1e9");
    }
    return Coord(scaled);
}

Coord Coord::parse(std::string_view text) {
    const std::string original(text);
    const auto bad = [&](const std::string& why) {
        return Error(ErrorCode::InvalidShape, "bad coordinate '" + original + "': " + why);
    };
    bool negative = false;
    if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
        negative = text.front() == '-';
        text.remove_prefix(1);
    }
    const auto dot = text.find('.');
    const auto whole = text.substr(0, dot);
    const auto frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
    if (whole.empty() && frac.empty()) throw bad("no digits");
    if (frac.size() > 9) throw bad("more than nine fractional digits");
    const auto digits = [](std::string_view s) {
        return std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (!digits(whole) || !digits(frac)) throw bad("not a plain decimal");

    __int128 value = 0;
    for (char c : whole) {
        value = value * 10 + (c - '0');
        if (value > kLimit) throw bad("magnitude exceeds 1e9");
    }
    value *= kScale;
    __int128 fraction = 0;
    for (std::size_t i = 0; i < 9; ++i) fraction = fraction * 10 + (i < frac.size() ? frac[i] - '0' : 0);
    value += fraction;
    if (value > kLimit) throw bad("magnitude exceeds 1e9");
    return Coord(static_cast<std::int64_t>(negative ? -value : value));
}

std::string Coord::to_string() const {
    const bool negative = scaled_ < 0;
    const std::uint64_t magnitude = negative ? static_cast<std::uint64_t>(-scaled_) : static_cast<std::uint64_t>(scaled_);
    std::string out = negative ? "-" : "";
    out += std::to_string(magnitude / kScale);
    auto frac = magnitude % kScale;
    if (frac != 0) {
        std::string digits = std::to_string(frac);
        digits.insert(0, 9 - digits.size(), '0');
        while (digits.back() == '0') digits.pop_back();
        out += "." + digits;
    }
    return out;
}

bool intersects(const Disk& a, const Disk& b) {
    const __int128 dx = static_cast<__int128>(a.cx.scaled()) - b.cx.scaled();
    const __int128 dy = static_cast<__int128>(a.cy.scaled()) - b.cy.scaled();
    const __int128 reach = static_cast<__int128>(a.r.scaled()) + b.r.scaled();
    return dx * dx + dy * dy <= reach * reach;
}

bool intersects(const Rect& a, const Rect& b) {
    return a.x1 <= b.x2 && b.x1 <= a.x2 && a.y1 <= b.y2 && b.y1 <= a.y2;
}

void validate(const ShapeSet& shapes) {
    const bool disks = shapes.kind == ShapeKind::Disks;
    const std::size_t count = disks ? shapes.disks.size() : shapes.rects.size();
    if ((disks && !shapes.rects.empty()) || (!disks && !shapes.disks.empty())) {
        throw Error(ErrorCode::InvalidShape, "mixed shape kinds");
    }
    if (count != shapes.weights.size()) throw Error(ErrorCode::InvalidShape, "weight count differs from shape count");
    for (std::size_t i = 0; i < count; ++i) {
        if (shapes.weights[i] < 1) throw Error(ErrorCode::InvalidShape, "shape " + std::to_string(i) + " has weight < 1");
        if (disks && shapes.disks[i].r.scaled() <= 0) {
            throw Error(ErrorCode::InvalidShape, "disk " + std::to_string(i) + " has non-positive radius");
        }
        if (!disks) {
            const Rect& r = shapes.rects[i];
            if (!(r.x1 < r.x2) || !(r.y1 < r.y2)) {
                throw Error(ErrorCode::InvalidShape, "rectangle " + std::to_string(i) + " has unordered corners");
            }
        }
    }
}

namespace {

template <typename Shape>
std::vector<Edge> pair_edges(const std::vector<Shape>& shapes, Parallelism mode) {
    const auto n = static_cast<std::ptrdiff_t>(shapes.size());
    std::vector<std::vector<Vertex>> rows(shapes.size());
    if (mode == Parallelism::OpenMP) {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            auto& row = rows[static_cast<std::size_t>(i)];
            for (std::ptrdiff_t j = i + 1; j < n; ++j) {
                if (intersects(shapes[static_cast<std::size_t>(i)], shapes[static_cast<std::size_t>(j)])) {
                    row.push_back(static_cast<Vertex>(j));
                }
            }
        }
    } else {
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            for (std::ptrdiff_t j = i + 1; j < n; ++j) {
                if (intersects(shapes[static_cast<std::size_t>(i)], shapes[static_cast<std::size_t>(j)])) {
                    rows[static_cast<std::size_t>(i)].push_back(static_cast<Vertex>(j));
                }
            }
        }
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < rows.size(); ++i) {
        for (Vertex j : rows[i]) edges.emplace_back(static_cast<Vertex>(i), j);
    }
    return edges;
}

}  // namespace

IntersectionGraph intersection_graph(const ShapeSet& shapes, Parallelism mode) {
    validate(shapes);
    const auto edges = shapes.kind == ShapeKind::Disks ? pair_edges(shapes.disks, mode)
                                                       : pair_edges(shapes.rects, mode);
    IntersectionGraph out;
    out.graph = build_graph(shapes.size(), shapes.weights, edges);
    out.shape_map.resize(shapes.size());
    for (std::size_t i = 0; i < shapes.size(); ++i) out.shape_map[i] = i;
    return out;
}

namespace {

constexpr std::int64_t kGrid = Coord::kScale / 1000;

std::int64_t to_grid(double value) {
    return static_cast<std::int64_t>(std::llround(value * 1000.0));
}

}  // namespace

ShapeSet generate_instance(const GenerateParams& p) {
    if (!(p.region > 0.0) || !(p.min_size > 0.0) || p.max_size < p.min_size || p.region > 1e6 || p.max_size > 1e6) {
        throw Error(ErrorCode::InvalidParameter, "need 0 < min_size <= max_size <= 1e6 and 0 < region <= 1e6");
    }
    const std::int64_t region = to_grid(p.region);
    const std::int64_t lo = std::max<std::int64_t>(1, to_grid(p.min_size));
    const std::int64_t hi = std::max(lo, to_grid(p.max_size));
    std::mt19937_64 rng(p.seed);
    const auto uniform = [&](std::int64_t a, std::int64_t b) {  // inclusive
        return a + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(b - a + 1));
    };
    const auto coord = [](std::int64_t grid) { return Coord::from_scaled(grid * kGrid); };

    ShapeSet out;
    out.kind = p.kind;
    out.weights.assign(p.n, 1);
    for (std::size_t i = 0; i < p.n; ++i) {
        const auto x = uniform(0, region);
        const auto y = uniform(0, region);
        if (p.kind == ShapeKind::Disks) {
            out.disks.push_back({coord(x), coord(y), coord(uniform(lo, hi))});
        } else {
            const auto w = uniform(lo, hi);
            const auto h = uniform(lo, hi);
            out.rects.push_back({coord(x), coord(y), coord(x + w), coord(y + h)});
        }
    }
    return out;
}

ShapeSet restrict_shapes(const ShapeSet& shapes, const VertexSet& subset, const std::vector<std::size_t>& shape_map) {
    ShapeSet out;
    out.kind = shapes.kind;
    for (Vertex v : subset.members()) {
        if (v >= shape_map.size() || shape_map[v] >= shapes.size()) {
            throw Error(ErrorCode::InvalidSet, "vertex " + std::to_string(v) + " has no shape");
        }
        const std::size_t s = shape_map[v];
        if (shapes.kind == ShapeKind::Disks) {
            out.disks.push_back(shapes.disks[s]);
        } else {
            out.rects.push_back(shapes.rects[s]);
        }
        out.weights.push_back(shapes.weights[s]);
    }
    return out;
}

}  // namespace vcapprox

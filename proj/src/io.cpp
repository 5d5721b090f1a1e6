#include "vcapprox/io.hpp"

#include <charconv>
#include "json.hpp"
#include <sstream>

#include "vcapprox/error.hpp"

namespace vcapprox {
namespace {

struct Line {
    std::size_t number;
    std::vector<std::string_view> fields;
};

/// Non-empty, non-comment lines split on blanks.
std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        const auto end = text.find('\n');
        std::string_view line = text.substr(0, end);
        text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        Line out{number, {}};
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            const std::size_t start = i;
            while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
            if (i > start) out.fields.push_back(line.substr(start, i - start));
        }
        if (out.fields.empty() || out.fields.front() == "c") continue;
        lines.push_back(std::move(out));
    }
    return lines;
}

std::int64_t integer(const Line& line, std::size_t field) {
    const auto s = line.fields[field];
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size()) {
        throw ParseError(ErrorCode::MalformedLine, line.number, "'" + std::string(s) + "' is not an integer");
    }
    return value;
}

void expect_fields(const Line& line, std::size_t lo, std::size_t hi) {
    if (line.fields.size() < lo || line.fields.size() > hi) {
        throw ParseError(ErrorCode::MalformedLine, line.number,
                         "unexpected field count for '" + std::string(line.fields.front()) + "' line");
    }
}

Vertex vertex_id(const Line& line, std::size_t field, std::int64_t n, ErrorCode code) {
    const auto id = integer(line, field);
    if (id < 1 || id > n) {
        throw ParseError(code, line.number, "vertex id " + std::to_string(id) + " outside 1.." + std::to_string(n));
    }
    return static_cast<Vertex>(id - 1);
}

}  // namespace

WeightedGraph parse_graph(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty() || lines.front().fields.front() != "p") {
        throw ParseError(ErrorCode::MissingHeader, lines.empty() ? 1 : lines.front().number,
                         "expected 'p graph <n> <m>' before any data");
    }
    const Line& header = lines.front();
    if (header.fields.size() != 4 || header.fields[1] != "graph") {
        throw ParseError(ErrorCode::MissingHeader, header.number, "expected 'p graph <n> <m>'");
    }
    const auto n = integer(header, 2);
    const auto m = integer(header, 3);
    if (n < 0 || m < 0 || n > std::int64_t{UINT32_MAX}) {
        throw ParseError(ErrorCode::MalformedLine, header.number, "invalid vertex or edge count");
    }

    std::vector<Weight> weights(static_cast<std::size_t>(n), 0);
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<Edge> edges;
    std::int64_t edge_lines = 0;
    std::size_t last_line = header.number;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        last_line = line.number;
        const auto tag = line.fields.front();
        if (tag == "v") {
            expect_fields(line, 3, 3);
            const Vertex v = vertex_id(line, 1, n, ErrorCode::MalformedLine);
            if (seen[v]) throw ParseError(ErrorCode::DuplicateVertexLine, line.number, "vertex " + std::to_string(v + 1) + " listed twice");
            const auto w = integer(line, 2);
            if (w < 1) throw ParseError(ErrorCode::InvalidWeight, line.number, "weight " + std::to_string(w) + " is not positive");
            seen[v] = true;
            weights[v] = w;
        } else if (tag == "e") {
            expect_fields(line, 3, 3);
            const Vertex u = vertex_id(line, 1, n, ErrorCode::InvalidEdge);
            const Vertex v = vertex_id(line, 2, n, ErrorCode::InvalidEdge);
            if (u == v) throw ParseError(ErrorCode::InvalidEdge, line.number, "self-loop at vertex " + std::to_string(u + 1));
            edges.emplace_back(u, v);
            ++edge_lines;
        } else if (tag == "p") {
            throw ParseError(ErrorCode::MalformedLine, line.number, "second header line");
        } else {
            throw ParseError(ErrorCode::MalformedLine, line.number, "unknown line type '" + std::string(tag) + "'");
        }
    }
    for (std::size_t v = 0; v < seen.size(); ++v) {
        if (!seen[v]) throw ParseError(ErrorCode::MalformedLine, last_line, "no 'v' line for vertex " + std::to_string(v + 1));
    }
    if (edge_lines != m) {
        throw ParseError(ErrorCode::EdgeCountMismatch, last_line,
                         "header declares " + std::to_string(m) + " edges, found " + std::to_string(edge_lines));
    }
    return build_graph(static_cast<std::size_t>(n), std::move(weights), edges);
}

std::string serialize_graph(const WeightedGraph& g) {
    std::ostringstream out;
    out << "p graph " << g.size() << ' ' << g.edge_count() << '\n';
    for (Vertex v = 0; v < g.size(); ++v) out << "v " << v + 1 << ' ' << g.weight(v) << '\n';
    for (auto [u, v] : g.edges()) out << "e " << u + 1 << ' ' << v + 1 << '\n';
    return out.str();
}

ShapeSet parse_shapes(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty() || lines.front().fields.front() != "p") {
        throw ParseError(ErrorCode::MissingHeader, lines.empty() ? 1 : lines.front().number,
                         "expected 'p disks <n>' or 'p rects <n>'");
    }
    const Line& header = lines.front();
    if (header.fields.size() != 3 || (header.fields[1] != "disks" && header.fields[1] != "rects")) {
        throw ParseError(ErrorCode::MissingHeader, header.number, "expected 'p disks <n>' or 'p rects <n>'");
    }
    ShapeSet shapes;
    shapes.kind = header.fields[1] == "disks" ? ShapeKind::Disks : ShapeKind::Rects;
    const char expected_tag = shapes.kind == ShapeKind::Disks ? 'd' : 'r';
    const std::size_t coords = shapes.kind == ShapeKind::Disks ? 3 : 4;
    const auto n = integer(header, 2);
    if (n < 0) throw ParseError(ErrorCode::MalformedLine, header.number, "negative shape count");

    std::size_t last_line = header.number;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const Line& line = lines[i];
        last_line = line.number;
        const auto tag = line.fields.front();
        if (tag == "d" || tag == "r") {
            if (tag[0] != expected_tag) {
                throw ParseError(ErrorCode::InvalidShape, line.number, "mixed shape kinds in one file");
            }
        } else {
            throw ParseError(ErrorCode::MalformedLine, line.number, "unknown line type '" + std::string(tag) + "'");
        }
        expect_fields(line, coords + 1, coords + 2);
        std::vector<Coord> c;
        try {
            for (std::size_t f = 1; f <= coords; ++f) c.push_back(Coord::parse(line.fields[f]));
        } catch (const Error& e) {
            throw ParseError(ErrorCode::InvalidShape, line.number, e.what());
        }
        Weight w = 1;
        if (line.fields.size() == coords + 2) {
            w = integer(line, coords + 1);
            if (w < 1) throw ParseError(ErrorCode::InvalidWeight, line.number, "weight " + std::to_string(w) + " is not positive");
        }
        if (shapes.kind == ShapeKind::Disks) {
            if (c[2].scaled() <= 0) throw ParseError(ErrorCode::InvalidShape, line.number, "radius must be positive");
            shapes.disks.push_back({c[0], c[1], c[2]});
        } else {
            if (!(c[0] < c[2]) || !(c[1] < c[3])) {
                throw ParseError(ErrorCode::InvalidShape, line.number, "rectangle needs x1 < x2 and y1 < y2");
            }
            shapes.rects.push_back({c[0], c[1], c[2], c[3]});
        }
        shapes.weights.push_back(w);
    }
    if (static_cast<std::int64_t>(shapes.size()) != n) {
        throw ParseError(ErrorCode::MalformedLine, last_line,
                         "header declares " + std::to_string(n) + " shapes, found " + std::to_string(shapes.size()));
    }
    return shapes;
}

std::string serialize_shapes(const ShapeSet& shapes) {
    std::ostringstream out;
    const bool disks = shapes.kind == ShapeKind::Disks;
    out << "p " << (disks ? "disks " : "rects ") << shapes.size() << '\n';
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        if (disks) {
            const Disk& d = shapes.disks[i];
            out << "d " << d.cx.to_string() << ' ' << d.cy.to_string() << ' ' << d.r.to_string();
        } else {
            const Rect& r = shapes.rects[i];
            out << "r " << r.x1.to_string() << ' ' << r.y1.to_string() << ' ' << r.x2.to_string() << ' '
                << r.y2.to_string();
        }
        if (shapes.weights[i] != 1) out << ' ' << shapes.weights[i];
        out << '\n';
    }
    return out.str();
}

InstanceFormat detect_format(std::string_view text) {
    for (const Line& line : tokenize(text)) {
        if (line.fields.front() != "p") break;
        if (line.fields.size() >= 2 && line.fields[1] == "graph") return InstanceFormat::Graph;
        if (line.fields.size() >= 2 && (line.fields[1] == "disks" || line.fields[1] == "rects")) {
            return InstanceFormat::Shapes;
        }
        throw ParseError(ErrorCode::MissingHeader, line.number, "unknown instance kind");
    }
    throw ParseError(ErrorCode::MissingHeader, 1, "no 'p' header line");
}

Instance parse_instance(std::string_view text, std::optional<InstanceFormat> format) {
    if ((format ? *format : detect_format(text)) == InstanceFormat::Graph) return parse_graph(text);
    return parse_shapes(text);
}

namespace {

nlohmann::json part_json(const PartSummary& p) { return {{"size", p.size}, {"weight", p.weight}}; }

PartSummary part_from(const nlohmann::json& j) {
    return {j.at("size").get<std::size_t>(), j.at("weight").get<Weight>()};
}

}  // namespace

std::string write_result(const ApproxResult& result) {
    nlohmann::json doc;
    auto ids = nlohmann::json::array();
    for (Vertex v : result.cover.members()) ids.push_back(v + 1);
    doc["cover"] = std::move(ids);
    doc["cover_weight"] = result.cover_weight();
    doc["eps"] = result.eps_requested;
    doc["kernel"] = {{"v0", part_json(result.kernel_stats.v0)},
                     {"vhalf", part_json(result.kernel_stats.vhalf)},
                     {"v1", part_json(result.kernel_stats.v1)}};
    doc["lp_bound"] = result.lp_lower_bound.to_string();
    doc["oracle"] = result.oracle_name;
    if (const auto ratio = result.certified_ratio_bound()) doc["ratio_bound"] = ratio->to_string();
    if (result.swap_size) doc["swap_size"] = *result.swap_size;
    return doc.dump(2) + "\n";
}

ResultDocument read_result(std::string_view text) {
    try {
        const auto doc = nlohmann::json::parse(text);
        ResultDocument out;
        for (const auto& id : doc.at("cover")) out.cover.push_back(id.get<std::int64_t>() - 1);
        out.cover_weight = doc.at("cover_weight").get<Weight>();
        out.lp_bound = Rational::parse(doc.at("lp_bound").get<std::string>());
        if (doc.contains("ratio_bound")) out.ratio_bound = Rational::parse(doc["ratio_bound"].get<std::string>());
        const auto& kernel = doc.at("kernel");
        out.kernel = {part_from(kernel.at("v0")), part_from(kernel.at("vhalf")), part_from(kernel.at("v1"))};
        out.oracle = doc.at("oracle").get<std::string>();
        out.eps = doc.at("eps").get<double>();
        if (doc.contains("swap_size")) out.swap_size = doc["swap_size"].get<std::size_t>();
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(ErrorCode::MalformedLine, 0, std::string("result document: ") + e.what());
    } catch (const Error& e) {
        throw ParseError(ErrorCode::MalformedLine, 0, std::string("result document: ") + e.what());
    }
}

}  // namespace vcapprox

#pragma once

#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "greedyspan/graph.hpp"

namespace greedyspan {

class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Shortest decimal text that parses back to exactly `v`.
inline std::string format_double(double v) {
    std::array<char, 32> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return std::string(buf.data(), end);
}

namespace detail {

inline std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

template <typename T>
T parse_field(std::string_view field, std::size_t line, const char* what) {
    T value{};
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        throw ParseError(line, std::string("invalid ") + what + " '" + std::string(field) + "'");
    }
    return value;
}

/// Reads lines, tracking 1-based numbers; trailing blank lines are allowed.
class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    bool next(std::string& line) {
        if (!std::getline(in_, line)) return false;
        ++number_;
        return true;
    }

    std::size_t number() const noexcept { return number_; }

    void expect_end() {
        std::string rest;
        while (next(rest)) {
            if (!split_fields(rest).empty()) throw ParseError(number_, "unexpected content after last record");
        }
    }

private:
    std::istream& in_;
    std::size_t number_ = 0;
};

inline std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path + "' for reading");
    return in;
}

inline std::ofstream open_out(const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open '" + path + "' for writing");
    return out;
}

inline void finish(std::ofstream& out, const std::string& path) {
    out.flush();
    if (!out) throw IoError("write failed for '" + path + "'");
}

}  // namespace detail

/// Point file: a line with n, then n lines "x y".
inline void write_points(std::ostream& out, const PointSet& ps) {
    out << ps.size() << '\n';
    for (const Point& p : ps) out << format_double(p.x) << ' ' << format_double(p.y) << '\n';
}

inline PointSet read_points(std::istream& in) {
    detail::LineReader reader(in);
    std::string line;
    if (!reader.next(line)) throw ParseError(1, "missing point count");
    auto header = detail::split_fields(line);
    if (header.size() != 1) throw ParseError(reader.number(), "expected a single point count");
    const auto n = detail::parse_field<std::size_t>(header[0], reader.number(), "point count");
    std::vector<Point> pts;
    pts.reserve(n);
    while (pts.size() < n) {
        if (!reader.next(line)) throw ParseError(reader.number() + 1, "missing point record");
        auto fields = detail::split_fields(line);
        if (fields.size() != 2) throw ParseError(reader.number(), "expected 'x y'");
        const double x = detail::parse_field<double>(fields[0], reader.number(), "x coordinate");
        const double y = detail::parse_field<double>(fields[1], reader.number(), "y coordinate");
        if (!std::isfinite(x) || !std::isfinite(y)) throw ParseError(reader.number(), "non-finite coordinate");
        pts.push_back({x, y});
    }
    reader.expect_end();
    return PointSet(std::move(pts));
}

inline void write_points(const std::string& path, const PointSet& ps) {
    auto out = detail::open_out(path);
    write_points(out, ps);
    detail::finish(out, path);
}

inline PointSet read_points(const std::string& path) {
    auto in = detail::open_in(path);
    return read_points(in);
}

/// Edge list: "n m", then m lines "u v" with u < v in sorted order.
inline void write_graph(std::ostream& out, const SpannerGraph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

inline void write_graph(const std::string& path, const SpannerGraph& g) {
    auto out = detail::open_out(path);
    write_graph(out, g);
    detail::finish(out, path);
}

inline SpannerGraph read_graph(std::istream& in, const PointSet& ps) {
    detail::LineReader reader(in);
    std::string line;
    if (!reader.next(line)) throw ParseError(1, "missing header");
    auto header = detail::split_fields(line);
    if (header.size() != 2) throw ParseError(reader.number(), "expected 'n m'");
    const auto n = detail::parse_field<std::size_t>(header[0], reader.number(), "vertex count");
    const auto m = detail::parse_field<std::size_t>(header[1], reader.number(), "edge count");
    if (n != ps.size()) {
        throw ParseError(reader.number(), "graph has " + std::to_string(n) + " vertices but point set has " +
                                              std::to_string(ps.size()));
    }
    SpannerGraph g(ps);
    for (std::size_t i = 0; i < m; ++i) {
        if (!reader.next(line)) throw ParseError(reader.number() + 1, "missing edge record");
        auto fields = detail::split_fields(line);
        if (fields.size() != 2) throw ParseError(reader.number(), "expected 'u v'");
        const auto u = detail::parse_field<VertexId>(fields[0], reader.number(), "vertex id");
        const auto v = detail::parse_field<VertexId>(fields[1], reader.number(), "vertex id");
        if (u >= n || v >= n) throw ParseError(reader.number(), "vertex id out of range");
        if (u >= v) throw ParseError(reader.number(), "edge must satisfy u < v");
        try {
            g.add_edge(u, v);
        } catch (const std::invalid_argument& e) {
            throw ParseError(reader.number(), e.what());
        }
    }
    reader.expect_end();
    return g;
}

inline SpannerGraph read_graph(const std::string& path, const PointSet& ps) {
    auto in = detail::open_in(path);
    return read_graph(in, ps);
}

/// SVG 1.1 drawing: edges as <line>, points as <circle>. The view box is the
/// bounding box grown by 5% of its larger side on every edge; y points up.
inline void render_svg(std::ostream& out, const SpannerGraph& g) {
    const PointSet& ps = g.points();
    const BoundingBox& box = ps.bounding_box();
    double extent = std::max(box.width(), box.height());
    if (!(extent > 0.0)) extent = 1.0;
    const double margin = 0.05 * extent;
    const double vx = box.min_x - margin, vy = box.min_y - margin;
    const double vw = box.width() + 2.0 * margin, vh = box.height() + 2.0 * margin;
    auto sy = [&](double y) { return box.max_y + box.min_y - y; };
    const double stroke = extent / 1000.0;
    const double radius = extent / 400.0;

    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"800\" viewBox=\""
        << format_double(vx) << ' ' << format_double(vy) << ' ' << format_double(vw) << ' ' << format_double(vh)
        << "\" preserveAspectRatio=\"xMidYMid meet\">\n";
    out << "<g stroke=\"#1f4e79\" stroke-width=\"" << format_double(stroke) << "\" stroke-linecap=\"round\">\n";
    for (const auto& [u, v] : g.edges()) {
        out << "<line x1=\"" << format_double(ps[u].x) << "\" y1=\"" << format_double(sy(ps[u].y)) << "\" x2=\""
            << format_double(ps[v].x) << "\" y2=\"" << format_double(sy(ps[v].y)) << "\"/>\n";
    }
    out << "</g>\n<g fill=\"#c0392b\">\n";
    for (const Point& p : ps) {
        out << "<circle cx=\"" << format_double(p.x) << "\" cy=\"" << format_double(sy(p.y)) << "\" r=\""
            << format_double(radius) << "\"/>\n";
    }
    out << "</g>\n</svg>\n";
}

inline void render_svg(const std::string& path, const SpannerGraph& g) {
    auto out = detail::open_out(path);
    render_svg(out, g);
    detail::finish(out, path);
}

}  // namespace greedyspan

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace greedyspan {

using VertexId = std::uint32_t;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

/// Raised when a point set contains two points with identical coordinates.
class DuplicatePointError : public std::invalid_argument {
public:
    DuplicatePointError(VertexId first, VertexId second)
        : std::invalid_argument("duplicate point: ids " + std::to_string(first) + " and " +
                                std::to_string(second)),
          first_(first), second_(second) {}

    VertexId first() const noexcept { return first_; }
    VertexId second() const noexcept { return second_; }

private:
    VertexId first_;
    VertexId second_;
};

inline double distance(const Point& a, const Point& b) noexcept {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

/// Maps any angle to (-pi, pi].
inline double normalize_signed_angle(double a) noexcept {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (!(a > -two_pi && a < two_pi)) a = std::fmod(a, two_pi);
    if (a > std::numbers::pi) a -= two_pi;
    else if (a <= -std::numbers::pi) a += two_pi;
    return a;
}

/// Maps any angle to [0, 2pi).
inline double normalize_angle(double a) noexcept {
    constexpr double two_pi = 2.0 * std::numbers::pi;
    if (!(a > -two_pi && a < two_pi)) a = std::fmod(a, two_pi);
    if (a < 0.0) a += two_pi;
    if (a >= two_pi) a = 0.0;
    return a;
}

/// Direction of the ray from -> to, in [0, 2pi).
inline double direction(const Point& from, const Point& to) noexcept {
    return normalize_angle(std::atan2(to.y - from.y, to.x - from.x));
}

struct BoundingBox {
    double min_x = 0.0;
    double min_y = 0.0;
    double max_x = 0.0;
    double max_y = 0.0;

    double width() const noexcept { return max_x - min_x; }
    double height() const noexcept { return max_y - min_y; }
};

/// Immutable, indexed set of distinct planar points. Ids are 0..n-1 in input order.
class PointSet {
public:
    PointSet() = default;

    explicit PointSet(std::vector<Point> points) : points_(std::move(points)) {
        for (const Point& p : points_) {
            if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
                throw std::invalid_argument("point coordinates must be finite");
            }
        }
        if (points_.size() > std::size_t{0xfffffffe}) {
            throw std::length_error("point set too large");
        }
        std::vector<VertexId> order(points_.size());
        std::iota(order.begin(), order.end(), VertexId{0});
        std::sort(order.begin(), order.end(), [&](VertexId a, VertexId b) {
            const Point& pa = points_[a];
            const Point& pb = points_[b];
            if (pa.x != pb.x) return pa.x < pb.x;
            if (pa.y != pb.y) return pa.y < pb.y;
            return a < b;
        });
        for (std::size_t i = 1; i < order.size(); ++i) {
            if (points_[order[i - 1]] == points_[order[i]]) {
                throw DuplicatePointError(order[i - 1], order[i]);
            }
        }
        if (!points_.empty()) {
            box_ = {points_[0].x, points_[0].y, points_[0].x, points_[0].y};
            for (const Point& p : points_) {
                box_.min_x = std::min(box_.min_x, p.x);
                box_.min_y = std::min(box_.min_y, p.y);
                box_.max_x = std::max(box_.max_x, p.x);
                box_.max_y = std::max(box_.max_y, p.y);
            }
        }
    }

    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    const Point& operator[](VertexId id) const noexcept { return points_[id]; }
    const Point& at(VertexId id) const { return points_.at(id); }
    std::span<const Point> points() const noexcept { return points_; }
    const BoundingBox& bounding_box() const noexcept { return box_; }

    double distance(VertexId a, VertexId b) const noexcept {
        return greedyspan::distance(points_[a], points_[b]);
    }

    auto begin() const noexcept { return points_.begin(); }
    auto end() const noexcept { return points_.end(); }

private:
    std::vector<Point> points_;
    BoundingBox box_;
};

}  // namespace greedyspan

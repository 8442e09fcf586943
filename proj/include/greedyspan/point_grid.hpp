#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "greedyspan/geometry.hpp"

namespace greedyspan {

struct CellRect {
    double x0, y0, x1, y1;

    double min_distance(const Point& p) const noexcept {
        const double dx = std::max({x0 - p.x, 0.0, p.x - x1});
        const double dy = std::max({y0 - p.y, 0.0, p.y - y1});
        return std::sqrt(dx * dx + dy * dy);
    }

    double max_distance(const Point& p) const noexcept {
        const double dx = std::max(std::abs(p.x - x0), std::abs(p.x - x1));
        const double dy = std::max(std::abs(p.y - y0), std::abs(p.y - y1));
        return std::sqrt(dx * dx + dy * dy);
    }
};

/// Uniform bucket grid over the bounding box of a point set, roughly one
/// point per cell. Buckets are stored contiguously (CSR layout).
class PointGrid {
public:
    explicit PointGrid(const PointSet& ps) : points_(&ps) {
        const std::size_t n = ps.size();
        const BoundingBox& box = ps.bounding_box();
        origin_ = {box.min_x, box.min_y};
        side_count_ = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::sqrt(double(n)))));
        const double extent = std::max(box.width(), box.height());
        cell_side_ = extent > 0.0 ? extent / double(side_count_) : 1.0;

        cell_start_.assign(side_count_ * side_count_ + 1, 0);
        std::vector<std::size_t> cell_of(n);
        for (VertexId v = 0; v < n; ++v) {
            cell_of[v] = cell_index(column(ps[v].x), row(ps[v].y));
            ++cell_start_[cell_of[v] + 1];
        }
        for (std::size_t c = 1; c < cell_start_.size(); ++c) cell_start_[c] += cell_start_[c - 1];
        ids_.resize(n);
        std::vector<std::size_t> fill(cell_start_.begin(), cell_start_.end() - 1);
        for (VertexId v = 0; v < n; ++v) ids_[fill[cell_of[v]]++] = v;
    }

    std::size_t side_count() const noexcept { return side_count_; }
    double cell_side() const noexcept { return cell_side_; }

    std::size_t column(double x) const noexcept { return clamp_index((x - origin_.x) / cell_side_); }
    std::size_t row(double y) const noexcept { return clamp_index((y - origin_.y) / cell_side_); }

    std::span<const VertexId> cell(std::size_t col, std::size_t r) const noexcept {
        const std::size_t c = cell_index(col, r);
        return {ids_.data() + cell_start_[c], cell_start_[c + 1] - cell_start_[c]};
    }

    /// Cell bounds, padded by a hair so every point bucketed here lies inside
    /// despite rounding in the bucket computation.
    CellRect rect(std::size_t col, std::size_t r) const noexcept {
        const double pad = cell_side_ * 1e-9;
        const double x0 = origin_.x + double(col) * cell_side_;
        const double y0 = origin_.y + double(r) * cell_side_;
        return {x0 - pad, y0 - pad, x0 + cell_side_ + pad, y0 + cell_side_ + pad};
    }

    /// Calls fn(col, row) for every cell meeting the axis-aligned square of
    /// half-side `radius` around `center`.
    template <typename Fn>
    void for_each_cell_near(const Point& center, double radius, Fn&& fn) const {
        const std::size_t c0 = column(center.x - radius), c1 = column(center.x + radius);
        const std::size_t r0 = row(center.y - radius), r1 = row(center.y + radius);
        for (std::size_t r = r0; r <= r1; ++r) {
            for (std::size_t c = c0; c <= c1; ++c) fn(c, r);
        }
    }

    /// Ids q != p with |pq| <= radius (closed ball), ascending.
    std::vector<VertexId> neighbors(VertexId p, double radius) const {
        if (!(radius > 0.0)) throw std::invalid_argument("grid_neighbors: radius must be positive");
        const PointSet& ps = *points_;
        const Point& center = ps[p];
        std::vector<VertexId> out;
        for_each_cell_near(center, radius, [&](std::size_t c, std::size_t r) {
            if (rect(c, r).min_distance(center) > radius) return;
            for (VertexId q : cell(c, r)) {
                if (q != p && ps.distance(p, q) <= radius) out.push_back(q);
            }
        });
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    std::size_t cell_index(std::size_t col, std::size_t r) const noexcept { return r * side_count_ + col; }

    std::size_t clamp_index(double f) const noexcept {
        if (!(f > 0.0)) return 0;
        const double last = double(side_count_ - 1);
        return f >= last ? side_count_ - 1 : static_cast<std::size_t>(f);
    }

    const PointSet* points_;
    Point origin_;
    std::size_t side_count_ = 1;
    double cell_side_ = 1.0;
    std::vector<std::size_t> cell_start_;
    std::vector<VertexId> ids_;
};

inline std::vector<VertexId> grid_neighbors(const PointGrid& grid, VertexId p, double radius) {
    return grid.neighbors(p, radius);
}

}  // namespace greedyspan

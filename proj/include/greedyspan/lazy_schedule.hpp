#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <vector>

#include "greedyspan/cone.hpp"
#include "greedyspan/pair_schedule.hpp"
#include "greedyspan/point_grid.hpp"

namespace greedyspan {

struct LazyScheduleOptions {
    /// First scan radius, in grid cells (a cell holds about one point).
    double initial_radius_cells = 2.0;
    /// Factor applied to a point's scan radius each time it is exhausted.
    double growth = 2.0;
    /// Angular slack used when deciding that cones cover a cell or a region.
    double angular_margin = 1e-9;
};

struct LazyScheduleStats {
    std::size_t expansions = 0;
    std::size_t cells_scanned = 0;
    std::size_t cells_pruned_by_cones = 0;
    std::size_t pairs_pushed = 0;
    std::size_t pairs_skipped = 0;
    std::size_t points_retired = 0;
};

/// Delivers the pairs that are not covered by cone collections, in the same
/// (distance, first, second) order as the eager schedule, without sorting all
/// pairs.
///
/// Each point p owns the pairs (p, q) with q > p. It keeps a min-heap of the
/// owned pairs found so far inside its scan radius r_p, plus a sentinel keyed
/// at r_p. A main heap holds the top of every per-point heap. A sentinel
/// reaching the top of the main heap means every pair with a smaller key has
/// already been seen, so p grows r_p and scans the new annulus of grid cells,
/// skipping cells that lie inside p's cones. A point retires once no
/// uncovered direction from it reaches past r_p inside the bounding box.
class LazyPairScheduler {
public:
    explicit LazyPairScheduler(const PointSet& ps, LazyScheduleOptions options = {})
        : points_(&ps), grid_(ps), options_(options), radius_(ps.size(), 0.0), heaps_(ps.size()) {
        if (!(options_.initial_radius_cells > 0.0) || !(options_.growth > 1.0)) {
            throw std::invalid_argument("lazy scheduler: radius must be positive and growth above 1");
        }
        initial_radius_ = options_.initial_radius_cells * grid_.cell_side();
        for (VertexId p = 0; p + 1 < ps.size(); ++p) {
            heaps_[p].push_back(Entry::sentinel(0.0, p));
            main_.push(heaps_[p].front());
        }
    }

    /// Next uncovered pair, or nullopt when none remains. `cones` holds one
    /// collection per point, indexed by id.
    std::optional<PointPair> next(std::span<const ConeCollection> cones) {
        if (cones.size() != points_->size()) {
            throw std::invalid_argument("lazy scheduler: need one cone collection per point");
        }
        const PointSet& ps = *points_;
        while (!main_.empty()) {
            const Entry top = main_.top();
            main_.pop();
            const VertexId p = top.owner;
            auto& heap = heaps_[p];
            std::pop_heap(heap.begin(), heap.end(), std::greater<>{});
            heap.pop_back();
            if (top.is_sentinel()) {
                expand(p, cones);
                if (!heap.empty()) main_.push(heap.front());
                continue;
            }
            if (!heap.empty()) main_.push(heap.front());
            const VertexId q = top.other;
            if (collection_covers(cones[p], ps[p], ps[q]) || collection_covers(cones[q], ps[q], ps[p])) {
                ++stats_.pairs_skipped;
                continue;
            }
            return PointPair{top.dist, p, q};
        }
        return std::nullopt;
    }

    const LazyScheduleStats& stats() const noexcept { return stats_; }
    const PointGrid& grid() const noexcept { return grid_; }
    double initial_radius() const noexcept { return initial_radius_; }

private:
    static constexpr VertexId kNone = std::numeric_limits<VertexId>::max();

    struct Entry {
        double dist;
        VertexId owner;
        VertexId other;  // kNone for a sentinel

        static Entry sentinel(double r, VertexId p) { return {r, p, kNone}; }
        bool is_sentinel() const noexcept { return other == kNone; }

        // Real pairs before sentinels at equal distance: a sentinel at r_p
        // only guards pairs strictly farther than r_p.
        friend bool operator>(const Entry& a, const Entry& b) noexcept {
            if (a.dist != b.dist) return a.dist > b.dist;
            if (a.is_sentinel() != b.is_sentinel()) return a.is_sentinel();
            if (a.owner != b.owner) return a.owner > b.owner;
            return a.other > b.other;
        }
    };

    // Convex wedge (angle <= pi) at the scanning point, as boundary unit vectors.
    struct Wedge {
        double ax, ay, bx, by;

        bool contains(double x, double y) const noexcept {
            return ax * y - ay * x >= 0.0 && x * by - y * bx >= 0.0;
        }
    };

    static std::vector<Wedge> split_wedges(const std::vector<Arc>& arcs, double max_angle) {
        std::vector<Wedge> out;
        for (const Arc& arc : arcs) {
            const int pieces = std::max(1, static_cast<int>(std::ceil(arc.length() / max_angle)));
            const double step = arc.length() / pieces;
            for (int i = 0; i < pieces; ++i) {
                const double a = arc.start + step * i;
                const double b = i + 1 == pieces ? arc.end : a + step;
                out.push_back({std::cos(a), std::sin(a), std::cos(b), std::sin(b)});
            }
        }
        return out;
    }

    void expand(VertexId p, std::span<const ConeCollection> cones) {
        const PointSet& ps = *points_;
        const Point& origin = ps[p];
        const ConeCollection& own = cones[p];
        const double r_old = radius_[p];
        const double r_new = r_old > 0.0 ? r_old * options_.growth : initial_radius_;
        ++stats_.expansions;

        const std::vector<Arc> uncovered = own.uncovered_arcs(options_.angular_margin);
        if (uncovered.empty()) {
            ++stats_.points_retired;
            return;
        }
        const std::vector<Wedge> covered = split_wedges(own.covered_arcs(options_.angular_margin), std::numbers::pi);
        const std::vector<Wedge> open = split_wedges(uncovered, std::numbers::pi / 2.0);

        auto& heap = heaps_[p];
        auto visit = [&](std::size_t c, std::size_t r) {
            const auto ids = grid_.cell(c, r);
            if (ids.empty()) return;
            const CellRect rect = grid_.rect(c, r);
            const double near = rect.min_distance(origin);
            if (near > r_new || rect.max_distance(origin) <= r_old) return;
            ++stats_.cells_scanned;
            if (near > 0.0 && inside_any(origin, rect, covered)) {
                ++stats_.cells_pruned_by_cones;
                return;
            }
            for (VertexId q : ids) {
                if (q <= p) continue;
                const double d = ps.distance(p, q);
                if (d <= r_old || d > r_new) continue;
                if (collection_covers(own, origin, ps[q]) || collection_covers(cones[q], ps[q], origin)) continue;
                heap.push_back(Entry{d, p, q});
                std::push_heap(heap.begin(), heap.end(), std::greater<>{});
                ++stats_.pairs_pushed;
            }
        };
        scan_wedges(origin, r_new, open, visit);
        radius_[p] = r_new;

        const double reach = uncovered_reach(origin, uncovered);
        if (reach * (1.0 + 1e-9) > r_new) {
            heap.push_back(Entry::sentinel(r_new, p));
            std::push_heap(heap.begin(), heap.end(), std::greater<>{});
        } else {
            ++stats_.points_retired;
        }
    }

    // Visits, once each, every cell that meets one of the wedges truncated at
    // `radius`. A wedge of angle w <= pi/2 cut at radius R lies inside the
    // quadrilateral (apex, R a, R / cos(w/2) m, R b) with m its mid direction.
    template <typename Visit>
    void scan_wedges(const Point& origin, double radius, const std::vector<Wedge>& wedges, Visit&& visit) const {
        struct Quad {
            double x[4], y[4];
        };
        std::vector<Quad> quads;
        quads.reserve(wedges.size());
        for (const Wedge& w : wedges) {
            // |a + b| = 2 cos(w/2), so 2R (a + b) / |a + b|^2 has length R / cos(w/2).
            const double sx = w.ax + w.bx, sy = w.ay + w.by;
            const double scale = 2.0 * radius / (sx * sx + sy * sy);
            quads.push_back({{origin.x, origin.x + radius * w.ax, origin.x + scale * sx, origin.x + radius * w.bx},
                             {origin.y, origin.y + radius * w.ay, origin.y + scale * sy, origin.y + radius * w.by}});
        }
        const double pad = grid_.cell_side() * 1e-9;
        const std::size_t r0 = grid_.row(origin.y - radius), r1 = grid_.row(origin.y + radius);
        std::vector<std::pair<std::size_t, std::size_t>> spans;
        for (std::size_t r = r0; r <= r1; ++r) {
            const CellRect band = grid_.rect(0, r);
            const double y0 = band.y0 - pad, y1 = band.y1 + pad;
            spans.clear();
            for (const Quad& q : quads) {
                double lo = std::numeric_limits<double>::infinity(), hi = -lo;
                for (int i = 0; i < 4; ++i) {
                    const int j = (i + 1) % 4;
                    if (q.y[i] >= y0 && q.y[i] <= y1) {
                        lo = std::min(lo, q.x[i]);
                        hi = std::max(hi, q.x[i]);
                    }
                    for (double yc : {y0, y1}) {
                        if ((q.y[i] - yc) * (q.y[j] - yc) < 0.0) {
                            const double x = q.x[i] + (q.x[j] - q.x[i]) * (yc - q.y[i]) / (q.y[j] - q.y[i]);
                            lo = std::min(lo, x);
                            hi = std::max(hi, x);
                        }
                    }
                }
                lo = std::max(lo - pad, origin.x - radius);
                hi = std::min(hi + pad, origin.x + radius);
                if (lo > hi) continue;
                spans.emplace_back(grid_.column(lo), grid_.column(hi));
            }
            std::sort(spans.begin(), spans.end());
            std::size_t next_col = 0;
            for (auto [c0, c1] : spans) {
                for (std::size_t c = std::max(c0, next_col); c <= c1; ++c) visit(c, r);
                next_col = std::max(next_col, c1 + 1);
            }
        }
    }

    // Whether `rect` lies inside one of the convex covered wedges at origin.
    static bool inside_any(const Point& origin, const CellRect& rect, const std::vector<Wedge>& wedges) {
        const double xs[2] = {rect.x0 - origin.x, rect.x1 - origin.x};
        const double ys[2] = {rect.y0 - origin.y, rect.y1 - origin.y};
        return std::any_of(wedges.begin(), wedges.end(), [&](const Wedge& w) {
            for (double x : xs) {
                for (double y : ys) {
                    if (!w.contains(x, y)) return false;
                }
            }
            return true;
        });
    }

    // Largest distance from `origin` to a point of the bounding box whose
    // direction lies in one of `arcs`. The box cut by a wedge of angle at
    // most pi/2 is convex, so the maximum sits at one of its vertices.
    double uncovered_reach(const Point& origin, const std::vector<Arc>& arcs) const {
        const BoundingBox& box = points_->bounding_box();
        const Point corners[] = {{box.min_x, box.min_y}, {box.max_x, box.min_y},
                                 {box.max_x, box.max_y}, {box.min_x, box.max_y}};
        double reach = 0.0;
        for (const Arc& arc : arcs) {
            const int pieces = std::max(1, static_cast<int>(std::ceil(arc.length() / (std::numbers::pi / 2.0))));
            const double step = arc.length() / pieces;
            for (int i = 0; i < pieces; ++i) {
                const double a = arc.start + step * i;
                const double b = i + 1 == pieces ? arc.end : a + step;
                reach = std::max({reach, ray_exit(origin, a, box), ray_exit(origin, b, box)});
                for (const Point& c : corners) {
                    if (c == origin) continue;
                    if (normalize_angle(direction(origin, c) - a) <= b - a) {
                        reach = std::max(reach, distance(origin, c));
                    }
                }
            }
        }
        return reach;
    }

    static double ray_exit(const Point& o, double angle, const BoundingBox& box) noexcept {
        const double ux = std::cos(angle), uy = std::sin(angle);
        double t = std::numeric_limits<double>::infinity();
        if (ux > 0.0) t = std::min(t, (box.max_x - o.x) / ux);
        else if (ux < 0.0) t = std::min(t, (box.min_x - o.x) / ux);
        if (uy > 0.0) t = std::min(t, (box.max_y - o.y) / uy);
        else if (uy < 0.0) t = std::min(t, (box.min_y - o.y) / uy);
        return std::max(t, 0.0);
    }

    const PointSet* points_;
    PointGrid grid_;
    LazyScheduleOptions options_;
    double initial_radius_ = 0.0;
    std::vector<double> radius_;
    std::vector<std::vector<Entry>> heaps_;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> main_;
    LazyScheduleStats stats_;
};

inline std::optional<PointPair> lazy_next(LazyPairScheduler& state, std::span<const ConeCollection> cones) {
    return state.next(cones);
}

}  // namespace greedyspan

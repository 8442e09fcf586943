#pragma once

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "greedyspan/geometry.hpp"

namespace greedyspan {

/// Half-angle of the cone recorded after a query with path ratio `d` under
/// stretch `t`: pi/4 - asin(d / (sqrt(2) t)). Satisfies 1/(cos - sin) = t/d.
inline double cone_half_angle(double d, double t) {
    if (!(t > 1.0)) throw std::domain_error("cone_half_angle: stretch must exceed 1");
    if (!(d >= 1.0) || !(d <= t)) throw std::domain_error("cone_half_angle: ratio must lie in [1, t]");
    const double theta = std::numbers::pi / 4.0 - std::asin(d / (std::numbers::sqrt2 * t));
    return std::clamp(theta, 0.0, std::numbers::pi / 4.0);
}

/// Closed angular sector with apex at a point. `bisector` is in [0, 2pi).
struct Cone {
    VertexId apex = 0;
    double bisector = 0.0;
    double half_angle = 0.0;

    /// `angle` is the direction apex -> q, already computed by the caller.
    bool contains_direction(double angle) const noexcept {
        return std::abs(normalize_signed_angle(angle - bisector)) <= half_angle;
    }
};

inline bool cone_contains(const Cone& c, const Point& apex_pt, const Point& q) {
    if (q == apex_pt) throw std::invalid_argument("cone_contains: query point equals apex");
    return c.contains_direction(direction(apex_pt, q));
}

/// Arc [start, end] on the circle with start in [0, 2pi) and end >= start.
/// `end` may exceed 2pi when the arc wraps through angle 0.
struct Arc {
    double start = 0.0;
    double end = 0.0;

    double length() const noexcept { return end - start; }

    /// Whether the closed arc [lo, lo + span] lies within this arc.
    bool contains_arc(double lo, double span) const noexcept {
        constexpr double two_pi = 2.0 * std::numbers::pi;
        if (length() >= two_pi) return true;
        double shifted = start + normalize_angle(lo - start);
        return shifted + span <= end;
    }
};

/// Set of cones sharing one apex. Cones may overlap; none are merged.
class ConeCollection {
public:
    ConeCollection() = default;
    explicit ConeCollection(VertexId owner) : owner_(owner) {}

    VertexId owner() const noexcept { return owner_; }
    std::size_t size() const noexcept { return cones_.size(); }
    bool empty() const noexcept { return cones_.empty(); }
    const std::vector<Cone>& cones() const noexcept { return cones_; }

    void add(double bisector, double half_angle) {
        cones_.push_back(Cone{owner_, normalize_angle(bisector), half_angle});
    }

    bool covers_direction(double angle) const noexcept {
        return std::any_of(cones_.begin(), cones_.end(),
                           [angle](const Cone& c) { return c.contains_direction(angle); });
    }

    /// Union of the cones as disjoint arcs sorted by start. Each cone is
    /// shrunk by `margin` on both sides before merging, so a reported arc is
    /// covered with at least that much slack. A single arc of length >= 2pi
    /// means full cover.
    std::vector<Arc> covered_arcs(double margin = 0.0) const {
        constexpr double two_pi = 2.0 * std::numbers::pi;
        std::vector<Arc> raw;
        raw.reserve(cones_.size());
        for (const Cone& c : cones_) {
            double width = 2.0 * (c.half_angle - margin);
            if (width < 0.0) continue;
            double lo = normalize_angle(c.bisector - c.half_angle + margin);
            raw.push_back({lo, lo + width});
        }
        std::sort(raw.begin(), raw.end(), [](const Arc& a, const Arc& b) { return a.start < b.start; });
        std::vector<Arc> merged;
        for (const Arc& a : raw) {
            if (!merged.empty() && a.start <= merged.back().end) {
                merged.back().end = std::max(merged.back().end, a.end);
            } else {
                merged.push_back(a);
            }
        }
        // The last arc may wrap past 2pi into the first ones.
        while (merged.size() > 1 && merged.back().end >= merged.front().start + two_pi) {
            merged.back().end = std::max(merged.back().end, merged.front().end + two_pi);
            merged.erase(merged.begin());
        }
        if (merged.size() == 1 && merged.front().length() >= two_pi) {
            return {Arc{0.0, two_pi}};
        }
        return merged;
    }

    /// Complement of `covered_arcs(margin)`: open gaps widened by `margin`.
    std::vector<Arc> uncovered_arcs(double margin = 0.0) const {
        constexpr double two_pi = 2.0 * std::numbers::pi;
        std::vector<Arc> covered = covered_arcs(margin);
        if (covered.empty()) return {Arc{0.0, two_pi}};
        if (covered.size() == 1 && covered.front().length() >= two_pi) return {};
        std::vector<Arc> out;
        out.reserve(covered.size());
        for (std::size_t i = 0; i < covered.size(); ++i) {
            double gap_start = covered[i].end;
            double gap_end = (i + 1 < covered.size()) ? covered[i + 1].start : covered.front().start + two_pi;
            double base = normalize_angle(gap_start);
            out.push_back({base, base + (gap_end - gap_start)});
        }
        return out;
    }

private:
    VertexId owner_ = 0;
    std::vector<Cone> cones_;
};

inline bool collection_covers(const ConeCollection& c, const Point& apex_pt, const Point& q) {
    if (q == apex_pt) throw std::invalid_argument("collection_covers: query point equals apex");
    if (c.empty()) return false;
    return c.covers_direction(direction(apex_pt, q));
}

inline void add_cone(ConeCollection& c, const Point& apex_pt, const Point& toward, double half_angle) {
    if (toward == apex_pt) throw std::invalid_argument("add_cone: direction point equals apex");
    if (!(half_angle >= 0.0) || !(half_angle <= std::numbers::pi / 4.0)) {
        throw std::domain_error("add_cone: half-angle must lie in [0, pi/4]");
    }
    c.add(direction(apex_pt, toward), half_angle);
}

}  // namespace greedyspan

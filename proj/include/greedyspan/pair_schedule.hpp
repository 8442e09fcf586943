#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <span>
#include <vector>

#include "greedyspan/cone.hpp"
#include "greedyspan/geometry.hpp"

namespace greedyspan {

enum class SchedulerMode { Eager, Lazy };

/// Unordered point pair, stored with first < second. Pairs order by
/// (distance, first, second); this is the tie-break shared by every
/// construction.
struct PointPair {
    double dist = 0.0;
    VertexId first = 0;
    VertexId second = 0;

    friend auto operator<=>(const PointPair&, const PointPair&) = default;
};

inline PointPair ordered_pair(const PointSet& ps, VertexId a, VertexId b) {
    if (a > b) std::swap(a, b);
    return {ps.distance(a, b), a, b};
}

/// All n(n-1)/2 pairs, sorted.
inline std::vector<PointPair> eager_schedule(const PointSet& ps) {
    const auto n = static_cast<VertexId>(ps.size());
    std::vector<PointPair> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2);
    for (VertexId a = 0; a < n; ++a) {
        for (VertexId b = a + 1; b < n; ++b) pairs.push_back({ps.distance(a, b), a, b});
    }
    std::sort(pairs.begin(), pairs.end());
    return pairs;
}

/// Streams the eager order. Cone collections are ignored: every pair is
/// delivered and callers filter covered ones.
class EagerPairScheduler {
public:
    explicit EagerPairScheduler(const PointSet& ps) : pairs_(eager_schedule(ps)) {}

    std::optional<PointPair> next(std::span<const ConeCollection> = {}) {
        if (pos_ == pairs_.size()) return std::nullopt;
        return pairs_[pos_++];
    }

    std::size_t size() const noexcept { return pairs_.size(); }

private:
    std::vector<PointPair> pairs_;
    std::size_t pos_ = 0;
};

}  // namespace greedyspan

#pragma once

#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "greedyspan/geometry.hpp"

namespace greedyspan {

/// SplitMix64 over a counter: the i-th output is mix(seed + (i + 1) * gamma).
/// Doubles take the top 53 bits, so values are uniform on [0, 1).
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    double next_unit() noexcept { return double(next() >> 11) * 0x1.0p-53; }

private:
    std::uint64_t state_;
};

/// n points uniform in [0,1)^2. Coordinates are drawn x then y from one
/// SplitMix64 stream; an exact duplicate is discarded and redrawn.
inline PointSet generate_points(std::size_t n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("generate_points: n must be at least 1");
    SplitMix64 rng(seed);
    std::vector<Point> pts;
    pts.reserve(n);
    struct BitsHash {
        std::size_t operator()(const std::pair<double, double>& p) const noexcept {
            return std::hash<double>{}(p.first) * 31 + std::hash<double>{}(p.second);
        }
    };
    std::unordered_set<std::pair<double, double>, BitsHash> seen;
    seen.reserve(n * 2);
    while (pts.size() < n) {
        const double x = rng.next_unit();
        const double y = rng.next_unit();
        if (seen.insert({x, y}).second) pts.push_back({x, y});
    }
    return PointSet(std::move(pts));
}

}  // namespace greedyspan

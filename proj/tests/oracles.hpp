#pragma once

// Slow, obviously-correct reference computations used as test oracles.
// Nothing here calls into the library's algorithms; only its data types.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <numbers>
#include <numeric>
#include <random>
#include <tuple>
#include <vector>

#include "greedyspan/geometry.hpp"
#include "greedyspan/graph.hpp"

namespace oracle {

using greedyspan::Edge;
using greedyspan::Point;
using greedyspan::PointSet;
using greedyspan::SpannerGraph;
using greedyspan::VertexId;

inline constexpr double kInf = std::numeric_limits<double>::infinity();
using Matrix = std::vector<std::vector<double>>;

inline double dist(const Point& a, const Point& b) {
    const double dx = a.x - b.x, dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

inline PointSet random_points(std::mt19937_64& rng, std::size_t n, double lo = 0.0, double hi = 1.0) {
    std::uniform_real_distribution<double> u(lo, hi);
    std::vector<Point> pts;
    while (pts.size() < n) {
        Point p{u(rng), u(rng)};
        if (std::find(pts.begin(), pts.end(), p) == pts.end()) pts.push_back(p);
    }
    return PointSet(std::move(pts));
}

inline PointSet collinear3() { return PointSet({{0, 0}, {1, 0}, {2, 0}}); }
inline PointSet unit_square() { return PointSet({{0, 0}, {1, 0}, {1, 1}, {0, 1}}); }

/// Each pair becomes an edge with probability p.
inline void add_random_edges(SpannerGraph& g, std::mt19937_64& rng, double p) {
    std::bernoulli_distribution coin(p);
    for (VertexId u = 0; u < g.vertex_count(); ++u) {
        for (VertexId v = u + 1; v < g.vertex_count(); ++v) {
            if (coin(rng)) g.add_edge(u, v);
        }
    }
}

/// Floyd-Warshall over the graph's edge list with Euclidean lengths.
inline Matrix all_pairs(const SpannerGraph& g, const PointSet& ps) {
    const std::size_t n = ps.size();
    Matrix d(n, std::vector<double>(n, kInf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
    for (const auto& [u, v] : g.edges()) {
        d[u][v] = d[v][u] = std::min(d[u][v], dist(ps[u], ps[v]));
    }
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            if (d[i][k] == kInf) continue;
            for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
        }
    }
    return d;
}

inline double dilation(const SpannerGraph& g, const PointSet& ps) {
    const Matrix d = all_pairs(g, ps);
    double worst = 1.0;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        for (std::size_t j = i + 1; j < ps.size(); ++j) worst = std::max(worst, d[i][j] / dist(ps[i], ps[j]));
    }
    return worst;
}

/// Shortest s-t path length by enumerating every simple path.
inline double enumerate_paths(const SpannerGraph& g, const PointSet& ps, VertexId s, VertexId t) {
    std::vector<char> on_path(ps.size(), 0);
    double best = kInf;
    std::function<void(VertexId, double)> walk = [&](VertexId v, double len) {
        if (v == t) {
            best = std::min(best, len);
            return;
        }
        on_path[v] = 1;
        for (const auto& [a, b] : g.edges()) {
            VertexId w = a == v ? b : (b == v ? a : v);
            if (w != v && !on_path[w]) walk(w, len + dist(ps[v], ps[w]));
        }
        on_path[v] = 0;
    };
    walk(s, 0.0);
    return best;
}

/// Minimum spanning tree weight by trying every (n-1)-subset of edges.
inline double brute_mst(const PointSet& ps) {
    const std::size_t n = ps.size();
    if (n < 2) return 0.0;
    std::vector<std::pair<VertexId, VertexId>> all;
    for (VertexId u = 0; u < n; ++u) {
        for (VertexId v = u + 1; v < n; ++v) all.emplace_back(u, v);
    }
    std::vector<char> pick(all.size(), 0);
    std::fill(pick.end() - static_cast<std::ptrdiff_t>(n - 1), pick.end(), 1);
    double best = kInf;
    do {
        std::vector<std::size_t> parent(n);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
            return parent[x] == x ? x : parent[x] = find(parent[x]);
        };
        bool tree = true;
        double w = 0.0;
        for (std::size_t i = 0; i < all.size() && tree; ++i) {
            if (!pick[i]) continue;
            const auto a = find(all[i].first), b = find(all[i].second);
            if (a == b) tree = false;
            parent[a] = b;
            w += dist(ps[all[i].first], ps[all[i].second]);
        }
        if (tree) best = std::min(best, w);
    } while (std::next_permutation(pick.begin(), pick.end()));
    return best;
}

struct Pair {
    double d;
    VertexId a, b;
};

/// Every unordered pair, sorted by distance then lower id then higher id.
inline std::vector<Pair> sorted_pairs(const PointSet& ps) {
    std::vector<Pair> out;
    for (VertexId a = 0; a < ps.size(); ++a) {
        for (VertexId b = a + 1; b < ps.size(); ++b) out.push_back({dist(ps[a], ps[b]), a, b});
    }
    std::sort(out.begin(), out.end(),
              [](const Pair& x, const Pair& y) { return std::tie(x.d, x.a, x.b) < std::tie(y.d, y.a, y.b); });
    return out;
}

/// Path-greedy with a dense distance matrix updated on every insertion.
inline std::vector<Edge> path_greedy(const PointSet& ps, double t) {
    const std::size_t n = ps.size();
    Matrix d(n, std::vector<double>(n, kInf));
    for (std::size_t i = 0; i < n; ++i) d[i][i] = 0.0;
    std::vector<Edge> edges;
    for (const Pair& pr : sorted_pairs(ps)) {
        if (d[pr.a][pr.b] <= t * pr.d) continue;
        edges.emplace_back(pr.a, pr.b);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const double via = std::min(d[i][pr.a] + pr.d + d[pr.b][j], d[i][pr.b] + pr.d + d[pr.a][j]);
                d[i][j] = std::min(d[i][j], via);
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

/// Theta-graph edges: k equal sectors starting at angle 0, nearest bisector
/// projection per sector, lowest id on ties.
inline std::vector<Edge> theta_edges(const PointSet& ps, std::size_t k) {
    const double width = 2.0 * std::numbers::pi / double(k);
    std::vector<Edge> edges;
    for (VertexId p = 0; p < ps.size(); ++p) {
        for (std::size_t s = 0; s < k; ++s) {
            const double bis = (double(s) + 0.5) * width;
            VertexId best = p;
            double best_proj = kInf;
            for (VertexId q = 0; q < ps.size(); ++q) {
                if (q == p) continue;
                double a = std::atan2(ps[q].y - ps[p].y, ps[q].x - ps[p].x);
                if (a < 0) a += 2.0 * std::numbers::pi;
                if (a >= 2.0 * std::numbers::pi) a = 0.0;
                std::size_t sector = std::min(k - 1, static_cast<std::size_t>(a / width));
                if (sector != s) continue;
                const double proj = dist(ps[p], ps[q]) * std::cos(a - bis);
                if (proj < best_proj) {
                    best_proj = proj;
                    best = q;
                }
            }
            if (best != p) edges.emplace_back(std::min(p, best), std::max(p, best));
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

inline std::vector<VertexId> ball(const PointSet& ps, VertexId p, double r) {
    std::vector<VertexId> out;
    for (VertexId q = 0; q < ps.size(); ++q) {
        if (q != p && dist(ps[p], ps[q]) <= r) out.push_back(q);
    }
    return out;
}

/// Signed angle from a to b wrapped to (-pi, pi].
inline double angle_between(double a, double b) {
    double d = std::remainder(b - a, 2.0 * std::numbers::pi);
    if (d <= -std::numbers::pi) d += 2.0 * std::numbers::pi;
    return d;
}

}  // namespace oracle

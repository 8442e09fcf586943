#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <vector>

#include "greedyspan/cone.hpp"
#include "greedyspan/graph.hpp"
#include "greedyspan/pair_schedule.hpp"
#include "greedyspan/point_grid.hpp"
#include "greedyspan/run_report.hpp"
#include "greedyspan/shortest_path.hpp"

namespace greedyspan {

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

inline SpannerResult empty_result(const PointSet& ps) {
    SpannerResult out{SpannerGraph(ps), {}, {}};
    out.counters.queries_per_point.assign(ps.size(), 0);
    return out;
}

}  // namespace detail

struct PathGreedyOptions {
    /// Run an unbounded Dijkstra per pair instead of the search bounded at t.
    /// The accept/reject decision is the same; this exists for auditing.
    bool full_dijkstra = false;
};

/// Classical greedy spanner: every pair in sorted order gets a shortest-path
/// query, and the edge is added when no path of length <= t|pq| exists.
inline SpannerResult path_greedy(const PointSet& ps, double t, PathGreedyOptions options = {}) {
    if (!(t > 1.0)) throw std::domain_error("path_greedy: t must exceed 1");
    const auto start = std::chrono::steady_clock::now();
    SpannerResult out = detail::empty_result(ps);
    DijkstraWorkspace search(ps.size());
    for (const PointPair& pair : eager_schedule(ps)) {
        const VertexId p = pair.first, q = pair.second;
        ++out.counters.pairs_considered;
        ++out.counters.sp_queries;
        ++out.counters.queries_per_point[p];
        ++out.counters.queries_per_point[q];
        bool add = false;
        if (options.full_dijkstra) {
            add = search.all_distances(out.graph, p)[q] > t * pair.dist;
        } else {
            const auto res = search.bounded_query(out.graph, p, q, t);
            out.counters.visited_total += res.visited;
            add = res.exceeded();
        }
        if (add) out.graph.add_edge(p, q);
    }
    out.counters.wall_seconds = detail::seconds_since(start);
    return out;
}

/// Number of fixed cones the theta-graph uses to reach stretch t: the cone
/// angle is the largest theta with 1 / (cos theta - sin theta) <= t.
inline std::size_t theta_cone_count(double t) {
    if (!(t > 1.0)) throw std::domain_error("theta_graph: t must exceed 1");
    const double angle = std::numbers::pi / 4.0 - std::asin(1.0 / (std::numbers::sqrt2 * t));
    if (!(angle > 0.0)) throw std::domain_error("theta_graph: t too close to 1");
    return static_cast<std::size_t>(std::ceil(2.0 * std::numbers::pi / angle));
}

namespace detail {

/// Directed theta-graph selections (p, chosen) deduplicated as undirected
/// edges, sorted.
inline std::vector<Edge> theta_edges(const PointSet& ps, std::size_t cones) {
    const auto n = static_cast<VertexId>(ps.size());
    const double width = 2.0 * std::numbers::pi / double(cones);
    constexpr VertexId none = std::numeric_limits<VertexId>::max();
    std::vector<VertexId> best(cones);
    std::vector<double> best_proj(cones);
    std::vector<Edge> edges;
    for (VertexId p = 0; p < n; ++p) {
        std::fill(best.begin(), best.end(), none);
        std::fill(best_proj.begin(), best_proj.end(), std::numeric_limits<double>::infinity());
        for (VertexId q = 0; q < n; ++q) {
            if (q == p) continue;
            const double dir = direction(ps[p], ps[q]);
            const std::size_t sector = std::min(cones - 1, static_cast<std::size_t>(dir / width));
            const double bisector = (double(sector) + 0.5) * width;
            const double proj = ps.distance(p, q) * std::cos(dir - bisector);
            if (proj < best_proj[sector]) {  // strict: earlier id wins ties
                best_proj[sector] = proj;
                best[sector] = q;
            }
        }
        for (VertexId q : best) {
            if (q != none) edges.emplace_back(std::min(p, q), std::max(p, q));
        }
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    return edges;
}

}  // namespace detail

/// Theta-graph: in each of k fixed cones around every point, connect to the
/// point whose projection on the cone bisector is smallest.
inline SpannerResult theta_graph(const PointSet& ps, double t) {
    const std::size_t k = theta_cone_count(t);
    const auto start = std::chrono::steady_clock::now();
    SpannerResult out = detail::empty_result(ps);
    for (const auto& [u, v] : detail::theta_edges(ps, k)) out.graph.add_edge(u, v);
    out.counters.wall_seconds = detail::seconds_since(start);
    return out;
}

/// Builds a theta-graph t'-spanner and prunes it with the greedy rule at
/// stretch t/t', considering only theta-graph edges in sorted order.
inline SpannerResult greedy_on_theta(const PointSet& ps, double t, double t_prime) {
    if (!(t_prime > 1.0) || !(t_prime < t)) throw std::domain_error("greedy_on_theta: need 1 < t' < t");
    const std::size_t k = theta_cone_count(t_prime);
    const auto start = std::chrono::steady_clock::now();
    SpannerResult out = detail::empty_result(ps);

    std::vector<PointPair> candidates;
    for (const auto& [u, v] : detail::theta_edges(ps, k)) candidates.push_back(ordered_pair(ps, u, v));
    std::sort(candidates.begin(), candidates.end());

    const double bound = t / t_prime;
    DijkstraWorkspace search(ps.size());
    for (const PointPair& pair : candidates) {
        ++out.counters.pairs_considered;
        ++out.counters.sp_queries;
        ++out.counters.queries_per_point[pair.first];
        ++out.counters.queries_per_point[pair.second];
        const auto res = search.bounded_query(out.graph, pair.first, pair.second, bound);
        out.counters.visited_total += res.visited;
        if (res.exceeded()) out.graph.add_edge(pair.first, pair.second);
    }
    out.counters.wall_seconds = detail::seconds_since(start);
    return out;
}

struct GapGreedyParams {
    double t = 1.5;
    /// Gap factor w >= 0. Zero reduces the gap test to shared endpoints.
    double w = 0.0;

    /// Largest angle theta with 1 / (cos theta - sin theta - 2w) <= t.
    double angle() const {
        if (!(t > 1.0)) throw std::domain_error("gap_greedy: t must exceed 1");
        if (!(w >= 0.0)) throw std::domain_error("gap_greedy: w must be non-negative");
        const double c = (1.0 / t + 2.0 * w) / std::numbers::sqrt2;
        if (!(c < 1.0 / std::numbers::sqrt2)) throw std::domain_error("gap_greedy: w too large for t");
        return std::acos(c) - std::numbers::pi / 4.0;
    }
};

/// Gap-greedy: pairs in sorted order; p->q is rejected when some kept edge,
/// in either orientation r->s, points within the gap angle of p->q and
/// starts within w|pq| of p or ends within w|pq| of q.
inline SpannerResult gap_greedy(const PointSet& ps, GapGreedyParams params) {
    const double theta = params.angle();
    const auto start = std::chrono::steady_clock::now();
    SpannerResult out = detail::empty_result(ps);
    const auto n = ps.size();

    // out_dirs[v][i] is the direction of v -> neighbors(v)[i].
    std::vector<std::vector<double>> out_dirs(n);
    std::optional<PointGrid> grid;
    if (params.w > 0.0) grid.emplace(ps);

    auto aligned = [theta](double a, double b) { return std::abs(normalize_signed_angle(a - b)) <= theta; };
    // Edges leaving r, compared as r -> s.
    auto leaves_near = [&](VertexId r, double dir) {
        return std::any_of(out_dirs[r].begin(), out_dirs[r].end(), [&](double e) { return aligned(e, dir); });
    };
    // Edges entering s, compared as r -> s.
    auto enters_near = [&](VertexId s, double dir) {
        return std::any_of(out_dirs[s].begin(), out_dirs[s].end(),
                           [&](double e) { return aligned(e + std::numbers::pi, dir); });
    };

    for (const PointPair& pair : eager_schedule(ps)) {
        const VertexId p = pair.first, q = pair.second;
        ++out.counters.pairs_considered;
        const double dir = direction(ps[p], ps[q]);
        bool blocked = leaves_near(p, dir) || enters_near(q, dir);
        if (!blocked && grid) {
            const double gap = params.w * pair.dist;
            if (gap > 0.0) {
                for (VertexId r : grid->neighbors(p, gap)) {
                    if (leaves_near(r, dir)) { blocked = true; break; }
                }
                if (!blocked) {
                    for (VertexId s : grid->neighbors(q, gap)) {
                        if (enters_near(s, dir)) { blocked = true; break; }
                    }
                }
            }
        }
        if (blocked) {
            ++out.counters.pairs_skipped;
            continue;
        }
        out.graph.add_edge(p, q);
        out_dirs[p].push_back(dir);
        out_dirs[q].push_back(normalize_angle(dir + std::numbers::pi));
    }
    out.counters.wall_seconds = detail::seconds_since(start);
    return out;
}

}  // namespace greedyspan

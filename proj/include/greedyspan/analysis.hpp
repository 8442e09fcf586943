#pragma once

#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "greedyspan/graph.hpp"
#include "greedyspan/mst.hpp"
#include "greedyspan/run_report.hpp"
#include "greedyspan/shortest_path.hpp"

namespace greedyspan {

inline constexpr double kDilationTolerance = 1e-9;

struct DilationReport {
    double max_dilation = 1.0;  // +infinity when the graph is disconnected
    VertexId witness_first = 0;
    VertexId witness_second = 0;

    bool connected() const noexcept { return max_dilation < kUnreachable; }
};

/// Exact dilation: Dijkstra from every vertex, maximum of graph distance over
/// Euclidean distance across all unordered pairs. The first pair (in id
/// order) attaining the maximum is the witness.
inline DilationReport measure_dilation(const SpannerGraph& g, const PointSet& ps) {
    if (ps.size() < 2) throw std::invalid_argument("measure_dilation: need at least two points");
    if (g.vertex_count() != ps.size()) throw std::invalid_argument("measure_dilation: size mismatch");
    DilationReport report{1.0, 0, 1};
    bool first = true;
    DijkstraWorkspace search(ps.size());
    for (VertexId s = 0; s + 1 < ps.size(); ++s) {
        const std::vector<double> dist = search.all_distances(g, s);
        for (VertexId v = s + 1; v < ps.size(); ++v) {
            const double ratio = dist[v] == kUnreachable ? kUnreachable : dist[v] / ps.distance(s, v);
            if (first || ratio > report.max_dilation) {
                report = {ratio, s, v};
                first = false;
            }
        }
    }
    return report;
}

struct Certification {
    bool is_spanner = false;
    DilationReport dilation;
};

inline Certification certify_spanner(const SpannerGraph& g, const PointSet& ps, double t) {
    const DilationReport d = measure_dilation(g, ps);
    return {d.max_dilation <= t + kDilationTolerance, d};
}

inline bool graphs_equal(const SpannerGraph& a, const SpannerGraph& b) {
    if (a.vertex_count() != b.vertex_count()) throw std::invalid_argument("graphs_equal: vertex counts differ");
    return a.edge_count() == b.edge_count() && a.edges() == b.edges();
}

inline std::map<std::uint32_t, std::size_t> query_histogram(const std::vector<std::uint32_t>& per_point) {
    std::map<std::uint32_t, std::size_t> h;
    for (std::uint32_t c : per_point) ++h[c];
    return h;
}

/// Fills the quality metrics for a finished construction. Pass `mst_weight`
/// when already known to skip the O(n^2) tree computation.
inline RunReport compute_report(const SpannerGraph& g, const PointSet& ps, const RunCounters& counters,
                                std::optional<double> mst_weight = std::nullopt) {
    RunReport r;
    r.edges = g.edge_count();
    r.total_weight = g.total_weight();
    const double mst = mst_weight ? *mst_weight : euclidean_mst_weight(ps);
    r.weight_over_mst = mst > 0.0 ? r.total_weight / mst : 0.0;
    r.max_degree = g.max_degree();
    r.sp_queries = counters.sp_queries;
    r.visited_total = counters.visited_total;
    r.query_histogram = query_histogram(counters.queries_per_point);
    r.wall_seconds = counters.wall_seconds;
    return r;
}

}  // namespace greedyspan

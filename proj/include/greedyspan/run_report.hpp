#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "greedyspan/cone.hpp"
#include "greedyspan/graph.hpp"

namespace greedyspan {

/// Instrumentation gathered while a construction runs.
struct RunCounters {
    std::size_t sp_queries = 0;     // bounded shortest-path searches issued
    std::size_t visited_total = 0;  // vertices settled across those searches
    std::size_t pairs_considered = 0;
    std::size_t pairs_skipped = 0;  // pairs dismissed by cone coverage
    std::vector<std::uint32_t> queries_per_point;
    double wall_seconds = 0.0;
};

struct SpannerResult {
    SpannerGraph graph;
    RunCounters counters;
    std::vector<ConeCollection> cones;  // filled by delta_greedy only
};

struct RunReport {
    std::size_t edges = 0;
    double total_weight = 0.0;
    double weight_over_mst = 0.0;
    std::size_t max_degree = 0;
    std::size_t sp_queries = 0;
    std::size_t visited_total = 0;
    /// queries-per-point value -> number of points with that many queries
    std::map<std::uint32_t, std::size_t> query_histogram;
    double wall_seconds = 0.0;
};

}  // namespace greedyspan

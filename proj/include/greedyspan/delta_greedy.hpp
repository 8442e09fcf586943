#pragma once

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <vector>

#include "greedyspan/cone.hpp"
#include "greedyspan/graph.hpp"
#include "greedyspan/lazy_schedule.hpp"
#include "greedyspan/pair_schedule.hpp"
#include "greedyspan/run_report.hpp"
#include "greedyspan/shortest_path.hpp"

namespace greedyspan {

struct DeltaGreedyParams {
    double t = 1.5;
    double delta = 1.5;
    SchedulerMode scheduler = SchedulerMode::Eager;
    LazyScheduleOptions lazy = {};

    void validate() const {
        if (!(t > 1.0)) throw std::domain_error("delta_greedy: t must exceed 1");
        if (!(delta > 1.0) || !(delta <= t)) throw std::domain_error("delta_greedy: need 1 < delta <= t");
    }
};

/// Smallest cone half-angle delta-greedy can record for (t, delta).
inline double min_cone_half_angle(double t, double delta) { return cone_half_angle(delta, t); }

namespace detail {

template <typename Scheduler>
void run_delta_greedy(const PointSet& ps, const DeltaGreedyParams& params, Scheduler& schedule,
                      SpannerResult& out) {
    auto& graph = out.graph;
    auto& counters = out.counters;
    auto& cones = out.cones;
    DijkstraWorkspace search(ps.size());

    while (auto pair = schedule.next(cones)) {
        const VertexId p = pair->first, q = pair->second;
        ++counters.pairs_considered;
        if (collection_covers(cones[p], ps[p], ps[q]) || collection_covers(cones[q], ps[q], ps[p])) {
            ++counters.pairs_skipped;
            continue;
        }
        const BoundedQueryResult res = search.bounded_query(graph, p, q, params.delta);
        ++counters.sp_queries;
        ++counters.queries_per_point[p];
        ++counters.queries_per_point[q];
        counters.visited_total += res.visited;

        double d = 1.0;
        if (res.exceeded()) {
            graph.add_edge(p, q);
        } else {
            d = std::clamp(res.ratio, 1.0, params.delta);
        }
        const double theta = cone_half_angle(d, params.t);
        add_cone(cones[p], ps[p], ps[q], theta);
        add_cone(cones[q], ps[q], ps[p], theta);
    }
}

}  // namespace detail

/// Delta-greedy spanner. Pairs are taken in (distance, first, second) order;
/// a pair already inside a cone of either endpoint is skipped, otherwise a
/// search bounded at delta decides whether to add the edge, and both
/// endpoints receive a cone whose width depends on the measured ratio.
inline SpannerResult delta_greedy(const PointSet& ps, const DeltaGreedyParams& params) {
    params.validate();
    const auto start = std::chrono::steady_clock::now();
    SpannerResult out{SpannerGraph(ps), {}, {}};
    out.counters.queries_per_point.assign(ps.size(), 0);
    out.cones.reserve(ps.size());
    for (VertexId v = 0; v < ps.size(); ++v) out.cones.emplace_back(v);

    if (params.scheduler == SchedulerMode::Eager) {
        EagerPairScheduler schedule(ps);
        detail::run_delta_greedy(ps, params, schedule, out);
    } else {
        LazyPairScheduler schedule(ps, params.lazy);
        detail::run_delta_greedy(ps, params, schedule, out);
    }
    out.counters.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
}

}  // namespace greedyspan

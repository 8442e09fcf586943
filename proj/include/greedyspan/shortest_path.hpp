#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "greedyspan/graph.hpp"

namespace greedyspan {

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

struct BoundedQueryResult {
    enum class Outcome { Ratio, Exceeded };

    Outcome outcome = Outcome::Exceeded;
    double ratio = kUnreachable;  // path length / |pq|; meaningful only for Ratio
    std::size_t visited = 0;      // settled vertices
    VertexId source = 0;
    VertexId target = 0;

    bool exceeded() const noexcept { return outcome == Outcome::Exceeded; }
};

/// Reusable Dijkstra state. Distance labels are invalidated by bumping a
/// stamp, so each query costs only what it touches.
class DijkstraWorkspace {
public:
    explicit DijkstraWorkspace(std::size_t n = 0) { resize(n); }

    void resize(std::size_t n) {
        if (labels_.size() != n) {
            labels_.assign(n, Label{});
            current_ = 0;
        }
    }

    /// Exact shortest path source -> target, abandoned once the smallest
    /// queued key exceeds bound * |source target|. A path of length exactly
    /// the limit is still found.
    BoundedQueryResult bounded_query(const SpannerGraph& g, VertexId source, VertexId target, double bound) {
        if (source == target) throw std::invalid_argument("bounded_dijkstra: source equals target");
        resize(g.vertex_count());
        next_stamp();

        BoundedQueryResult result;
        result.source = source;
        result.target = target;
        const double euclid = g.points().distance(source, target);
        const double limit = bound * euclid;

        heap_.clear();
        label(source).dist = 0.0;
        push(0.0, source);
        while (!heap_.empty()) {
            auto [d, v] = pop();
            if (d > limit) break;
            Label& lv = labels_[v];
            if (lv.settled == current_) continue;
            lv.settled = current_;
            ++result.visited;
            if (v == target) {
                result.outcome = BoundedQueryResult::Outcome::Ratio;
                result.ratio = d / euclid;
                return result;
            }
            for (const Neighbor& nb : g.neighbors(v)) {
                const double nd = d + nb.length;
                if (nd > limit) continue;
                Label& ln = label(nb.id);
                if (nd < ln.dist) {
                    ln.dist = nd;
                    push(nd, nb.id);
                }
            }
        }
        result.outcome = BoundedQueryResult::Outcome::Exceeded;
        return result;
    }

    /// Single-source distances to every vertex; unreachable is +infinity.
    std::vector<double> all_distances(const SpannerGraph& g, VertexId source) {
        resize(g.vertex_count());
        next_stamp();
        heap_.clear();
        label(source).dist = 0.0;
        push(0.0, source);
        while (!heap_.empty()) {
            auto [d, v] = pop();
            Label& lv = labels_[v];
            if (lv.settled == current_) continue;
            lv.settled = current_;
            for (const Neighbor& nb : g.neighbors(v)) {
                const double nd = d + nb.length;
                Label& ln = label(nb.id);
                if (nd < ln.dist) {
                    ln.dist = nd;
                    push(nd, nb.id);
                }
            }
        }
        std::vector<double> out(g.vertex_count(), kUnreachable);
        for (std::size_t v = 0; v < out.size(); ++v) {
            if (labels_[v].stamp == current_) out[v] = labels_[v].dist;
        }
        return out;
    }

private:
    // (distance, vertex) ordered lexicographically so ties settle by id.
    using Entry = std::pair<double, VertexId>;

    struct Label {
        double dist = kUnreachable;
        std::uint32_t stamp = 0;    // dist is valid for this query iff stamp == current_
        std::uint32_t settled = 0;  // settled in this query iff settled == current_
    };

    void next_stamp() {
        if (++current_ == 0) {
            std::fill(labels_.begin(), labels_.end(), Label{});
            current_ = 1;
        }
    }

    Label& label(VertexId v) {
        Label& l = labels_[v];
        if (l.stamp != current_) {
            l.stamp = current_;
            l.dist = kUnreachable;
        }
        return l;
    }

    void push(double d, VertexId v) {
        heap_.emplace_back(d, v);
        std::push_heap(heap_.begin(), heap_.end(), std::greater<>{});
    }

    Entry pop() {
        std::pop_heap(heap_.begin(), heap_.end(), std::greater<>{});
        Entry e = heap_.back();
        heap_.pop_back();
        return e;
    }

    std::vector<Label> labels_;
    std::vector<Entry> heap_;
    std::uint32_t current_ = 0;
};

inline BoundedQueryResult bounded_dijkstra(const SpannerGraph& g, VertexId source, VertexId target, double bound) {
    DijkstraWorkspace ws(g.vertex_count());
    return ws.bounded_query(g, source, target, bound);
}

inline std::vector<double> full_dijkstra(const SpannerGraph& g, VertexId source) {
    DijkstraWorkspace ws(g.vertex_count());
    return ws.all_distances(g, source);
}

}  // namespace greedyspan

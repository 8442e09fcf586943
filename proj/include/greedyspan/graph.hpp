#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "greedyspan/geometry.hpp"

namespace greedyspan {

struct Neighbor {
    VertexId id = 0;
    double length = 0.0;
};

using Edge = std::pair<VertexId, VertexId>;

/// Undirected graph over a PointSet whose edge weights are Euclidean lengths.
/// Holds a non-owning pointer to the points; the PointSet must outlive it.
class SpannerGraph {
public:
    explicit SpannerGraph(const PointSet& points) : points_(&points), adjacency_(points.size()) {}

    std::size_t vertex_count() const noexcept { return adjacency_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }
    double total_weight() const noexcept { return total_weight_; }
    const PointSet& points() const noexcept { return *points_; }

    const std::vector<Neighbor>& neighbors(VertexId v) const noexcept { return adjacency_[v]; }
    std::size_t degree(VertexId v) const noexcept { return adjacency_[v].size(); }

    std::size_t max_degree() const noexcept {
        std::size_t best = 0;
        for (const auto& adj : adjacency_) best = std::max(best, adj.size());
        return best;
    }

    bool has_edge(VertexId u, VertexId v) const noexcept {
        const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
        VertexId other = adjacency_[u].size() <= adjacency_[v].size() ? v : u;
        return std::any_of(a.begin(), a.end(), [other](const Neighbor& n) { return n.id == other; });
    }

    void add_edge(VertexId u, VertexId v) {
        if (u >= vertex_count() || v >= vertex_count()) {
            throw std::out_of_range("add_edge: vertex id out of range");
        }
        if (u == v) throw std::invalid_argument("add_edge: self-loop on vertex " + std::to_string(u));
        if (has_edge(u, v)) {
            throw std::invalid_argument("add_edge: duplicate edge (" + std::to_string(u) + ", " +
                                        std::to_string(v) + ")");
        }
        const double len = points_->distance(u, v);
        adjacency_[u].push_back({v, len});
        adjacency_[v].push_back({u, len});
        ++edge_count_;
        total_weight_ += len;
    }

    /// Edges as (min, max) id pairs, lexicographically sorted.
    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        out.reserve(edge_count_);
        for (VertexId u = 0; u < vertex_count(); ++u) {
            for (const Neighbor& n : adjacency_[u]) {
                if (u < n.id) out.emplace_back(u, n.id);
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

private:
    const PointSet* points_;
    std::vector<std::vector<Neighbor>> adjacency_;
    std::size_t edge_count_ = 0;
    double total_weight_ = 0.0;
};

}  // namespace greedyspan

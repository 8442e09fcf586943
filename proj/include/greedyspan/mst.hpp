#pragma once

#include <limits>
#include <vector>

#include "greedyspan/geometry.hpp"

namespace greedyspan {

/// Weight of the Euclidean minimum spanning tree by dense Prim, O(n^2) time
/// and O(n) memory.
inline double euclidean_mst_weight(const PointSet& ps) {
    const std::size_t n = ps.size();
    if (n <= 1) return 0.0;
    std::vector<double> best(n, std::numeric_limits<double>::infinity());
    std::vector<char> in_tree(n, 0);
    double total = 0.0;
    std::size_t current = 0;
    in_tree[0] = 1;
    for (std::size_t added = 1; added < n; ++added) {
        const Point& c = ps[static_cast<VertexId>(current)];
        std::size_t next = n;
        double next_d = std::numeric_limits<double>::infinity();
        for (std::size_t v = 0; v < n; ++v) {
            if (in_tree[v]) continue;
            const double d = distance(c, ps[static_cast<VertexId>(v)]);
            if (d < best[v]) best[v] = d;
            if (best[v] < next_d) {
                next_d = best[v];
                next = v;
            }
        }
        in_tree[next] = 1;
        total += next_d;
        current = next;
    }
    return total;
}

}  // namespace greedyspan

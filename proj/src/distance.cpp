#include "mldim/distance.hpp"

#include <algorithm>
#include <queue>

namespace mldim {

DistanceMatrix::DistanceMatrix(const Graph& g)
    : n_(g.node_count()),
      rows_(static_cast<std::size_t>(n_) * n_, kUnreachable),
      ecc_(n_, kUnreachable),
      connected_(true) {
    std::vector<int> queue(n_);
    for (int s = 0; s < n_; ++s) {
        int* dist = rows_.data() + static_cast<std::size_t>(s) * n_;
        dist[s] = 0;
        int head = 0, tail = 0;
        queue[tail++] = s;
        int reached = 1;
        int far = 0;
        while (head < tail) {
            const int v = queue[head++];
            for (int w : g.neighbors(v)) {
                if (dist[w] == kUnreachable) {
                    dist[w] = dist[v] + 1;
                    far = dist[w];
                    ++reached;
                    queue[tail++] = w;
                }
            }
        }
        if (reached < n_) connected_ = false;
        ecc_[s] = reached > 1 ? far : kUnreachable;
    }
}

NetworkStats network_stats(const Graph& g, const DistanceMatrix& d) {
    NetworkStats s;
    s.node_count = g.node_count();
    s.edge_count = g.edge_count();
    s.mean_degree = s.node_count > 0 ? 2.0 * static_cast<double>(s.edge_count) / s.node_count : 0.0;
    for (int v = 0; v < g.node_count(); ++v) s.max_degree = std::max(s.max_degree, g.degree(v));

    std::int64_t sum = 0, pairs = 0;
    for (int i = 0; i < d.n(); ++i) {
        for (int dist : d.row(i)) {
            if (dist > 0) {
                sum += dist;
                ++pairs;
            }
        }
        s.max_distance = std::max(s.max_distance, d.eccentricity(i));
    }
    s.mean_distance = pairs > 0 ? static_cast<double>(sum) / static_cast<double>(pairs) : 0.0;
    s.disconnected = !d.fully_connected();
    return s;
}

}  // namespace mldim

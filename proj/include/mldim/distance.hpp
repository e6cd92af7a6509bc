#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mldim/graph.hpp"

namespace mldim {

/// All-pairs hop distances from per-source BFS.
///
/// Unreachable pairs hold kUnreachable, a sentinel that is never a large
/// finite value, so downstream sums cannot silently absorb it.
class DistanceMatrix {
public:
    static constexpr int kUnreachable = -1;

    explicit DistanceMatrix(const Graph& g);

    int n() const { return n_; }
    int at(int i, int j) const { return rows_[static_cast<std::size_t>(i) * n_ + j]; }
    std::span<const int> row(int i) const {
        return {rows_.data() + static_cast<std::size_t>(i) * n_, static_cast<std::size_t>(n_)};
    }

    /// Max distance to any reachable node; kUnreachable for isolated nodes.
    int eccentricity(int i) const { return ecc_[i]; }
    bool fully_connected() const { return connected_; }

private:
    int n_;
    std::vector<int> rows_;
    std::vector<int> ecc_;
    bool connected_;
};

struct NetworkStats {
    int node_count = 0;
    std::int64_t edge_count = 0;
    double mean_degree = 0.0;
    int max_degree = 0;
    double mean_distance = 0.0;  // over ordered reachable pairs i != j
    int max_distance = 0;
    bool disconnected = false;
};

NetworkStats network_stats(const Graph& g, const DistanceMatrix& d);

}  // namespace mldim

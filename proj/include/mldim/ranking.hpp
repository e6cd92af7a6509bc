#pragma once

#include <utility>
#include <vector>

#include "mldim/graph.hpp"
#include "mldim/score.hpp"

namespace mldim {

/// Ranking of all nodes under one measure. Exactly equal scores share a dense
/// rank (1, 2, 3, ... over distinct score classes); flagged nodes come after
/// every scored node. Order inside a rank and among flagged nodes is by
/// descending label, matching a reversed stable ascending sort.
struct RankTable {
    std::string measure_id;
    std::vector<int> order;        // node indices, best first
    std::vector<int> rank_of;      // per node, 1-based dense rank
    std::vector<int> rank_counts;  // per rank (index rank-1), node count
    bool lower_is_better = false;

    int num_ranks() const { return static_cast<int>(rank_counts.size()); }
};

RankTable rank(const ScoreVector& scores, const Graph& g);

std::vector<Label> top_labels(const RankTable& table, const Graph& g, int k);

/// gamma = (number of distinct score classes) / node_count. Two scores belong
/// to the same class when |a-b| <= epsilon * max(1, |a|, |b|), chained over
/// the sorted sequence. Flagged nodes contribute no class.
double individuation(const ScoreVector& scores, double epsilon);

/// Histogram (rank, node count) pairs of a table, densest form of the
/// per-rank frequency plot data.
std::vector<std::pair<int, int>> rank_frequency(const RankTable& table);

/// Size of the intersection of the two top-k node sets.
int overlap(const RankTable& a, const RankTable& b, const Graph& g, int k);

struct Correlations {
    double pearson = 0.0;
    double kendall = 0.0;  // tau-b, tie corrected
    int n = 0;
};

/// Correlations over nodes unflagged in both vectors; throws std::domain_error
/// when fewer than 3 such nodes exist.
Correlations correlate(const ScoreVector& x, const ScoreVector& y);

struct ScatterRecord {
    Label label = 0;
    double x = 0.0;
    double y = 0.0;
    double ability = 0.0;
};

std::vector<ScatterRecord> scatter_records(const Graph& g, const ScoreVector& x,
                                           const ScoreVector& y,
                                           const std::vector<double>& ability);

}  // namespace mldim

#pragma once

#include "mldim/distance.hpp"
#include "mldim/graph.hpp"
#include "mldim/score.hpp"

namespace mldim {

/// Exact shortest-path betweenness (Brandes accumulation), summed over
/// unordered pairs s < t with s != i != t, unnormalized.
ScoreVector betweenness(const Graph& g);

/// C(i) = 1 / sum of distances to reachable nodes; isolated nodes score 0.
/// On disconnected graphs the sum runs over reachable nodes only and the
/// result carries the reachable_only flag.
ScoreVector closeness(const Graph& g, const DistanceMatrix& d);

/// C(i) = |adj(i)|.
ScoreVector degree_centrality(const Graph& g);

}  // namespace mldim

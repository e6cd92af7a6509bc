#include "mldim/centrality.hpp"

#include <vector>

namespace mldim {

ScoreVector betweenness(const Graph& g) {
    const int n = g.node_count();
    ScoreVector out;
    out.measure_id = "bc";
    out.lower_is_better = false;
    out.scores.assign(n, 0.0);
    out.flagged.assign(n, 0);

    // Brandes: per-source BFS DAG, dependencies accumulated in reverse
    // finishing order. Ordered-pair total halved at the end.
    std::vector<int> stack(n), dist(n), queue(n);
    std::vector<double> sigma(n), delta(n);
    std::vector<std::vector<int>> preds(n);

    for (int s = 0; s < n; ++s) {
        dist.assign(n, -1);
        sigma.assign(n, 0.0);
        delta.assign(n, 0.0);
        for (auto& p : preds) p.clear();

        int head = 0, tail = 0, top = 0;
        dist[s] = 0;
        sigma[s] = 1.0;
        queue[tail++] = s;
        while (head < tail) {
            const int v = queue[head++];
            stack[top++] = v;
            for (int w : g.neighbors(v)) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    queue[tail++] = w;
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    preds[w].push_back(v);
                }
            }
        }
        while (top > 0) {
            const int w = stack[--top];
            for (int v : preds[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
            if (w != s) out.scores[w] += delta[w];
        }
    }
    for (double& v : out.scores) v /= 2.0;
    return out;
}

ScoreVector closeness(const Graph& g, const DistanceMatrix& d) {
    const int n = g.node_count();
    ScoreVector out;
    out.measure_id = "cc";
    out.lower_is_better = false;
    out.scores.assign(n, 0.0);
    out.flagged.assign(n, 0);
    out.reachable_only = !d.fully_connected();
    for (int i = 0; i < n; ++i) {
        std::int64_t sum = 0;
        for (int dist : d.row(i))
            if (dist > 0) sum += dist;
        out.scores[i] = sum > 0 ? 1.0 / static_cast<double>(sum) : 0.0;
    }
    return out;
}

ScoreVector degree_centrality(const Graph& g) {
    const int n = g.node_count();
    ScoreVector out;
    out.measure_id = "dc";
    out.lower_is_better = false;
    out.scores.resize(n);
    out.flagged.assign(n, 0);
    for (int v = 0; v < n; ++v) out.scores[v] = g.degree(v);
    return out;
}

}  // namespace mldim

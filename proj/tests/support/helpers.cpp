#include "support/helpers.hpp"

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <numeric>

namespace testsupport {

using mldim::Graph;
using mldim::Label;

namespace {

Graph from_pairs(const std::vector<std::pair<Label, Label>>& edges, int declared_n = 0) {
    std::vector<Label> declared;
    for (Label i = 1; i <= declared_n; ++i) declared.push_back(i);
    return Graph::from_edges(edges, declared);
}

}  // namespace

Graph path_graph(int n) {
    std::vector<std::pair<Label, Label>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    return from_pairs(edges, n);
}

Graph cycle_graph(int n) {
    std::vector<std::pair<Label, Label>> edges;
    for (int i = 1; i < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n, 1);
    return from_pairs(edges, n);
}

Graph star_graph(int leaves) {
    std::vector<std::pair<Label, Label>> edges;
    for (int i = 0; i < leaves; ++i) edges.emplace_back(1, i + 2);
    return from_pairs(edges, leaves + 1);
}

Graph complete_graph(int n) {
    std::vector<std::pair<Label, Label>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) edges.emplace_back(i, j);
    return from_pairs(edges, n);
}

Graph grid_graph(int rows, int cols) {
    auto label = [cols](int r, int c) { return static_cast<Label>(r) * cols + c + 1; };
    std::vector<std::pair<Label, Label>> edges;
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (r + 1 < rows) edges.emplace_back(label(r, c), label(r + 1, c));
            if (c + 1 < cols) edges.emplace_back(label(r, c), label(r, c + 1));
        }
    }
    return from_pairs(edges, rows * cols);
}

Graph random_gnp(std::mt19937& rng, int n, double p) {
    std::bernoulli_distribution coin(p);
    std::vector<std::pair<Label, Label>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (coin(rng)) edges.emplace_back(i, j);
    return from_pairs(edges, n);
}

std::string data_file(const std::string& name) {
    const char* dir = std::getenv("MLDIM_DATA_DIR");
    return (std::filesystem::path(dir ? dir : "data") / name).string();
}

bool data_file_exists(const std::string& name) {
    return std::filesystem::exists(data_file(name));
}

std::vector<std::vector<int>> floyd_warshall(const Graph& g) {
    const int n = g.node_count();
    const int inf = n + 1;
    std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
    for (int v = 0; v < n; ++v) {
        d[v][v] = 0;
        for (int w : g.neighbors(v)) d[v][w] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    for (auto& row : d)
        for (int& v : row)
            if (v >= inf) v = -1;
    return d;
}

std::vector<double> exhaustive_betweenness(const Graph& g) {
    const int n = g.node_count();
    const auto dist = floyd_warshall(g);
    std::vector<double> bc(n, 0.0);

    // enumerate every shortest s-t path explicitly and tally interior visits
    std::vector<long long> through(n);
    long long total = 0;
    std::vector<int> current;
    std::function<void(int, int)> walk = [&](int v, int t) {
        if (v == t) {
            ++total;
            for (int u : current)
                if (u != t) ++through[u];
            return;
        }
        for (int w : g.neighbors(v)) {
            if (dist[w][t] == dist[v][t] - 1) {
                current.push_back(w);
                walk(w, t);
                current.pop_back();
            }
        }
    };

    for (int s = 0; s < n; ++s) {
        for (int t = s + 1; t < n; ++t) {
            if (dist[s][t] < 0) continue;
            std::fill(through.begin(), through.end(), 0);
            total = 0;
            current.clear();
            walk(s, t);
            for (int i = 0; i < n; ++i) {
                if (i == s || i == t || through[i] == 0) continue;
                bc[i] += static_cast<double>(through[i]) / static_cast<double>(total);
            }
        }
    }
    return bc;
}

double naive_ols_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const int n = static_cast<int>(x.size());
    const double sx = std::accumulate(x.begin(), x.end(), 0.0);
    const double sy = std::accumulate(y.begin(), y.end(), 0.0);
    double sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    return (sxy - sx * sy / n) / (sxx - sx * sx / n);
}

}  // namespace testsupport

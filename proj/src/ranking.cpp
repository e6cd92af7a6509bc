#include "mldim/ranking.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace mldim {

namespace {

bool score_equal(double a, double b, double epsilon) {
    return std::abs(a - b) <= epsilon * std::max({1.0, std::abs(a), std::abs(b)});
}

}  // namespace

RankTable rank(const ScoreVector& scores, const Graph& g) {
    const int n = scores.size();
    if (n != g.node_count())
        throw std::invalid_argument("score vector does not match graph");

    RankTable table;
    table.measure_id = scores.measure_id;
    table.lower_is_better = scores.lower_is_better;
    table.order.resize(n);
    std::iota(table.order.begin(), table.order.end(), 0);

    // scored before flagged; better score first; descending label inside a tie
    // (the reversed stable ascending sort convention)
    std::sort(table.order.begin(), table.order.end(), [&](int a, int b) {
        const bool fa = scores.flagged[a], fb = scores.flagged[b];
        if (fa != fb) return fb;
        if (!fa && scores.scores[a] != scores.scores[b]) {
            return scores.lower_is_better ? scores.scores[a] < scores.scores[b]
                                          : scores.scores[a] > scores.scores[b];
        }
        return g.label(a) > g.label(b);
    });

    table.rank_of.assign(n, 0);
    for (int pos = 0; pos < n; ++pos) {
        const int v = table.order[pos];
        if (pos == 0) {
            table.rank_counts.push_back(0);
        } else {
            const int prev = table.order[pos - 1];
            const bool same_class = scores.flagged[v]
                                        ? scores.flagged[prev] != 0
                                        : !scores.flagged[prev] &&
                                              scores.scores[v] == scores.scores[prev];
            if (!same_class) table.rank_counts.push_back(0);
        }
        table.rank_of[v] = static_cast<int>(table.rank_counts.size());
        ++table.rank_counts.back();
    }
    return table;
}

std::vector<Label> top_labels(const RankTable& table, const Graph& g, int k) {
    k = std::min<int>(k, static_cast<int>(table.order.size()));
    std::vector<Label> out;
    out.reserve(k);
    for (int pos = 0; pos < k; ++pos) out.push_back(g.label(table.order[pos]));
    return out;
}

double individuation(const ScoreVector& scores, double epsilon) {
    if (epsilon < 0.0) throw std::invalid_argument("epsilon must be nonnegative");
    const int n = scores.size();
    if (n == 0) return 0.0;
    std::vector<double> vals;
    vals.reserve(n);
    for (int v = 0; v < n; ++v)
        if (!scores.flagged[v]) vals.push_back(scores.scores[v]);
    if (vals.empty()) return 0.0;
    std::sort(vals.begin(), vals.end());
    int classes = 1;
    for (std::size_t i = 1; i < vals.size(); ++i)
        if (!score_equal(vals[i - 1], vals[i], epsilon)) ++classes;
    return static_cast<double>(classes) / static_cast<double>(n);
}

std::vector<std::pair<int, int>> rank_frequency(const RankTable& table) {
    std::vector<std::pair<int, int>> hist;
    hist.reserve(table.rank_counts.size());
    for (std::size_t r = 0; r < table.rank_counts.size(); ++r)
        hist.emplace_back(static_cast<int>(r) + 1, table.rank_counts[r]);
    return hist;
}

int overlap(const RankTable& a, const RankTable& b, const Graph& g, int k) {
    const auto la = top_labels(a, g, k);
    const auto lb = top_labels(b, g, k);
    const std::set<Label> sa(la.begin(), la.end());
    int shared = 0;
    for (Label l : lb) shared += sa.count(l) != 0;
    return shared;
}

Correlations correlate(const ScoreVector& x, const ScoreVector& y) {
    if (x.size() != y.size())
        throw std::invalid_argument("score vectors cover different node sets");
    std::vector<double> a, b;
    for (int v = 0; v < x.size(); ++v) {
        if (x.flagged[v] || y.flagged[v]) continue;
        a.push_back(x.scores[v]);
        b.push_back(y.scores[v]);
    }
    const int n = static_cast<int>(a.size());
    if (n < 3) throw std::domain_error("correlation undefined: fewer than 3 scored nodes");

    Correlations out;
    out.n = n;

    double am = 0.0, bm = 0.0;
    for (int i = 0; i < n; ++i) {
        am += a[i];
        bm += b[i];
    }
    am /= n;
    bm /= n;
    double saa = 0.0, sbb = 0.0, sab = 0.0;
    for (int i = 0; i < n; ++i) {
        saa += (a[i] - am) * (a[i] - am);
        sbb += (b[i] - bm) * (b[i] - bm);
        sab += (a[i] - am) * (b[i] - bm);
    }
    if (saa == 0.0 || sbb == 0.0) throw std::domain_error("correlation undefined: constant scores");
    out.pearson = sab / std::sqrt(saa * sbb);

    // Kendall tau-b; pairs tied on both axes drop out of every term
    std::int64_t concordant = 0, discordant = 0, ties_a = 0, ties_b = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double dx = a[i] - a[j], dy = b[i] - b[j];
            if (dx == 0.0 && dy == 0.0) continue;
            if (dx == 0.0)
                ++ties_a;
            else if (dy == 0.0)
                ++ties_b;
            else if (dx * dy > 0.0)
                ++concordant;
            else
                ++discordant;
        }
    }
    const double denom =
        std::sqrt(static_cast<double>(concordant + discordant + ties_a)) *
        std::sqrt(static_cast<double>(concordant + discordant + ties_b));
    if (denom == 0.0) throw std::domain_error("correlation undefined: constant scores");
    out.kendall = static_cast<double>(concordant - discordant) / denom;
    return out;
}

std::vector<ScatterRecord> scatter_records(const Graph& g, const ScoreVector& x,
                                           const ScoreVector& y,
                                           const std::vector<double>& ability) {
    const int n = g.node_count();
    if (x.size() != n || y.size() != n || static_cast<int>(ability.size()) != n)
        throw std::invalid_argument("inputs cover different node sets");
    std::vector<ScatterRecord> out;
    out.reserve(n);
    for (int v = 0; v < n; ++v)
        out.push_back({g.label(v), x.scores[v], y.scores[v], ability[v]});
    return out;
}

}  // namespace mldim

#include "mldim/dimension.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace mldim {

RegressionFit linear_fit(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size() || x.size() < 2)
        throw std::domain_error("insufficient points for regression");
    const int n = static_cast<int>(x.size());
    double xm = 0.0, ym = 0.0;
    for (int i = 0; i < n; ++i) {
        xm += x[i];
        ym += y[i];
    }
    xm /= n;
    ym /= n;
    double sxx = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        sxx += (x[i] - xm) * (x[i] - xm);
        sxy += (x[i] - xm) * (y[i] - ym);
    }
    if (sxx == 0.0) throw std::domain_error("degenerate regression: constant abscissa");
    RegressionFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = ym - fit.slope * xm;
    fit.n_points = n;
    for (int i = 0; i < n; ++i) {
        const double r = y[i] - (fit.intercept + fit.slope * x[i]);
        fit.residual_ss += r * r;
    }
    return fit;
}

BoxSeries box_series(const DistanceMatrix& d, int center, bool inclusive) {
    const int ecc = d.eccentricity(center);
    if (ecc < 1) throw std::domain_error("no locality scale for node (isolated)");
    BoxSeries s;
    s.center = center;
    s.n_total = d.n();
    s.counts.resize(ecc);
    const auto row = d.row(center);
    for (int dist : row) {
        if (dist == DistanceMatrix::kUnreachable) continue;
        // node at distance dist enters the box at size dist (inclusive) or
        // dist+1 (exclusive); the center itself (dist 0) is in every box
        const int first = inclusive ? std::max(dist, 1) : std::max(dist + 1, 1);
        if (first <= ecc) ++s.counts[first - 1];
    }
    for (int l = 1; l < ecc; ++l) s.counts[l] += s.counts[l - 1];
    s.measures.resize(ecc);
    for (int l = 0; l < ecc; ++l)
        s.measures[l] = static_cast<double>(s.counts[l]) / static_cast<double>(s.n_total);
    return s;
}

double partition_value(double mu, double q) {
    if (mu <= 0.0 || mu > 1.0) throw std::domain_error("box measure outside (0,1]");
    if (q == 0.0) return mu;
    if (q == 1.0) return mu * std::log(mu);
    return std::pow(mu, q);
}

namespace {

std::vector<double> log_sizes(int count) {
    std::vector<double> xs(count);
    for (int l = 1; l <= count; ++l) xs[l - 1] = std::log(static_cast<double>(l));
    return xs;
}

}  // namespace

double mld(const BoxSeries& series, double q) {
    const int m = series.max_size();
    if (m < 2) throw std::domain_error("insufficient points for regression");
    const auto xs = log_sizes(m);
    std::vector<double> ys(m);
    if (q == 1.0) {
        for (int i = 0; i < m; ++i) ys[i] = partition_value(series.measures[i], q);
    } else {
        for (int i = 0; i < m; ++i)
            ys[i] = std::log(partition_value(series.measures[i], q)) / (q - 1.0);
    }
    return linear_fit(xs, ys).slope;
}

double local_dimension(const BoxSeries& series) {
    const int m = series.max_size();
    if (m < 2) throw std::domain_error("insufficient points for regression");
    const auto xs = log_sizes(m);
    std::vector<double> ys(m);
    for (int i = 0; i < m; ++i) ys[i] = std::log(static_cast<double>(series.counts[i]));
    return linear_fit(xs, ys).slope;
}

double local_dimension_at(const BoxSeries& series, int size) {
    if (size < 1 || size > series.max_size()) throw std::domain_error("size outside 1..ecc");
    const int at = series.counts[size - 1];
    const int below = size >= 2 ? series.counts[size - 2] : 1;
    return static_cast<double>(size) * static_cast<double>(at - below) / static_cast<double>(at);
}

ScoreVector score_all(const Graph& g, const DistanceMatrix& d, Measure measure,
                      const DimensionOptions& opts) {
    if (measure != Measure::mld && measure != Measure::ld)
        throw std::invalid_argument("score_all handles dimension measures only");
    ScoreVector out;
    out.measure_id = measure == Measure::mld
                         ? "mld(q=" + format_q(opts.q) + ")"
                         : "ld";
    out.lower_is_better = true;
    const int n = g.node_count();
    out.scores.resize(n, std::numeric_limits<double>::quiet_NaN());
    out.flagged.assign(n, 0);
    for (int v = 0; v < n; ++v) {
        if (d.eccentricity(v) < 2) {
            out.flagged[v] = 1;
            continue;
        }
        const BoxSeries series = box_series(d, v, opts.inclusive);
        out.scores[v] = measure == Measure::mld ? mld(series, opts.q) : local_dimension(series);
    }
    return out;
}

}  // namespace mldim

#pragma once

#include <span>
#include <vector>

#include "mldim/distance.hpp"
#include "mldim/graph.hpp"
#include "mldim/score.hpp"

namespace mldim {

/// Node counts of the growing box around one center, for radii 1..ecc.
///
/// counts[l-1] is the number of nodes inside the box of size l (the center
/// always counts itself); measures[l-1] = counts[l-1] / node_count.
struct BoxSeries {
    int center = 0;
    int n_total = 0;
    std::vector<int> counts;
    std::vector<double> measures;

    int max_size() const { return static_cast<int>(counts.size()); }
};

/// Ordinary least-squares line fit.
struct RegressionFit {
    double slope = 0.0;
    double intercept = 0.0;
    int n_points = 0;
    double residual_ss = 0.0;
};

RegressionFit linear_fit(std::span<const double> x, std::span<const double> y);

/// Box membership is inclusive (distance <= size) by default; the exclusive
/// variant (< size, center retained) is kept for sensitivity analysis.
BoxSeries box_series(const DistanceMatrix& d, int center, bool inclusive = true);

/// Weighted box term: mu^q in general, mu itself at q=0, mu*ln(mu) at q=1.
double partition_value(double mu, double q);

/// Slope of the q-weighted log-log series over sizes 1..ecc.
/// q != 1: regress ln Z(q,l)/(q-1) on ln l; q == 1: regress Z(1,l) on ln l.
double mld(const BoxSeries& series, double q);

/// Slope of ln(box count) against ln(size); requires at least two sizes.
double local_dimension(const BoxSeries& series);

/// Pointwise dimension estimate at a single radius (diagnostics only).
double local_dimension_at(const BoxSeries& series, int size);

struct DimensionOptions {
    double q = 2.0;
    bool inclusive = true;
};

/// Scores every node under mld or ld; nodes with eccentricity < 2 are flagged.
ScoreVector score_all(const Graph& g, const DistanceMatrix& d, Measure measure,
                      const DimensionOptions& opts = {});

}  // namespace mldim

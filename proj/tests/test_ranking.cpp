#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "mldim/centrality.hpp"
#include "mldim/dimension.hpp"
#include "mldim/ranking.hpp"
#include "support/helpers.hpp"

using namespace mldim;
namespace ts = testsupport;

namespace {

ScoreVector make_scores(std::vector<double> scores, bool lower_is_better = false,
                        std::vector<char> flagged = {}) {
    ScoreVector s;
    s.measure_id = "test";
    s.scores = std::move(scores);
    s.flagged = flagged.empty() ? std::vector<char>(s.scores.size(), 0) : std::move(flagged);
    s.lower_is_better = lower_is_better;
    return s;
}

}  // namespace

TEST_SUITE("ranking") {

TEST_CASE("ties share a dense rank; order inside a tie is by descending label") {
    const Graph g = ts::path_graph(3);  // labels 1,2,3
    const ScoreVector s = make_scores({3.0, 1.0, 3.0});
    const RankTable t = rank(s, g);
    CHECK(t.rank_of[0] == 1);
    CHECK(t.rank_of[2] == 1);
    CHECK(t.rank_of[1] == 2);
    CHECK(top_labels(t, g, 3) == std::vector<Label>{3, 1, 2});
    CHECK(t.rank_counts == std::vector<int>{2, 1});
}

TEST_CASE("lower-is-better direction and flagged-last placement") {
    const Graph g = ts::path_graph(4);
    const ScoreVector s = make_scores({0.5, 2.0, std::nan(""), 0.5}, true, {0, 0, 1, 0});
    const RankTable t = rank(s, g);
    CHECK(top_labels(t, g, 4) == std::vector<Label>{4, 1, 2, 3});
    CHECK(t.rank_of[g.index_of(3)] == 3);  // flagged class comes last
    CHECK(t.num_ranks() == 3);
}

TEST_CASE("karate degree and closeness top-10 sequences") {
    const Graph g = load_graph(ts::data_file("karate.net"));
    const DistanceMatrix d(g);
    const RankTable dc = rank(degree_centrality(g), g);
    CHECK(top_labels(dc, g, 10) == std::vector<Label>{34, 1, 33, 3, 2, 32, 4, 24, 14, 9});
    const RankTable cc = rank(closeness(g, d), g);
    CHECK(top_labels(cc, g, 10) == std::vector<Label>{1, 3, 34, 32, 33, 14, 9, 20, 2, 4});
}

TEST_CASE("rank is invariant under input edge order") {
    std::mt19937 rng(9);
    std::vector<std::pair<Label, Label>> edges = {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}};
    const Graph a = Graph::from_edges(edges);
    std::shuffle(edges.begin(), edges.end(), rng);
    const Graph b = Graph::from_edges(edges);
    const RankTable ta = rank(degree_centrality(a), a);
    const RankTable tb = rank(degree_centrality(b), b);
    CHECK(ta.order == tb.order);
    CHECK(ta.rank_of == tb.rank_of);
}

TEST_CASE("individuation counts distinct score classes") {
    CHECK(individuation(make_scores({1.0, 2.0, 3.0}), 0.0) == doctest::Approx(1.0));
    CHECK(individuation(make_scores({1.0, 1.0, 3.0}), 0.0) == doctest::Approx(2.0 / 3.0));

    const Graph g = load_graph(ts::data_file("karate.net"));
    CHECK(individuation(degree_centrality(g), 0.0) == doctest::Approx(11.0 / 34.0));
}

TEST_CASE("individuation is antitone in epsilon") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (int round = 0; round < 25; ++round) {
        std::vector<double> vals(12);
        for (double& v : vals) v = u(rng);
        const ScoreVector s = make_scores(vals);
        double prev = 2.0;
        for (double eps : {0.0, 1e-6, 1e-3, 0.05, 0.5}) {
            const double gamma = individuation(s, eps);
            CHECK(gamma <= prev + 1e-15);
            prev = gamma;
        }
    }
    CHECK_THROWS_AS(individuation(make_scores({1.0}), -0.5), std::invalid_argument);
}

TEST_CASE("rank and individuation survive monotone transforms") {
    std::mt19937 rng(15);
    std::uniform_real_distribution<double> u(0.1, 5.0);
    const Graph g = ts::cycle_graph(10);
    std::vector<double> vals(10);
    for (double& v : vals) v = u(rng);
    const ScoreVector s = make_scores(vals);
    std::vector<double> mapped = vals;
    for (double& v : mapped) v = std::exp(2.0 * v + 1.0);
    const ScoreVector m = make_scores(mapped);
    CHECK(rank(s, g).order == rank(m, g).order);
    CHECK(individuation(s, 0.0) == doctest::Approx(individuation(m, 0.0)));
}

TEST_CASE("rank frequency histogram") {
    const Graph g = ts::path_graph(3);
    const RankTable t = rank(make_scores({3.0, 1.0, 3.0}), g);
    const auto hist = rank_frequency(t);
    REQUIRE(hist.size() == 2);
    CHECK(hist[0] == std::pair<int, int>{1, 2});
    CHECK(hist[1] == std::pair<int, int>{2, 1});

    const Graph karate = load_graph(ts::data_file("karate.net"));
    const DistanceMatrix d(karate);
    const RankTable dc = rank(degree_centrality(karate), karate);
    int total = 0;
    for (auto [r, c] : rank_frequency(dc)) total += c;
    CHECK(total == 34);
    CHECK(dc.num_ranks() == 11);

    const RankTable mld2 = rank(score_all(karate, d, Measure::mld, {2.0, true}), karate);
    CHECK(mld2.num_ranks() >= dc.num_ranks());
}

TEST_CASE("overlap properties") {
    const Graph g = load_graph(ts::data_file("karate.net"));
    const DistanceMatrix d(g);
    const RankTable dc = rank(degree_centrality(g), g);
    const RankTable cc = rank(closeness(g, d), g);
    CHECK(overlap(dc, dc, g, 10) == 10);
    CHECK(overlap(dc, cc, g, 10) == overlap(cc, dc, g, 10));
    CHECK(overlap(dc, cc, g, 34) == 34);
}

TEST_CASE("correlations on exact negations and known signs") {
    const ScoreVector x = make_scores({1.0, 2.0, 3.0, 4.0, 5.0});
    ScoreVector y = make_scores({-1.0, -2.0, -3.0, -4.0, -5.0});
    const Correlations c = correlate(x, y);
    CHECK(c.pearson == doctest::Approx(-1.0));
    CHECK(c.kendall == doctest::Approx(-1.0));
    CHECK(c.n == 5);

    const Correlations self = correlate(x, x);
    CHECK(self.pearson == doctest::Approx(1.0));
    CHECK(self.kendall == doctest::Approx(1.0));
}

TEST_CASE("correlation needs at least three scored nodes") {
    const ScoreVector x = make_scores({1.0, 2.0, 3.0}, false, {0, 0, 1});
    const ScoreVector y = make_scores({1.0, 2.0, 3.0});
    CHECK_THROWS_AS(correlate(x, y), std::domain_error);
}

TEST_CASE("kendall tau-b handles ties") {
    // hand-computed: pairs = 6, concordant 5, tied-on-x 1
    const ScoreVector x = make_scores({1.0, 2.0, 2.0, 3.0});
    const ScoreVector y = make_scores({1.0, 2.0, 3.0, 4.0});
    const Correlations c = correlate(x, y);
    CHECK(c.kendall == doctest::Approx(5.0 / std::sqrt(6.0 * 5.0)));
}

TEST_CASE("karate mld is negatively correlated with cc and dc") {
    const Graph g = load_graph(ts::data_file("karate.net"));
    const DistanceMatrix d(g);
    const ScoreVector mld2 = score_all(g, d, Measure::mld, {2.0, true});
    const Correlations vs_cc = correlate(mld2, closeness(g, d));
    const Correlations vs_dc = correlate(mld2, degree_centrality(g));
    CHECK(vs_cc.pearson == doctest::Approx(-0.4819655720).epsilon(1e-6));
    CHECK(vs_cc.kendall == doctest::Approx(-0.3268576098).epsilon(1e-6));
    CHECK(vs_dc.pearson == doctest::Approx(-0.8642654510).epsilon(1e-6));
    CHECK(vs_dc.kendall == doctest::Approx(-0.5481198693).epsilon(1e-6));
}

TEST_CASE("scatter records cover every node") {
    const Graph g = ts::path_graph(4);
    const ScoreVector x = make_scores({1, 2, 3, 4});
    const ScoreVector y = make_scores({4, 3, 2, 1});
    const auto records = scatter_records(g, x, y, {0.1, 0.2, 0.3, 0.4});
    REQUIRE(records.size() == 4);
    CHECK(records[2].label == 3);
    CHECK(records[2].x == doctest::Approx(3.0));
    CHECK(records[2].ability == doctest::Approx(0.3));
    CHECK_THROWS_AS(scatter_records(g, x, y, {0.1}), std::invalid_argument);
}

}  // TEST_SUITE

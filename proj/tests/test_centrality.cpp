#include <doctest.h>

#include <random>

#include "mldim/centrality.hpp"
#include "mldim/ranking.hpp"
#include "support/helpers.hpp"

using namespace mldim;
namespace ts = testsupport;

TEST_SUITE("centrality") {

TEST_CASE("path betweenness: single intermediary") {
    const Graph g = ts::path_graph(3);
    const ScoreVector bc = betweenness(g);
    CHECK(bc.scores[g.index_of(2)] == doctest::Approx(1.0));
    CHECK(bc.scores[g.index_of(1)] == doctest::Approx(0.0));
    CHECK(bc.scores[g.index_of(3)] == doctest::Approx(0.0));
}

TEST_CASE("karate betweenness values") {
    // reference values from an independent implementation of the same
    // unordered-pair, unnormalized sum
    const Graph g = load_graph(ts::data_file("karate.net"));
    const ScoreVector bc = betweenness(g);
    CHECK(bc.scores[g.index_of(1)] == doctest::Approx(231.071428571429).epsilon(1e-9));
    CHECK(bc.scores[g.index_of(34)] == doctest::Approx(160.551587301587).epsilon(1e-9));
    CHECK(bc.scores[g.index_of(3)] == doctest::Approx(75.850793650794).epsilon(1e-9));
    CHECK(bc.scores[g.index_of(12)] == doctest::Approx(0.0));
    CHECK(bc.scores[g.index_of(6)] == doctest::Approx(bc.scores[g.index_of(7)]));
}

TEST_CASE("brandes equals the exhaustive path enumeration oracle") {
    std::mt19937 rng(71);
    for (int round = 0; round < 60; ++round) {
        const int n = 2 + static_cast<int>(rng() % 9);
        const Graph g = ts::random_gnp(rng, n, 0.35);
        const ScoreVector bc = betweenness(g);
        const auto oracle = ts::exhaustive_betweenness(g);
        for (int v = 0; v < n; ++v)
            REQUIRE(bc.scores[v] ==
                    doctest::Approx(oracle[v]).epsilon(1e-9).scale(std::max(1.0, oracle[v])));
    }
}

TEST_CASE("leaf betweenness is zero") {
    std::mt19937 rng(3);
    for (int round = 0; round < 15; ++round) {
        const Graph g = ts::random_gnp(rng, 4 + static_cast<int>(rng() % 12), 0.25);
        const ScoreVector bc = betweenness(g);
        for (int v = 0; v < g.node_count(); ++v)
            if (g.degree(v) <= 1) CHECK(bc.scores[v] == doctest::Approx(0.0));
    }
}

TEST_CASE("closeness on the path and star") {
    const Graph p = ts::path_graph(3);
    const DistanceMatrix dp(p);
    const ScoreVector cc = closeness(p, dp);
    CHECK(cc.scores[p.index_of(2)] == doctest::Approx(0.5));
    CHECK_FALSE(cc.reachable_only);

    const Graph s = ts::star_graph(5);
    const DistanceMatrix ds(s);
    CHECK(closeness(s, ds).scores[s.index_of(1)] == doctest::Approx(0.2));
}

TEST_CASE("closeness bounds; hub attains the maximum") {
    std::mt19937 rng(41);
    for (int round = 0; round < 20; ++round) {
        const Graph g = ts::random_gnp(rng, 3 + static_cast<int>(rng() % 15), 0.5);
        const DistanceMatrix d(g);
        if (!d.fully_connected()) continue;
        const ScoreVector cc = closeness(g, d);
        const int n = g.node_count();
        double best = 0.0;
        for (int v = 0; v < n; ++v) {
            CHECK(cc.scores[v] > 0.0);
            CHECK(cc.scores[v] <= 1.0 / (n - 1) + 1e-15);
            best = std::max(best, cc.scores[v]);
        }
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == n - 1) CHECK(cc.scores[v] == doctest::Approx(best));
    }
}

TEST_CASE("closeness on a disconnected graph sums reachable nodes only") {
    std::istringstream in("1 2\n2 3\n4 5\n");
    const Graph g = parse_edge_list(in);
    const DistanceMatrix d(g);
    const ScoreVector cc = closeness(g, d);
    CHECK(cc.reachable_only);
    CHECK(cc.scores[g.index_of(2)] == doctest::Approx(0.5));
    CHECK(cc.scores[g.index_of(4)] == doctest::Approx(1.0));

    std::istringstream iso("*Vertices 3\n*Edges\n1 2\n");
    const Graph gi = parse_pajek(iso);
    const DistanceMatrix di(gi);
    CHECK(closeness(gi, di).scores[gi.index_of(3)] == doctest::Approx(0.0));
}

TEST_CASE("degree centrality sums to twice the edge count") {
    const Graph tri = ts::complete_graph(3);
    for (double v : degree_centrality(tri).scores) CHECK(v == doctest::Approx(2.0));

    std::mt19937 rng(12);
    for (int round = 0; round < 15; ++round) {
        const Graph g = ts::random_gnp(rng, 2 + static_cast<int>(rng() % 20), 0.3);
        const ScoreVector dc = degree_centrality(g);
        double sum = 0.0;
        for (double v : dc.scores) sum += v;
        CHECK(sum == doctest::Approx(2.0 * double(g.edge_count())));
    }
}

TEST_CASE("karate degree top node") {
    const Graph g = load_graph(ts::data_file("karate.net"));
    const ScoreVector dc = degree_centrality(g);
    const RankTable t = rank(dc, g);
    CHECK(g.label(t.order[0]) == 34);
    CHECK(dc.scores[t.order[0]] == doctest::Approx(17.0));
}

}  // TEST_SUITE

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "mldim/centrality.hpp"
#include "mldim/dimension.hpp"
#include "mldim/distance.hpp"
#include "mldim/graph.hpp"
#include "mldim/output.hpp"
#include "mldim/ranking.hpp"
#include "mldim/si.hpp"

namespace py = pybind11;
using namespace mldim;

PYBIND11_MODULE(_core, m) {
    m.doc() = "Multi-local-dimension node centrality and SI spreading analysis";

    py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);

    py::enum_<GraphFormat>(m, "GraphFormat")
        .value("pajek", GraphFormat::pajek)
        .value("edge_list", GraphFormat::edge_list);

    py::enum_<Measure>(m, "Measure")
        .value("mld", Measure::mld)
        .value("ld", Measure::ld)
        .value("bc", Measure::bc)
        .value("cc", Measure::cc)
        .value("dc", Measure::dc);

    py::enum_<Exposure>(m, "Exposure")
        .value("per_edge", Exposure::per_edge)
        .value("single", Exposure::single);

    py::class_<Graph>(m, "Graph")
        .def_static(
            "from_edges",
            [](const std::vector<std::pair<Label, Label>>& edges,
               const std::vector<Label>& declared) { return Graph::from_edges(edges, declared); },
            py::arg("edges"), py::arg("declared_nodes") = std::vector<Label>{})
        .def_property_readonly("node_count", &Graph::node_count)
        .def_property_readonly("edge_count", &Graph::edge_count)
        .def_property_readonly("labels", &Graph::labels)
        .def("degree", &Graph::degree, py::arg("v"))
        .def(
            "neighbors",
            [](const Graph& g, int v) {
                auto nb = g.neighbors(v);
                return std::vector<int>(nb.begin(), nb.end());
            },
            py::arg("v"))
        .def("label", &Graph::label, py::arg("v"))
        .def("index_of", &Graph::index_of, py::arg("label"))
        .def("has_label", &Graph::has_label, py::arg("label"))
        .def("to_pajek", &Graph::to_pajek)
        .def("to_edge_list", &Graph::to_edge_list)
        .def("__repr__", [](const Graph& g) {
            std::ostringstream out;
            out << "Graph(|N|=" << g.node_count() << ", |E|=" << g.edge_count() << ")";
            return out.str();
        });

    m.def("load_graph", py::overload_cast<const std::string&>(&load_graph), py::arg("path"));
    m.def("load_graph",
          py::overload_cast<const std::string&, GraphFormat, bool>(&load_graph),
          py::arg("path"), py::arg("format"), py::arg("zero_based") = false);
    m.def(
        "parse_graph_text",
        [](const std::string& text, GraphFormat format, bool zero_based) {
            std::istringstream in(text);
            return parse_graph(in, format, zero_based);
        },
        py::arg("text"), py::arg("format"), py::arg("zero_based") = false);

    py::class_<DistanceMatrix>(m, "DistanceMatrix")
        .def(py::init<const Graph&>(), py::arg("graph"))
        .def_property_readonly("n", &DistanceMatrix::n)
        .def_property_readonly("fully_connected", &DistanceMatrix::fully_connected)
        .def("at", &DistanceMatrix::at, py::arg("i"), py::arg("j"))
        .def(
            "row",
            [](const DistanceMatrix& d, int i) {
                auto r = d.row(i);
                return std::vector<int>(r.begin(), r.end());
            },
            py::arg("i"))
        .def("eccentricity", &DistanceMatrix::eccentricity, py::arg("i"));
    m.attr("UNREACHABLE") = DistanceMatrix::kUnreachable;

    py::class_<NetworkStats>(m, "NetworkStats")
        .def_readonly("node_count", &NetworkStats::node_count)
        .def_readonly("edge_count", &NetworkStats::edge_count)
        .def_readonly("mean_degree", &NetworkStats::mean_degree)
        .def_readonly("max_degree", &NetworkStats::max_degree)
        .def_readonly("mean_distance", &NetworkStats::mean_distance)
        .def_readonly("max_distance", &NetworkStats::max_distance)
        .def_readonly("disconnected", &NetworkStats::disconnected);
    m.def("network_stats", &network_stats, py::arg("graph"), py::arg("distances"));

    py::class_<BoxSeries>(m, "BoxSeries")
        .def_readonly("center", &BoxSeries::center)
        .def_readonly("n_total", &BoxSeries::n_total)
        .def_readonly("counts", &BoxSeries::counts)
        .def_readonly("measures", &BoxSeries::measures)
        .def_property_readonly("max_size", &BoxSeries::max_size);
    m.def("box_series", &box_series, py::arg("distances"), py::arg("center"),
          py::arg("inclusive") = true);

    py::class_<RegressionFit>(m, "RegressionFit")
        .def_readonly("slope", &RegressionFit::slope)
        .def_readonly("intercept", &RegressionFit::intercept)
        .def_readonly("n_points", &RegressionFit::n_points)
        .def_readonly("residual_ss", &RegressionFit::residual_ss);
    m.def(
        "linear_fit",
        [](const std::vector<double>& x, const std::vector<double>& y) {
            return linear_fit(x, y);
        },
        py::arg("x"), py::arg("y"));

    m.def("partition_value", &partition_value, py::arg("mu"), py::arg("q"));
    m.def("mld", &mld, py::arg("series"), py::arg("q"));
    m.def("local_dimension", &local_dimension, py::arg("series"));
    m.def("local_dimension_at", &local_dimension_at, py::arg("series"), py::arg("size"));

    py::class_<ScoreVector>(m, "ScoreVector")
        .def_readonly("measure_id", &ScoreVector::measure_id)
        .def_readonly("scores", &ScoreVector::scores)
        .def_property_readonly("flagged",
                               [](const ScoreVector& s) {
                                   std::vector<bool> out(s.flagged.begin(), s.flagged.end());
                                   return out;
                               })
        .def_readonly("lower_is_better", &ScoreVector::lower_is_better)
        .def_readonly("reachable_only", &ScoreVector::reachable_only)
        .def_property_readonly("flagged_count", &ScoreVector::flagged_count);

    m.def(
        "score_all",
        [](const Graph& g, const DistanceMatrix& d, Measure measure, double q, bool inclusive) {
            return score_all(g, d, measure, {q, inclusive});
        },
        py::arg("graph"), py::arg("distances"), py::arg("measure"), py::arg("q") = 2.0,
        py::arg("inclusive") = true);
    m.def("betweenness", &betweenness, py::arg("graph"));
    m.def("closeness", &closeness, py::arg("graph"), py::arg("distances"));
    m.def("degree_centrality", &degree_centrality, py::arg("graph"));

    py::class_<RankTable>(m, "RankTable")
        .def_readonly("measure_id", &RankTable::measure_id)
        .def_readonly("order", &RankTable::order)
        .def_readonly("rank_of", &RankTable::rank_of)
        .def_readonly("rank_counts", &RankTable::rank_counts)
        .def_readonly("lower_is_better", &RankTable::lower_is_better)
        .def_property_readonly("num_ranks", &RankTable::num_ranks);
    m.def("rank", &rank, py::arg("scores"), py::arg("graph"));
    m.def("top_labels", &top_labels, py::arg("table"), py::arg("graph"), py::arg("k"));
    m.def("individuation", &individuation, py::arg("scores"), py::arg("epsilon") = 1e-9);
    m.def("rank_frequency", &rank_frequency, py::arg("table"));
    m.def("overlap", &overlap, py::arg("a"), py::arg("b"), py::arg("graph"), py::arg("k"));

    py::class_<Correlations>(m, "Correlations")
        .def_readonly("pearson", &Correlations::pearson)
        .def_readonly("kendall", &Correlations::kendall)
        .def_readonly("n", &Correlations::n);
    m.def("correlate", &correlate, py::arg("x"), py::arg("y"));

    py::class_<ScatterRecord>(m, "ScatterRecord")
        .def_readonly("label", &ScatterRecord::label)
        .def_readonly("x", &ScatterRecord::x)
        .def_readonly("y", &ScatterRecord::y)
        .def_readonly("ability", &ScatterRecord::ability);
    m.def("scatter_records", &scatter_records, py::arg("graph"), py::arg("x"), py::arg("y"),
          py::arg("ability"));

    py::class_<SiConfig>(m, "SiConfig")
        .def(py::init([](double lambda, int max_steps, int trials, std::uint64_t master_seed,
                         Exposure exposure, bool keep_trials) {
                 SiConfig cfg;
                 cfg.lambda = lambda;
                 cfg.max_steps = max_steps;
                 cfg.trials = trials;
                 cfg.master_seed = master_seed;
                 cfg.exposure = exposure;
                 cfg.keep_trials = keep_trials;
                 return cfg;
             }),
             py::arg("lambda_") = 0.05, py::arg("max_steps") = 30, py::arg("trials") = 30,
             py::arg("master_seed") = 42, py::arg("exposure") = Exposure::per_edge,
             py::arg("keep_trials") = false)
        .def_readwrite("lambda_", &SiConfig::lambda)
        .def_readwrite("max_steps", &SiConfig::max_steps)
        .def_readwrite("trials", &SiConfig::trials)
        .def_readwrite("master_seed", &SiConfig::master_seed)
        .def_readwrite("exposure", &SiConfig::exposure)
        .def_readwrite("keep_trials", &SiConfig::keep_trials);

    m.def("lambda_from_beta", &lambda_from_beta, py::arg("beta"));

    py::class_<SiTrace>(m, "SiTrace")
        .def_readonly("mean_f", &SiTrace::mean_f)
        .def_readonly("min_f", &SiTrace::min_f)
        .def_readonly("max_f", &SiTrace::max_f)
        .def_readonly("trials", &SiTrace::trials)
        .def_readonly("per_trial", &SiTrace::per_trial)
        .def_property_readonly("steps", &SiTrace::steps);

    m.def("si_run", &si_run, py::arg("graph"), py::arg("seeds"), py::arg("config"));
    m.def("seed_ability", &seed_ability, py::arg("graph"), py::arg("node"), py::arg("config"),
          py::arg("t_star"));
    m.def("all_abilities", &all_abilities, py::arg("graph"), py::arg("config"),
          py::arg("t_star"));
    m.def(
        "compare_seed_sets",
        [](const Graph& g, const std::vector<std::pair<std::string, std::vector<int>>>& sets,
           const SiConfig& cfg) {
            std::vector<NamedSeedSet> named;
            named.reserve(sets.size());
            for (const auto& [name, seeds] : sets) named.push_back({name, seeds});
            return compare_seed_sets(g, named, cfg);
        },
        py::arg("graph"), py::arg("seed_sets"), py::arg("config"));

    m.def("sha256_file", &sha256_file, py::arg("path"));

    m.attr("__version__") = kToolVersion;
}

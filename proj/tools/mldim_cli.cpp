#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mldim/centrality.hpp"
#include "mldim/dimension.hpp"
#include "mldim/distance.hpp"
#include "mldim/graph.hpp"
#include "mldim/output.hpp"
#include "mldim/ranking.hpp"
#include "mldim/si.hpp"

namespace fs = std::filesystem;
using namespace mldim;

namespace {

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string to_csv() const {
        std::string out = csv_row(header);
        for (const auto& r : rows) out += csv_row(r);
        return out;
    }

    std::string to_json() const {
        std::string out = "[\n";
        for (std::size_t i = 0; i < rows.size(); ++i) {
            out += "  {";
            for (std::size_t c = 0; c < header.size(); ++c) {
                if (c) out += ", ";
                out += "\"" + header[c] + "\": \"" + rows[i][c] + "\"";
            }
            out += i + 1 < rows.size() ? "},\n" : "}\n";
        }
        out += "]\n";
        return out;
    }
};

struct CommonOpts {
    std::string graph_path;
    std::string format = "auto";
    bool zero_based = false;
    std::string out_dir = ".";
    bool json_mirror = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("graph", opts.graph_path, "input network file")->required();
    cmd->add_option("--format", opts.format, "input format")
        ->check(CLI::IsMember({"auto", "pajek", "edgelist"}))
        ->capture_default_str();
    cmd->add_flag("--zero-based", opts.zero_based, "edge-list labels start at 0");
    cmd->add_option("--out", opts.out_dir, "output directory")->capture_default_str();
    cmd->add_flag("--json", opts.json_mirror, "also write .json mirrors of each CSV");
}

Graph load_input(const CommonOpts& opts) {
    if (opts.format == "pajek") return load_graph(opts.graph_path, GraphFormat::pajek);
    if (opts.format == "edgelist")
        return load_graph(opts.graph_path, GraphFormat::edge_list, opts.zero_based);
    return load_graph(opts.graph_path);
}

struct OutputSink {
    CommonOpts opts;
    RunManifest manifest;

    explicit OutputSink(const CommonOpts& common, const std::string& command)
        : opts(common) {
        manifest.command = command;
        manifest.input_path = common.graph_path;
        manifest.input_format = common.format;
        manifest.input_sha256 = sha256_file(common.graph_path);
        fs::create_directories(opts.out_dir);
    }

    void param(const std::string& key, const std::string& value) {
        manifest.params[key] = value;
    }

    void write(const std::string& name, const Table& table) {
        const fs::path path = fs::path(opts.out_dir) / name;
        write_text_file(path.string(), table.to_csv());
        manifest.outputs.push_back(name);
        if (opts.json_mirror) {
            fs::path jpath = path;
            jpath.replace_extension(".json");
            write_text_file(jpath.string(), table.to_json());
            manifest.outputs.push_back(jpath.filename().string());
        }
    }

    void finish() {
        const fs::path path = fs::path(opts.out_dir) / "manifest.json";
        write_text_file(path.string(), manifest.to_json());
    }
};

ScoreVector compute_measure(const Graph& g, const DistanceMatrix& d, Measure m,
                            const DimensionOptions& dim_opts) {
    switch (m) {
        case Measure::bc: return betweenness(g);
        case Measure::cc: return closeness(g, d);
        case Measure::dc: return degree_centrality(g);
        default: return score_all(g, d, m, dim_opts);
    }
}

double default_epsilon(Measure m) { return m == Measure::dc ? 0.0 : 1e-9; }

// ---------------------------------------------------------------- stats ----

int cmd_stats(const CommonOpts& common) {
    const Graph g = load_input(common);
    const DistanceMatrix d(g);
    const NetworkStats s = network_stats(g, d);

    std::printf("%-24s %6s %8s %10s %6s %10s %6s\n", "network", "|N|", "|E|", "<k>", "kmax",
                "<w>", "wmax");
    std::printf("%-24s %6d %8lld %10.4f %6d %10.4f %6d%s\n",
                fs::path(common.graph_path).filename().string().c_str(), s.node_count,
                static_cast<long long>(s.edge_count), s.mean_degree, s.max_degree,
                s.mean_distance, s.max_distance, s.disconnected ? "  (disconnected)" : "");

    OutputSink sink(common, "stats");
    Table t;
    t.header = {"network", "n", "e", "mean_degree", "max_degree", "mean_distance",
                "max_distance", "disconnected"};
    t.rows.push_back({fs::path(common.graph_path).filename().string(),
                      std::to_string(s.node_count), std::to_string(s.edge_count),
                      format_real(s.mean_degree), std::to_string(s.max_degree),
                      format_real(s.mean_distance), std::to_string(s.max_distance),
                      s.disconnected ? "1" : "0"});
    sink.write("stats.csv", t);
    sink.finish();
    return 0;
}

// ----------------------------------------------------------------- rank ----

std::string score_file_id(Measure m, double q) {
    return m == Measure::mld ? "mld_q" + format_q(q) : measure_name(m);
}

void emit_ranking(OutputSink& sink, const Graph& g, const ScoreVector& scores,
                  const RankTable& table, int k, double q, Measure m, double epsilon,
                  Table& individuation_rows) {
    const std::string id = score_file_id(m, q);

    Table topk;
    topk.header = {"rank", "label", "score"};
    const int limit = std::min<int>(k, g.node_count());
    for (int pos = 0; pos < limit; ++pos) {
        const int v = table.order[pos];
        topk.rows.push_back({std::to_string(table.rank_of[v]), std::to_string(g.label(v)),
                             scores.flagged[v] ? "nan" : format_real(scores.scores[v])});
    }
    sink.write("topk_" + id + ".csv", topk);

    Table full;
    full.header = {"label", "measure", "q", "score", "flagged"};
    for (int v = 0; v < g.node_count(); ++v) {
        full.rows.push_back({std::to_string(g.label(v)), measure_name(m),
                             m == Measure::mld ? format_q(q) : "",
                             scores.flagged[v] ? "nan" : format_real(scores.scores[v]),
                             scores.flagged[v] ? "1" : "0"});
    }
    sink.write("scores_" + id + ".csv", full);

    const double gamma = individuation(scores, epsilon);
    individuation_rows.rows.push_back({measure_name(m), m == Measure::mld ? format_q(q) : "",
                                       format_real(epsilon), format_real(gamma)});

    std::printf("top-%d by %s:", limit, scores.measure_id.c_str());
    for (int pos = 0; pos < limit; ++pos)
        std::printf(" %lld", static_cast<long long>(g.label(table.order[pos])));
    std::printf("\ngamma(%s) = %s%s\n", scores.measure_id.c_str(), format_real(gamma).c_str(),
                scores.reachable_only ? "  [warning: disconnected graph, reachable-only sums]"
                                      : "");
}

struct RankArgs {
    std::string measure = "mld";
    std::optional<double> q;
    std::string q_sweep;
    int k = 10;
    std::optional<double> epsilon;
    bool inclusive = true;
};

std::vector<double> parse_sweep(const std::string& spec) {
    double a = 0, b = 0, step = 0;
    if (std::sscanf(spec.c_str(), "%lf:%lf:%lf", &a, &b, &step) != 3 || step <= 0 || b < a)
        throw std::invalid_argument("bad --q-sweep, expected a:b:step with step>0");
    std::vector<double> qs;
    for (double q = a; q <= b + 1e-12; q += step) qs.push_back(q);
    return qs;
}

int cmd_rank(const CommonOpts& common, const RankArgs& args) {
    const Measure m = measure_from_name(args.measure);
    double q = 2.0;
    if (args.q) {
        q = *args.q;
    } else if (m == Measure::mld && args.q_sweep.empty()) {
        std::fprintf(stderr, "notice: --q not given for mld; using default q=2\n");
    }
    const double epsilon = args.epsilon ? *args.epsilon : default_epsilon(m);

    const Graph g = load_input(common);
    const DistanceMatrix d(g);

    OutputSink sink(common, "rank");
    sink.param("measure", args.measure);
    sink.param("k", std::to_string(args.k));
    sink.param("epsilon", format_real(epsilon));
    sink.param("inclusive_box", args.inclusive ? "true" : "false");

    Table individuation_rows;
    individuation_rows.header = {"measure", "q", "epsilon", "gamma"};

    std::vector<double> qs;
    if (!args.q_sweep.empty()) {
        if (m != Measure::mld)
            throw std::invalid_argument("--q-sweep applies to the mld measure only");
        qs = parse_sweep(args.q_sweep);
        sink.param("q_sweep", args.q_sweep);
    } else {
        qs = {q};
        if (m == Measure::mld) sink.param("q", format_q(q));
    }

    for (double qi : qs) {
        const ScoreVector scores = compute_measure(g, d, m, {qi, args.inclusive});
        const RankTable table = rank(scores, g);
        emit_ranking(sink, g, scores, table, args.k, qi, m, epsilon, individuation_rows);
    }
    sink.write("individuation.csv", individuation_rows);
    sink.finish();
    return 0;
}

// ------------------------------------------------------------------- si ----

struct SiArgs {
    std::vector<std::string> seed_specs;
    std::optional<double> beta;
    std::optional<double> lambda;
    int trials = 30;
    int steps = 30;
    std::uint64_t seed = 42;
    std::string exposure = "per-edge";
    double q = 2.0;
    bool inclusive = true;
};

std::vector<int> resolve_seed_spec(const std::string& spec, const Graph& g,
                                   const DistanceMatrix& d, double q, bool inclusive) {
    int k = 0;
    char measure_buf[16] = {0};
    if (std::sscanf(spec.c_str(), "top%d:%15s", &k, measure_buf) == 2) {
        if (k < 1 || k > g.node_count())
            throw std::invalid_argument("top-k seed spec outside 1..|N|: " + spec);
        const Measure m = measure_from_name(measure_buf);
        const ScoreVector scores = compute_measure(g, d, m, {q, inclusive});
        const RankTable table = rank(scores, g);
        return {table.order.begin(), table.order.begin() + k};
    }
    std::vector<int> seeds;
    std::string token;
    std::istringstream iss(spec);
    while (std::getline(iss, token, ',')) {
        if (token.empty()) continue;
        seeds.push_back(g.index_of(std::stoll(token)));
    }
    if (seeds.empty()) throw std::invalid_argument("empty seed spec");
    return seeds;
}

int cmd_si(const CommonOpts& common, const SiArgs& args) {
    if (args.beta && args.lambda)
        throw std::invalid_argument("--beta and --lambda are mutually exclusive");
    SiConfig cfg;
    cfg.lambda = args.lambda ? *args.lambda : lambda_from_beta(args.beta ? *args.beta : 3.0);
    cfg.max_steps = args.steps;
    cfg.trials = args.trials;
    cfg.master_seed = args.seed;
    cfg.exposure = args.exposure == "single" ? Exposure::single : Exposure::per_edge;

    const Graph g = load_input(common);
    const DistanceMatrix d(g);

    std::vector<NamedSeedSet> sets;
    for (const auto& spec : args.seed_specs)
        sets.push_back({spec, resolve_seed_spec(spec, g, d, args.q, args.inclusive)});

    const auto traces = compare_seed_sets(g, sets, cfg);

    OutputSink sink(common, "si");
    sink.param("lambda", format_real(cfg.lambda));
    if (args.beta) sink.param("beta", format_real(*args.beta));
    sink.param("trials", std::to_string(cfg.trials));
    sink.param("steps", std::to_string(cfg.max_steps));
    sink.param("master_seed", std::to_string(cfg.master_seed));
    sink.param("exposure", args.exposure);

    Table t;
    t.header = {"t", "mean_f", "min_f", "max_f", "trials", "lambda", "seed_set_name"};
    for (std::size_t i = 0; i < sets.size(); ++i) {
        for (int step = 0; step <= cfg.max_steps; ++step) {
            t.rows.push_back({std::to_string(step), format_real(traces[i].mean_f[step]),
                              std::to_string(traces[i].min_f[step]),
                              std::to_string(traces[i].max_f[step]),
                              std::to_string(cfg.trials), format_real(cfg.lambda),
                              sets[i].name});
        }
        std::printf("%s: F(0)=%g F(%d)=%g\n", sets[i].name.c_str(), traces[i].mean_f.front(),
                    cfg.max_steps, traces[i].mean_f.back());
    }
    sink.write("traces.csv", t);
    sink.finish();
    return 0;
}

// -------------------------------------------------------------- scatter ----

struct ScatterArgs {
    std::string x = "mld";
    std::string y = "cc";
    double q = 2.0;
    double lambda = 0.05;
    int trials = 50;
    int t_star = 10;
    std::uint64_t seed = 42;
    bool inclusive = true;
};

int cmd_scatter(const CommonOpts& common, const ScatterArgs& args) {
    const Measure mx = measure_from_name(args.x);
    const Measure my = measure_from_name(args.y);

    const Graph g = load_input(common);
    const DistanceMatrix d(g);
    const ScoreVector xs = compute_measure(g, d, mx, {args.q, args.inclusive});
    const ScoreVector ys = compute_measure(g, d, my, {args.q, args.inclusive});

    SiConfig cfg;
    cfg.lambda = args.lambda;
    cfg.max_steps = args.t_star;
    cfg.trials = args.trials;
    cfg.master_seed = args.seed;
    const auto ability = all_abilities(g, cfg, args.t_star);
    const auto records = scatter_records(g, xs, ys, ability);
    const Correlations corr = correlate(xs, ys);

    OutputSink sink(common, "scatter");
    sink.param("x", xs.measure_id);
    sink.param("y", ys.measure_id);
    sink.param("lambda", format_real(args.lambda));
    sink.param("trials", std::to_string(args.trials));
    sink.param("t_star", std::to_string(args.t_star));
    sink.param("master_seed", std::to_string(args.seed));

    Table t;
    t.header = {"label", xs.measure_id, ys.measure_id,
                "F" + std::to_string(args.t_star) + "_lambda" + format_real(args.lambda) +
                    "_trials" + std::to_string(args.trials)};
    for (const auto& r : records)
        t.rows.push_back({std::to_string(r.label), format_real(r.x), format_real(r.y),
                          format_real(r.ability)});
    sink.write("scatter.csv", t);

    Table c;
    c.header = {"x", "y", "pearson", "kendall_tau_b", "n"};
    c.rows.push_back({xs.measure_id, ys.measure_id, format_real(corr.pearson),
                      format_real(corr.kendall), std::to_string(corr.n)});
    sink.write("correlations.csv", c);
    sink.finish();

    std::printf("pearson(%s, %s) = %s\n", xs.measure_id.c_str(), ys.measure_id.c_str(),
                format_real(corr.pearson).c_str());
    std::printf("kendall_tau_b(%s, %s) = %s\n", xs.measure_id.c_str(), ys.measure_id.c_str(),
                format_real(corr.kendall).c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"multi-local-dimension network analysis"};
    app.require_subcommand(1);

    CommonOpts stats_common;
    CLI::App* stats = app.add_subcommand("stats", "network summary statistics");
    add_common(stats, stats_common);

    CommonOpts rank_common;
    RankArgs rank_args;
    CLI::App* rank_cmd = app.add_subcommand("rank", "score and rank nodes by a measure");
    add_common(rank_cmd, rank_common);
    rank_cmd->add_option("--measure", rank_args.measure, "mld|ld|bc|cc|dc")
        ->check(CLI::IsMember({"mld", "ld", "bc", "cc", "dc"}))
        ->capture_default_str();
    rank_cmd->add_option("--q", rank_args.q, "weighting exponent for mld");
    rank_cmd->add_option("--q-sweep", rank_args.q_sweep, "a:b:step grid of q values");
    rank_cmd->add_option("--k", rank_args.k, "top-k size")->capture_default_str();
    rank_cmd->add_option("--epsilon", rank_args.epsilon,
                         "score-equality tolerance for individuation");
    rank_cmd->add_option("--inclusive-box", rank_args.inclusive,
                         "box membership: distance <= size (true) or < size (false)")
        ->capture_default_str();

    CommonOpts si_common;
    SiArgs si_args;
    CLI::App* si_cmd = app.add_subcommand("si", "susceptible-infected spreading simulation");
    add_common(si_cmd, si_common);
    si_cmd->add_option("--seeds", si_args.seed_specs,
                       "seed set: comma-separated labels or top<k>:<measure> (repeatable)")
        ->required();
    auto* beta_opt = si_cmd->add_option("--beta", si_args.beta, "lambda = (1/2)^beta");
    si_cmd->add_option("--lambda", si_args.lambda, "infection probability")->excludes(beta_opt);
    si_cmd->add_option("--trials", si_args.trials, "trial count")->capture_default_str();
    si_cmd->add_option("--steps", si_args.steps, "simulated steps")->capture_default_str();
    si_cmd->add_option("--seed", si_args.seed, "master RNG seed")->capture_default_str();
    si_cmd->add_option("--exposure", si_args.exposure, "multi-neighbor exposure model")
        ->check(CLI::IsMember({"per-edge", "single"}))
        ->capture_default_str();
    si_cmd->add_option("--q", si_args.q, "q for mld seed specs")->capture_default_str();
    si_cmd->add_option("--inclusive-box", si_args.inclusive, "box membership rule")
        ->capture_default_str();

    CommonOpts scatter_common;
    ScatterArgs scatter_args;
    CLI::App* scatter_cmd =
        app.add_subcommand("scatter", "cross-measure scatter with spreading ability");
    add_common(scatter_cmd, scatter_common);
    scatter_cmd->add_option("--x", scatter_args.x, "x-axis measure")->capture_default_str();
    scatter_cmd->add_option("--y", scatter_args.y, "y-axis measure")->capture_default_str();
    scatter_cmd->add_option("--q", scatter_args.q, "q for mld")->capture_default_str();
    scatter_cmd->add_option("--lambda", scatter_args.lambda, "infection probability")
        ->capture_default_str();
    scatter_cmd->add_option("--trials", scatter_args.trials, "trial count")
        ->capture_default_str();
    scatter_cmd->add_option("--t-star", scatter_args.t_star, "ability evaluation step")
        ->capture_default_str();
    scatter_cmd->add_option("--seed", scatter_args.seed, "master RNG seed")
        ->capture_default_str();
    scatter_cmd->add_option("--inclusive-box", scatter_args.inclusive, "box membership rule")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
        if (stats->parsed()) return cmd_stats(stats_common);
        if (rank_cmd->parsed()) return cmd_rank(rank_common, rank_args);
        if (si_cmd->parsed()) return cmd_si(si_common, si_args);
        if (scatter_cmd->parsed()) return cmd_scatter(scatter_common, scatter_args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "error[usage]: %s\n", e.what());
        return 2;
    } catch (const ParseError& e) {
        std::fprintf(stderr, "error[parse]: %s\n", e.what());
        return 3;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error[domain]: %s\n", e.what());
        return 5;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error[domain]: %s\n", e.what());
        return 5;
    } catch (const std::out_of_range& e) {
        std::fprintf(stderr, "error[domain]: %s\n", e.what());
        return 5;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error[io]: %s\n", e.what());
        return 4;
    }
    return 0;
}

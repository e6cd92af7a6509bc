#include "mldim/si.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace mldim {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

std::uint64_t sm_mix(std::uint64_t z) {
    z += kGolden;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::uint64_t absorb(std::uint64_t h, std::uint64_t w) { return sm_mix(h + w * kGolden); }

// One uniform per (trial, step, node), a pure function of the key. Keyed
// draws rather than sequential streams keep every trial schedule-independent
// and align the randomness across compared seed sets at each (node, step).
double uniform_draw(std::uint64_t master, std::uint64_t trial, std::uint64_t step,
                    std::uint64_t node) {
    std::uint64_t h = sm_mix(master);
    h = absorb(h, trial);
    h = absorb(h, step);
    h = absorb(h, node);
    return static_cast<double>(h >> 11) * (1.0 / 9007199254740992.0);  // 2^53
}

void check_config(const SiConfig& cfg) {
    if (cfg.lambda < 0.0 || cfg.lambda > 1.0)
        throw std::invalid_argument("infection probability must lie in [0,1]");
    if (cfg.max_steps < 0) throw std::invalid_argument("max_steps must be nonnegative");
    if (cfg.trials < 1) throw std::invalid_argument("trials must be at least 1");
}

}  // namespace

double lambda_from_beta(double beta) { return std::pow(0.5, beta); }

SiTrace si_run(const Graph& g, const std::vector<int>& seeds, const SiConfig& cfg) {
    check_config(cfg);
    const int n = g.node_count();
    if (seeds.empty()) throw std::invalid_argument("seed set is empty");
    for (int s : seeds)
        if (s < 0 || s >= n) throw std::out_of_range("seed node index out of range");

    const int T = cfg.max_steps;
    SiTrace trace;
    trace.trials = cfg.trials;
    trace.mean_f.assign(T + 1, 0.0);
    trace.min_f.assign(T + 1, n + 1);
    trace.max_f.assign(T + 1, 0);

    std::vector<char> infected(n), snapshot(n);
    std::vector<int> counts(T + 1);

    for (int trial = 0; trial < cfg.trials; ++trial) {
        std::fill(infected.begin(), infected.end(), 0);
        for (int s : seeds) infected[s] = 1;
        int count = 0;
        for (char c : infected) count += c;
        counts[0] = count;

        for (int step = 1; step <= T; ++step) {
            snapshot.assign(infected.begin(), infected.end());
            if (count < n && cfg.lambda > 0.0) {
                for (int v = 0; v < n; ++v) {
                    if (snapshot[v]) continue;
                    int m = 0;
                    for (int w : g.neighbors(v)) m += snapshot[w];
                    if (m == 0) continue;
                    const double p = cfg.exposure == Exposure::per_edge
                                         ? 1.0 - std::pow(1.0 - cfg.lambda, m)
                                         : cfg.lambda;
                    if (uniform_draw(cfg.master_seed, trial, step, v) < p) {
                        infected[v] = 1;
                        ++count;
                    }
                }
            }
            counts[step] = count;
        }

        for (int t = 0; t <= T; ++t) {
            trace.mean_f[t] += counts[t];
            trace.min_f[t] = std::min(trace.min_f[t], counts[t]);
            trace.max_f[t] = std::max(trace.max_f[t], counts[t]);
        }
        if (cfg.keep_trials) trace.per_trial.push_back(counts);
    }
    for (double& v : trace.mean_f) v /= cfg.trials;
    return trace;
}

double seed_ability(const Graph& g, int node, const SiConfig& cfg, int t_star) {
    if (t_star < 0 || t_star > cfg.max_steps)
        throw std::invalid_argument("t_star outside 0..max_steps");
    SiConfig local = cfg;
    local.max_steps = t_star;  // later steps cannot change F(t_star)
    local.keep_trials = false;
    return si_run(g, {node}, local).mean_f[t_star];
}

std::vector<double> all_abilities(const Graph& g, const SiConfig& cfg, int t_star) {
    std::vector<double> out(g.node_count());
    for (int v = 0; v < g.node_count(); ++v) out[v] = seed_ability(g, v, cfg, t_star);
    return out;
}

std::vector<SiTrace> compare_seed_sets(const Graph& g,
                                       const std::vector<NamedSeedSet>& seed_sets,
                                       const SiConfig& cfg) {
    std::vector<SiTrace> traces;
    traces.reserve(seed_sets.size());
    for (const auto& set : seed_sets) traces.push_back(si_run(g, set.seeds, cfg));
    return traces;
}

}  // namespace mldim

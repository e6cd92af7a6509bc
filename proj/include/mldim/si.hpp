#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mldim/graph.hpp"

namespace mldim {

/// How a susceptible node with m infected neighbors catches the infection:
/// one independent attempt per infected neighbor (probability 1-(1-lambda)^m),
/// or a single attempt at probability lambda whenever m >= 1.
enum class Exposure { per_edge, single };

struct SiConfig {
    double lambda = 0.05;
    int max_steps = 30;
    int trials = 30;
    std::uint64_t master_seed = 42;
    Exposure exposure = Exposure::per_edge;
    bool keep_trials = false;  // retain the per-trial count matrix
};

double lambda_from_beta(double beta);  // (1/2)^beta

/// Trial-averaged infection counts. F(0) = |seed set|; every per-trial curve
/// is nondecreasing and capped at the node count.
struct SiTrace {
    std::vector<double> mean_f;              // index t = 0..max_steps
    std::vector<int> min_f;
    std::vector<int> max_f;
    int trials = 0;
    std::vector<std::vector<int>> per_trial; // filled when keep_trials set

    int steps() const { return static_cast<int>(mean_f.size()) - 1; }
};

/// Synchronous SI spread from the given seed nodes (internal indices).
///
/// All randomness is a pure function of (master_seed, trial, step, node), so
/// traces are bit-identical across runs and schedules, trials use common
/// random numbers across compared seed sets, and a superset of seeds
/// dominates its subset pathwise.
SiTrace si_run(const Graph& g, const std::vector<int>& seeds, const SiConfig& cfg);

/// Mean infected count at step t_star when seeding {node} alone.
double seed_ability(const Graph& g, int node, const SiConfig& cfg, int t_star);

/// seed_ability for every node (the scatter color field).
std::vector<double> all_abilities(const Graph& g, const SiConfig& cfg, int t_star);

struct NamedSeedSet {
    std::string name;
    std::vector<int> seeds;  // internal indices
};

/// One trace per set under identical per-trial random streams.
std::vector<SiTrace> compare_seed_sets(const Graph& g,
                                       const std::vector<NamedSeedSet>& seed_sets,
                                       const SiConfig& cfg);

}  // namespace mldim

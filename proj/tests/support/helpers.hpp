#pragma once

#include <random>
#include <string>
#include <vector>

#include "mldim/graph.hpp"

namespace testsupport {

mldim::Graph path_graph(int n);
mldim::Graph cycle_graph(int n);
mldim::Graph star_graph(int leaves);  // center label 1
mldim::Graph complete_graph(int n);
mldim::Graph grid_graph(int rows, int cols);  // label = row * cols + col + 1

/// G(n,p) with labels 1..n declared, so isolated nodes and disconnected
/// graphs occur naturally.
mldim::Graph random_gnp(std::mt19937& rng, int n, double p);

std::string data_file(const std::string& name);  // under $MLDIM_DATA_DIR
bool data_file_exists(const std::string& name);

// Independent oracles. These deliberately avoid the library's BFS/Brandes
// code paths.
std::vector<std::vector<int>> floyd_warshall(const mldim::Graph& g);  // -1 unreachable
std::vector<double> exhaustive_betweenness(const mldim::Graph& g);
double naive_ols_slope(const std::vector<double>& x, const std::vector<double>& y);

}  // namespace testsupport

#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace mldim {

/// Original node identifier as it appears in the source file.
using Label = std::int64_t;

/// Input failure with 1-based line context where available (0 = unknown).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, int line = 0)
        : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + message
                                      : message),
          line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

enum class GraphFormat { pajek, edge_list };

/// Immutable undirected simple unweighted graph in CSR form.
///
/// Internal node ids are dense and 0-based; the original labels are kept and
/// used for all external I/O. Construction cleans the input: arcs are
/// symmetrized, parallel edges collapsed, self-loops dropped.
class Graph {
public:
    /// Build from raw (possibly dirty) endpoint pairs. `declared_nodes` adds
    /// nodes that must exist even when they carry no edge (Pajek vertices).
    static Graph from_edges(const std::vector<std::pair<Label, Label>>& edges,
                            const std::vector<Label>& declared_nodes = {});

    int node_count() const { return static_cast<int>(labels_.size()); }
    std::int64_t edge_count() const { return edge_count_; }

    std::span<const int> neighbors(int v) const {
        return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
    }
    int degree(int v) const { return offsets_[v + 1] - offsets_[v]; }

    Label label(int v) const { return labels_[v]; }
    const std::vector<Label>& labels() const { return labels_; }
    bool has_label(Label l) const { return index_.count(l) != 0; }
    int index_of(Label l) const;

    /// Checks CSR symmetry, sortedness, and the degree-sum identity.
    void validate() const;

    /// Pajek text; requires labels to be exactly 1..n.
    std::string to_pajek() const;
    /// One "u v" line per edge; requires no isolated nodes.
    std::string to_edge_list() const;

private:
    std::vector<int> offsets_{0};
    std::vector<int> adj_;
    std::vector<Label> labels_;
    std::unordered_map<Label, int> index_;
    std::int64_t edge_count_ = 0;
};

Graph parse_pajek(std::istream& in);
Graph parse_edge_list(std::istream& in, bool zero_based = false);
Graph parse_graph(std::istream& in, GraphFormat format, bool zero_based = false);

/// Reads the file, sniffing Pajek vs edge list from the leading '*' keyword.
Graph load_graph(const std::string& path);
Graph load_graph(const std::string& path, GraphFormat format, bool zero_based = false);

}  // namespace mldim

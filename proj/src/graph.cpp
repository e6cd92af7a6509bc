#include "mldim/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>

namespace mldim {

namespace {

std::string lower(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

void strip_cr(std::string& line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
}

bool blank_or_comment(const std::string& line, char comment_char) {
    for (char c : line) {
        if (c == comment_char) return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

bool parse_int(const std::string& token, Label& out) {
    if (token.empty()) return false;
    std::size_t pos = 0;
    try {
        out = std::stoll(token, &pos);
    } catch (const std::exception&) {
        return false;
    }
    return pos == token.size();
}

std::vector<std::string> split_ws(const std::string& line) {
    std::vector<std::string> tokens;
    std::istringstream iss(line);
    std::string tok;
    while (iss >> tok) tokens.push_back(tok);
    return tokens;
}

}  // namespace

Graph Graph::from_edges(const std::vector<std::pair<Label, Label>>& edges,
                        const std::vector<Label>& declared_nodes) {
    std::set<Label> node_set(declared_nodes.begin(), declared_nodes.end());
    std::set<std::pair<Label, Label>> unique_edges;
    for (const auto& [u, v] : edges) {
        node_set.insert(u);
        node_set.insert(v);
        if (u == v) continue;  // drop self-loops
        unique_edges.insert({std::min(u, v), std::max(u, v)});
    }
    if (node_set.empty()) throw ParseError("empty graph");

    Graph g;
    g.labels_.assign(node_set.begin(), node_set.end());
    g.index_.reserve(g.labels_.size());
    for (int i = 0; i < static_cast<int>(g.labels_.size()); ++i) g.index_[g.labels_[i]] = i;
    g.edge_count_ = static_cast<std::int64_t>(unique_edges.size());

    const int n = g.node_count();
    std::vector<int> deg(n, 0);
    for (const auto& [u, v] : unique_edges) {
        ++deg[g.index_.at(u)];
        ++deg[g.index_.at(v)];
    }
    g.offsets_.assign(n + 1, 0);
    for (int i = 0; i < n; ++i) g.offsets_[i + 1] = g.offsets_[i] + deg[i];
    g.adj_.resize(g.offsets_[n]);
    std::vector<int> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (const auto& [u, v] : unique_edges) {
        const int a = g.index_.at(u), b = g.index_.at(v);
        g.adj_[cursor[a]++] = b;
        g.adj_[cursor[b]++] = a;
    }
    for (int i = 0; i < n; ++i)
        std::sort(g.adj_.begin() + g.offsets_[i], g.adj_.begin() + g.offsets_[i + 1]);
    return g;
}

int Graph::index_of(Label l) const {
    auto it = index_.find(l);
    if (it == index_.end())
        throw std::out_of_range("unknown node label " + std::to_string(l));
    return it->second;
}

void Graph::validate() const {
    const int n = node_count();
    std::int64_t half_edges = 0;
    for (int v = 0; v < n; ++v) {
        auto nb = neighbors(v);
        half_edges += static_cast<std::int64_t>(nb.size());
        for (std::size_t k = 0; k < nb.size(); ++k) {
            const int w = nb[k];
            if (w == v) throw std::logic_error("self-loop in adjacency");
            if (k > 0 && nb[k - 1] >= w) throw std::logic_error("unsorted or duplicate neighbor");
            auto back = neighbors(w);
            if (!std::binary_search(back.begin(), back.end(), v))
                throw std::logic_error("asymmetric adjacency");
        }
    }
    if (half_edges != 2 * edge_count_) throw std::logic_error("degree sum != 2|E|");
    if (static_cast<int>(index_.size()) != n) throw std::logic_error("label map not a bijection");
}

std::string Graph::to_pajek() const {
    const int n = node_count();
    for (int v = 0; v < n; ++v)
        if (labels_[v] != v + 1)
            throw std::logic_error("pajek serialization requires labels 1..n");
    std::ostringstream out;
    out << "*Vertices " << n << "\n*Edges\n";
    for (int v = 0; v < n; ++v)
        for (int w : neighbors(v))
            if (v < w) out << labels_[v] << ' ' << labels_[w] << '\n';
    return out.str();
}

std::string Graph::to_edge_list() const {
    std::ostringstream out;
    for (int v = 0; v < node_count(); ++v) {
        if (degree(v) == 0)
            throw std::logic_error("edge-list serialization cannot express isolated nodes");
        for (int w : neighbors(v))
            if (v < w) out << labels_[v] << ' ' << labels_[w] << '\n';
    }
    return out.str();
}

namespace {

enum class PajekSection { preamble, vertices, pairs, pair_lists };

}  // namespace

Graph parse_pajek(std::istream& in) {
    std::string line;
    int lineno = 0;
    Label declared_n = -1;
    PajekSection section = PajekSection::preamble;
    std::vector<std::pair<Label, Label>> edges;

    auto check_id = [&](Label id) {
        if (id < 1 || id > declared_n)
            throw ParseError("vertex id " + std::to_string(id) + " outside declared range 1.." +
                                 std::to_string(declared_n),
                             lineno);
    };

    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (blank_or_comment(line, '%')) continue;

        if (line[0] == '*') {
            const auto tokens = split_ws(line);
            const std::string keyword = lower(tokens[0]);
            if (keyword == "*network") {
                continue;
            } else if (keyword == "*vertices") {
                if (tokens.size() < 2 || !parse_int(tokens[1], declared_n) || declared_n < 0)
                    throw ParseError("malformed *Vertices header", lineno);
                section = PajekSection::vertices;
            } else if (keyword == "*edges" || keyword == "*arcs") {
                if (declared_n < 0) throw ParseError("*Vertices header missing", lineno);
                section = PajekSection::pairs;
            } else if (keyword == "*edgeslist" || keyword == "*arcslist") {
                if (declared_n < 0) throw ParseError("*Vertices header missing", lineno);
                section = PajekSection::pair_lists;
            } else {
                throw ParseError("unsupported section " + tokens[0], lineno);
            }
            continue;
        }

        switch (section) {
            case PajekSection::preamble:
                throw ParseError("expected *Vertices header", lineno);
            case PajekSection::vertices: {
                // "id" optionally followed by a name and coordinates; ids only checked.
                std::istringstream iss(line);
                std::string tok;
                iss >> tok;
                Label id;
                if (!parse_int(tok, id)) throw ParseError("malformed vertex line", lineno);
                check_id(id);
                break;
            }
            case PajekSection::pairs: {
                const auto tokens = split_ws(line);
                if (tokens.size() < 2) throw ParseError("edge line needs two endpoints", lineno);
                Label u, v;
                if (!parse_int(tokens[0], u) || !parse_int(tokens[1], v))
                    throw ParseError("malformed edge endpoints", lineno);
                check_id(u);
                check_id(v);
                edges.emplace_back(u, v);  // trailing weight tokens ignored
                break;
            }
            case PajekSection::pair_lists: {
                const auto tokens = split_ws(line);
                Label u;
                if (!parse_int(tokens[0], u)) throw ParseError("malformed adjacency list", lineno);
                check_id(u);
                for (std::size_t k = 1; k < tokens.size(); ++k) {
                    Label v;
                    if (!parse_int(tokens[k], v))
                        throw ParseError("malformed adjacency list", lineno);
                    check_id(v);
                    edges.emplace_back(u, v);
                }
                break;
            }
        }
    }

    if (declared_n < 0) throw ParseError("*Vertices header missing");
    if (declared_n == 0) throw ParseError("empty graph");
    std::vector<Label> declared(static_cast<std::size_t>(declared_n));
    for (Label i = 0; i < declared_n; ++i) declared[static_cast<std::size_t>(i)] = i + 1;
    return Graph::from_edges(edges, declared);
}

Graph parse_edge_list(std::istream& in, bool zero_based) {
    std::string line;
    int lineno = 0;
    std::vector<std::pair<Label, Label>> edges;
    const Label min_id = zero_based ? 0 : 1;

    while (std::getline(in, line)) {
        ++lineno;
        strip_cr(line);
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        if (tokens.size() < 2) throw ParseError("edge line needs two endpoints", lineno);
        Label u, v;
        if (!parse_int(tokens[0], u) || !parse_int(tokens[1], v))
            throw ParseError("malformed edge endpoints", lineno);
        if (u < min_id || v < min_id)
            throw ParseError(zero_based ? "negative node identifier"
                                        : "node identifiers must be positive (0 seen; "
                                          "zero-based input?)",
                             lineno);
        edges.emplace_back(u, v);
    }
    if (edges.empty()) throw ParseError("empty graph");
    return Graph::from_edges(edges);
}

Graph parse_graph(std::istream& in, GraphFormat format, bool zero_based) {
    return format == GraphFormat::pajek ? parse_pajek(in) : parse_edge_list(in, zero_based);
}

namespace {

GraphFormat sniff_format(std::istream& in) {
    std::string line;
    while (std::getline(in, line)) {
        strip_cr(line);
        if (blank_or_comment(line, '#') || blank_or_comment(line, '%')) continue;
        return line[0] == '*' ? GraphFormat::pajek : GraphFormat::edge_list;
    }
    return GraphFormat::edge_list;
}

}  // namespace

Graph load_graph(const std::string& path, GraphFormat format, bool zero_based) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    return parse_graph(in, format, zero_based);
}

Graph load_graph(const std::string& path) {
    GraphFormat format;
    {
        std::ifstream probe(path);
        if (!probe) throw ParseError("cannot open " + path);
        format = sniff_format(probe);
    }
    return load_graph(path, format, false);
}

}  // namespace mldim

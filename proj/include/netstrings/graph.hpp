#pragma once

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "netstrings/errors.hpp"
#include "netstrings/matrix.hpp"

namespace netstrings {

using Edge = std::pair<int, int>; // stored as (min, max)

// Simple undirected graph: symmetric 0/1 adjacency, zero diagonal, no
// multi-edges. Nodes are contiguous 0-based indices. Immutable once built;
// safe to share across threads.
class Graph {
public:
    // `edges` may contain duplicates and either orientation; they are
    // normalized and collapsed. Self-loops are rejected.
    Graph(int n_nodes, std::vector<Edge> edges) : n_(n_nodes) {
        if (n_nodes <= 0) throw validation_error("graph must have at least one node");
        adj_.assign(static_cast<std::size_t>(n_) * n_, 0);
        for (auto& [u, v] : edges) {
            if (u < 0 || v < 0 || u >= n_ || v >= n_)
                throw validation_error("edge endpoint out of range: " + std::to_string(u) +
                                       " " + std::to_string(v));
            if (u == v)
                throw validation_error("self-loop forbidden at node " + std::to_string(u));
            if (u > v) std::swap(u, v);
        }
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
        edges_ = std::move(edges);
        neighbors_.assign(n_, {});
        for (const auto& [u, v] : edges_) {
            at(u, v) = 1;
            at(v, u) = 1;
            neighbors_[u].push_back(v);
            neighbors_[v].push_back(u);
        }
        for (auto& nb : neighbors_) std::sort(nb.begin(), nb.end());
    }

    int node_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; } // sorted (min, max)

    bool has_edge(int u, int v) const { return at(u, v) != 0; }
    const std::vector<int>& neighbors(int u) const { return neighbors_[u]; }
    int degree(int u) const { return static_cast<int>(neighbors_[u].size()); }

    DenseIntMatrix adjacency_matrix() const {
        DenseIntMatrix a(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) a(i, j) = at(i, j);
        return a;
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    std::uint8_t& at(int i, int j) { return adj_[static_cast<std::size_t>(i) * n_ + j]; }
    std::uint8_t at(int i, int j) const { return adj_[static_cast<std::size_t>(i) * n_ + j]; }

    int n_ = 0;
    std::vector<std::uint8_t> adj_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> neighbors_;
};

namespace detail {

inline int parse_node_index(std::string_view token, int line_no) {
    int value = 0;
    const auto* begin = token.data();
    const auto* end = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end)
        throw parse_error("line " + std::to_string(line_no) + ": expected node index, got '" +
                          std::string(token) + "'");
    if (value < 0)
        throw parse_error("line " + std::to_string(line_no) + ": negative node index");
    return value;
}

inline std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

} // namespace detail

// Parses the edge-list format: one "u v" pair per line, '#' comment lines,
// blank lines ignored. An optional "# nodes N" header can raise the node
// count above 1 + max index (it never lowers it).
inline Graph from_edge_list(std::string_view text) {
    std::vector<Edge> edges;
    int declared_nodes = 0;
    int max_index = -1;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? std::string_view::npos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;
        if (!line.empty() && line.front() == '#') {
            auto tokens = detail::split_ws(line.substr(1));
            if (tokens.size() == 2 && tokens[0] == "nodes")
                declared_nodes = std::max(declared_nodes, detail::parse_node_index(tokens[1], line_no));
            continue;
        }
        auto tokens = detail::split_ws(line);
        if (tokens.empty()) continue;
        if (tokens.size() != 2)
            throw parse_error("line " + std::to_string(line_no) + ": expected 'u v'");
        const int u = detail::parse_node_index(tokens[0], line_no);
        const int v = detail::parse_node_index(tokens[1], line_no);
        if (u == v)
            throw validation_error("line " + std::to_string(line_no) + ": self-loop " +
                                   std::to_string(u) + " " + std::to_string(u));
        edges.emplace_back(u, v);
        max_index = std::max({max_index, u, v});
    }
    const int n = std::max(declared_nodes, max_index + 1);
    if (n <= 0) throw validation_error("edge list describes no nodes");
    return Graph(n, std::move(edges));
}

// Inverse of from_edge_list, bit-exact: "# nodes N" header, then edges
// sorted lexicographically by (min, max) endpoint.
inline std::string to_edge_list(const Graph& g) {
    std::string out = "# nodes " + std::to_string(g.node_count()) + "\n";
    for (const auto& [u, v] : g.edges())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

// A^n by repeated checked multiplication. Overflow reports the offending power.
inline DenseIntMatrix adjacency_power(const Graph& g, int n) {
    if (n < 1) throw range_error("adjacency power requires n >= 1");
    DenseIntMatrix a = g.adjacency_matrix();
    DenseIntMatrix result = a;
    for (int k = 2; k <= n; ++k) {
        const std::string what = "A^" + std::to_string(k);
        result = result.multiply(a, what.c_str());
    }
    return result;
}

inline std::vector<int> degree_sequence(const Graph& g) {
    std::vector<int> deg(g.node_count());
    for (int i = 0; i < g.node_count(); ++i) deg[i] = g.degree(i);
    return deg;
}

// Size of the largest connected component (metadata for generated graphs;
// disconnected outputs are kept whole).
inline int largest_component_size(const Graph& g) {
    const int n = g.node_count();
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    int best = 0;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        int size = 0;
        stack.push_back(s);
        seen[s] = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            ++size;
            for (int v : g.neighbors(u)) {
                if (!seen[v]) {
                    seen[v] = 1;
                    stack.push_back(v);
                }
            }
        }
        best = std::max(best, size);
    }
    return best;
}

} // namespace netstrings

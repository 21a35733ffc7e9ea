#pragma once

#include <cassert>
#include <sstream>
#include <string>
#include <vector>

#include "netstrings/graph.hpp"
#include "netstrings/matrix.hpp"
#include "netstrings/parallel.hpp"

namespace netstrings {

// Default ceiling on the string length in edges. Covers q <= 7 experiments
// with one spare; raising it past kHardMaxStringEdges is refused because the
// enumeration cost grows geometrically.
inline constexpr int kDefaultMaxStringEdges = 8;
inline constexpr int kHardMaxStringEdges = 10;

struct CountOptions {
    int max_edges = kDefaultMaxStringEdges;
    int workers = 0; // 0 = hardware concurrency
};

// R^n: entry (i, j) with i != j counts simple paths of exactly n edges
// between i and j; entry (i, i) counts directed traversals of n-cycles
// through i (each cycle contributes 2, once per direction). Symmetric,
// even diagonal; R^1 equals the adjacency matrix and R^2 has a zero
// diagonal (a closed 2-walk reuses its edge, so it is not a polygon).
struct StringCountMatrix {
    int n_edges = 0;
    DenseIntMatrix counts;

    bool operator==(const StringCountMatrix&) const = default;
};

// Per-p string totals: s_bar = (entry sum of R^{p-1}) / 2 counts connected
// p-plets including closed strings; trace_r = Tr R^p; delta = trace_r / (2p)
// is the number of p-gons.
struct StringStatistics {
    int p = 0;
    count_t s_bar = 0;
    count_t trace_r = 0;
    count_t delta = 0;
};

namespace detail {

// Depth-first enumeration of non-degenerate strings from one source. Walks
// extend only through unvisited nodes; a return to the source is allowed
// solely as the final step of a walk with >= 3 edges, which records a cycle.
// Every walk prefix is visited exactly once, so one traversal yields all
// layers R^1..R^max at once. `rows[d]` is the source's row of R^{d+1}.
class StringDfs {
public:
    StringDfs(const Graph& g, int max_edges)
        : g_(g), max_edges_(max_edges), visited_(g.node_count(), 0) {}

    void run(int source, std::vector<count_t*> rows) {
        source_ = source;
        rows_ = std::move(rows);
        visited_[source] = 1;
        extend(source, 0);
        visited_[source] = 0;
    }

private:
    void extend(int node, int depth) {
        const int next_depth = depth + 1;
        for (const int next : g_.neighbors(node)) {
            if (next == source_) {
                if (next_depth >= 3) rows_[next_depth - 1][source_] += 1;
                continue;
            }
            if (visited_[next]) continue;
            rows_[next_depth - 1][next] += 1;
            if (next_depth < max_edges_) {
                visited_[next] = 1;
                extend(next, next_depth);
                visited_[next] = 0;
            }
        }
    }

    const Graph& g_;
    int max_edges_;
    int source_ = 0;
    std::vector<count_t*> rows_;
    std::vector<char> visited_;
};

} // namespace detail

// Computes R^1..R^max_n in one pass. Parallel across source nodes; each
// worker writes only its own rows, so the result is bit-identical for any
// worker count.
inline std::vector<StringCountMatrix> count_strings_family(const Graph& g, int max_n,
                                                           const CountOptions& opts = {}) {
    if (max_n < 1) throw range_error("string length must be at least 1 edge");
    if (max_n > opts.max_edges || max_n > kHardMaxStringEdges)
        throw range_error("string length " + std::to_string(max_n) +
                          " exceeds the configured maximum of " +
                          std::to_string(std::min(opts.max_edges, kHardMaxStringEdges)) + " edges");
    const int n_nodes = g.node_count();
    std::vector<StringCountMatrix> family;
    family.reserve(max_n);
    for (int d = 1; d <= max_n; ++d)
        family.push_back({d, DenseIntMatrix(n_nodes)});
    parallel_for(static_cast<std::size_t>(n_nodes), opts.workers, [&](std::size_t source) {
        detail::StringDfs dfs(g, max_n);
        std::vector<count_t*> rows(max_n);
        for (int d = 0; d < max_n; ++d)
            rows[d] = &family[d].counts(static_cast<int>(source), 0);
        dfs.run(static_cast<int>(source), std::move(rows));
    });
    return family;
}

inline StringCountMatrix count_strings(const Graph& g, int n, const CountOptions& opts = {}) {
    auto family = count_strings_family(g, n, opts);
    return std::move(family.back());
}

// Literal evaluation of the defining sum for R^n: over all intermediate
// index tuples, the product of adjacency factors times pairwise-distinctness
// deltas for index pairs at positional distance > 1, with the endpoint pair
// exempted so that closed strings survive. Closed walks with fewer than 3
// edges reuse an edge and are excluded (they are not polygons). Oracle use
// only: cost is O(N^(n-1)) per entry set.
inline StringCountMatrix count_strings_direct(const Graph& g, int n) {
    if (n < 1) throw range_error("string length must be at least 1 edge");
    if (n > 6) throw range_error("count_strings_direct supports n <= 6");
    if (g.node_count() > 12) throw range_error("count_strings_direct supports at most 12 nodes");
    const int n_nodes = g.node_count();
    StringCountMatrix result{n, DenseIntMatrix(n_nodes)};

    std::vector<int> walk(static_cast<std::size_t>(n) + 1, 0);
    auto tuple_passes = [&]() {
        for (int k = 0; k + 2 <= n; ++k) {
            for (int j = k + 2; j <= n; ++j) {
                if (k == 0 && j == n) continue; // endpoint pair exempt
                if (walk[k] == walk[j]) return false;
            }
        }
        return true;
    };
    // Recursive odometer over (i_1..i_n); adjacency factors of zero prune.
    auto enumerate = [&](auto&& self, int position) -> void {
        if (position == n + 1) {
            const int i0 = walk[0];
            const int in = walk[n];
            if (i0 == in && n < 3) return;
            if (tuple_passes()) result.counts(i0, in) += 1;
            return;
        }
        for (int v = 0; v < n_nodes; ++v) {
            if (!g.has_edge(walk[position - 1], v)) continue;
            walk[position] = v;
            self(self, position + 1);
        }
    };
    for (int i0 = 0; i0 < n_nodes; ++i0) {
        walk[0] = i0;
        enumerate(enumerate, 1);
    }
    return result;
}

inline StringStatistics statistics_from_family(const std::vector<StringCountMatrix>& family, int p) {
    if (p < 2) throw range_error("string statistics require p >= 2");
    if (static_cast<std::size_t>(p) > family.size())
        throw range_error("family does not reach R^" + std::to_string(p));
    StringStatistics stats;
    stats.p = p;
    const count_t total = family[p - 2].counts.entry_sum();
    assert(total % 2 == 0);
    stats.s_bar = total / 2;
    stats.trace_r = family[p - 1].counts.trace();
    assert(stats.trace_r % (2 * p) == 0);
    stats.delta = stats.trace_r / (2 * p);
    return stats;
}

inline StringStatistics string_statistics(const Graph& g, int p, const CountOptions& opts = {}) {
    if (p < 2) throw range_error("string statistics require p >= 2");
    return statistics_from_family(count_strings_family(g, p, opts), p);
}

// Debug/test dump format: header "R n N", then N rows of N integers.
inline std::string dump_matrix(const StringCountMatrix& m) {
    std::ostringstream out;
    const int n_nodes = m.counts.order();
    out << "R " << m.n_edges << " " << n_nodes << "\n";
    for (int i = 0; i < n_nodes; ++i) {
        for (int j = 0; j < n_nodes; ++j) {
            if (j) out << " ";
            out << m.counts(i, j);
        }
        out << "\n";
    }
    return out.str();
}

inline StringCountMatrix parse_matrix(const std::string& text) {
    std::istringstream in(text);
    std::string tag;
    int n_edges = 0;
    int n_nodes = 0;
    if (!(in >> tag >> n_edges >> n_nodes) || tag != "R")
        throw parse_error("matrix dump must start with 'R n N'");
    StringCountMatrix m{n_edges, DenseIntMatrix(n_nodes)};
    for (int i = 0; i < n_nodes; ++i)
        for (int j = 0; j < n_nodes; ++j)
            if (!(in >> m.counts(i, j)))
                throw parse_error("matrix dump truncated");
    return m;
}

} // namespace netstrings

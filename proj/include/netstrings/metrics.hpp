#pragma once

#include <cmath>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <vector>

#include "netstrings/graph.hpp"
#include "netstrings/string_count.hpp"

namespace netstrings {

// Exact non-negative rational, kept reduced.
struct Rational {
    count_t num = 0;
    count_t den = 1;

    Rational() = default;
    Rational(count_t n, count_t d) : num(n), den(d) {
        if (den == 0) throw domain_error("rational with zero denominator");
        const count_t g = std::gcd(num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
    }

    double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

// C(p) value; `degenerate` marks a zero denominator (no (p-1)-edge strings),
// reported as 0 so that sums over sparse graphs never abort.
struct ClusteringValue {
    double value = 0.0;
    bool degenerate = false;
};

namespace detail {

inline ClusteringValue clustering_from_family(const std::vector<StringCountMatrix>& family, int p) {
    const count_t numerator = family[p - 1].counts.trace();
    const count_t denominator = family[p - 2].counts.entry_sum();
    if (denominator == 0) return {0.0, true};
    return {static_cast<double>(numerator) / static_cast<double>(denominator), false};
}

} // namespace detail

// Generalized clustering coefficient C(p) = Tr R^p / (entry sum of R^{p-1}).
// C(3) is the standard global clustering coefficient.
inline ClusteringValue generalized_clustering(const Graph& g, int p, const CountOptions& opts = {}) {
    if (p < 3) throw range_error("generalized clustering requires p >= 3");
    return detail::clustering_from_family(count_strings_family(g, p, opts), p);
}

// Closed form for C(3): Tr A^3 / (entry sum of A^2 - Tr A^2). Agrees exactly
// with generalized_clustering(g, 3); throws when the graph has no 2-edge path.
inline double clustering_c3_closed_form(const Graph& g) {
    const DenseIntMatrix a2 = adjacency_power(g, 2);
    const DenseIntMatrix a3 = adjacency_power(g, 3);
    const count_t denominator = a2.entry_sum() - a2.trace();
    if (denominator == 0)
        throw degenerate_graph_error("clustering undefined: graph has no 2-edge path");
    return static_cast<double>(a3.trace()) / static_cast<double>(denominator);
}

// Milgram ratio M_q = S_bar(q) / N, exact.
inline Rational milgram_ratio(const Graph& g, int q, const CountOptions& opts = {}) {
    if (q < 2) throw range_error("milgram ratio requires q >= 2");
    const StringStatistics stats = string_statistics(g, q, opts);
    return Rational(stats.s_bar, g.node_count());
}

namespace detail {

// Milgram condition at q: M_q / N >= 1, i.e. s_bar(q) >= N^2 exactly.
inline bool milgram_satisfied(count_t s_bar, int n_nodes) {
    return s_bar >= checked_mul(static_cast<count_t>(n_nodes), static_cast<count_t>(n_nodes),
                                "Milgram threshold");
}

} // namespace detail

// Smallest q in [2, q_max] satisfying the Milgram condition; nullopt when
// none does. Stops counting as soon as the condition is met, so dense
// graphs never enumerate long strings.
inline std::optional<int> separation_number(const Graph& g, int q_max, const CountOptions& opts = {}) {
    if (q_max < 2) throw range_error("separation number requires q_max >= 2");
    if (q_max - 1 > std::min(opts.max_edges, kHardMaxStringEdges))
        throw range_error("q_max " + std::to_string(q_max) + " exceeds the configured maximum");
    for (int q = 2; q <= q_max; ++q) {
        // Only s_bar(q) = (entry sum of R^{q-1}) / 2 is needed here.
        const auto family = count_strings_family(g, q - 1, opts);
        const count_t s_bar = family[q - 2].counts.entry_sum() / 2;
        if (detail::milgram_satisfied(s_bar, g.node_count())) return q;
    }
    return std::nullopt;
}

// Per-q profile: M_q, log10(M_q/N), C(3..q), X = sum of C(p), Y = log10 M_q.
struct MilgramProfile {
    int q = 0;
    Rational m_q;
    double log_ratio = 0.0;      // log10(M_q / N)
    bool log_ratio_defined = false;
    std::map<int, ClusteringValue> c_values; // p -> C(p), 3 <= p <= q
    double x = 0.0;
    double y = 0.0; // log10 M_q
    bool y_defined = false;
};

// Assembles a profile from a precomputed family reaching R^q.
inline MilgramProfile profile_from_family(const std::vector<StringCountMatrix>& family, int n_nodes,
                                          int q) {
    if (q < 3) throw range_error("milgram profile requires q >= 3");
    if (static_cast<std::size_t>(q) > family.size())
        throw range_error("family does not reach R^" + std::to_string(q));
    MilgramProfile profile;
    profile.q = q;
    const StringStatistics stats = statistics_from_family(family, q);
    profile.m_q = Rational(stats.s_bar, n_nodes);
    const double m = profile.m_q.to_double();
    if (m > 0.0) {
        profile.y = std::log10(m);
        profile.y_defined = true;
        profile.log_ratio = std::log10(m / n_nodes);
        profile.log_ratio_defined = true;
    }
    for (int p = 3; p <= q; ++p) {
        const ClusteringValue c = detail::clustering_from_family(family, p);
        profile.c_values.emplace(p, c);
        profile.x += c.value;
    }
    return profile;
}

// One pass: a single traversal produces every R^n for n <= q, and each is
// used exactly once.
inline MilgramProfile milgram_profile(const Graph& g, int q, const CountOptions& opts = {}) {
    if (q < 3) throw range_error("milgram profile requires q >= 3");
    return profile_from_family(count_strings_family(g, q, opts), g.node_count(), q);
}

} // namespace netstrings

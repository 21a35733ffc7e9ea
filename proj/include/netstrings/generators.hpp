#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "netstrings/errors.hpp"
#include "netstrings/graph.hpp"
#include "netstrings/rng.hpp"

namespace netstrings {

enum class GraphModel { scale_free, newman_watts, ring_lattice, erdos_renyi, complete };

inline const char* model_name(GraphModel m) {
    switch (m) {
        case GraphModel::scale_free: return "sf";
        case GraphModel::newman_watts: return "nw";
        case GraphModel::ring_lattice: return "ring";
        case GraphModel::erdos_renyi: return "er";
        case GraphModel::complete: return "complete";
    }
    return "?";
}

struct GeneratorConfig {
    GraphModel kind = GraphModel::erdos_renyi;
    int n_nodes = 0;
    // scale-free: degrees sampled i.i.d. from P(k) proportional to k^-gamma
    // on [k_min, k_max]; k_max = 0 selects the structural cutoff floor(sqrt(N)).
    double gamma = 3.0;
    int k_min = 2;
    int k_max = 0;
    // small-world: ring lattice with k_base neighbours on each side; alpha is
    // the shortcut ratio (or the rewiring probability when rewire is set).
    int k_base = 2;
    double alpha = 0.0;
    bool rewire = false;
    // Erdos-Renyi edge probability.
    double edge_prob = 0.0;
    std::uint64_t seed = 0;
};

inline int effective_k_max(const GeneratorConfig& cfg) {
    return cfg.k_max > 0 ? cfg.k_max
                         : std::max(cfg.k_min, static_cast<int>(std::sqrt(static_cast<double>(cfg.n_nodes))));
}

inline void validate_config(const GeneratorConfig& cfg) {
    if (cfg.n_nodes <= 0) throw config_error("n_nodes must be positive");
    switch (cfg.kind) {
        case GraphModel::scale_free: {
            if (cfg.gamma <= 1.0) throw config_error("scale-free exponent gamma must exceed 1");
            if (cfg.k_min < 1) throw config_error("k_min must be at least 1");
            const int k_max = effective_k_max(cfg);
            if (k_max < cfg.k_min) throw config_error("k_max must be >= k_min");
            if (k_max > cfg.n_nodes - 1) throw config_error("k_max must be <= n_nodes - 1");
            break;
        }
        case GraphModel::newman_watts:
        case GraphModel::ring_lattice:
            if (cfg.k_base < 1) throw config_error("k_base must be at least 1");
            if (cfg.n_nodes < 3) throw config_error("ring lattice needs at least 3 nodes");
            if (cfg.alpha < 0.0 || cfg.alpha > 1.0) throw config_error("alpha must lie in [0, 1]");
            break;
        case GraphModel::erdos_renyi:
            if (cfg.edge_prob < 0.0 || cfg.edge_prob > 1.0)
                throw config_error("edge_prob must lie in [0, 1]");
            break;
        case GraphModel::complete:
            break;
    }
}

namespace detail {

class EdgeBuilder {
public:
    explicit EdgeBuilder(int n) : n_(n), present_(static_cast<std::size_t>(n) * n, 0) {}

    bool has(int u, int v) const { return present_[static_cast<std::size_t>(u) * n_ + v] != 0; }

    bool add(int u, int v) {
        if (u == v || has(u, v)) return false;
        present_[static_cast<std::size_t>(u) * n_ + v] = 1;
        present_[static_cast<std::size_t>(v) * n_ + u] = 1;
        edges_.emplace_back(std::min(u, v), std::max(u, v));
        return true;
    }

    void remove(int u, int v) {
        present_[static_cast<std::size_t>(u) * n_ + v] = 0;
        present_[static_cast<std::size_t>(v) * n_ + u] = 0;
        const Edge e{std::min(u, v), std::max(u, v)};
        edges_.erase(std::find(edges_.begin(), edges_.end(), e));
    }

    const std::vector<Edge>& edges() const { return edges_; }
    std::vector<Edge> take() { return std::move(edges_); }

private:
    int n_;
    std::vector<std::uint8_t> present_;
    std::vector<Edge> edges_;
};

inline std::vector<int> sample_power_law_degrees(const GeneratorConfig& cfg, Rng& rng) {
    const int k_max = effective_k_max(cfg);
    std::vector<double> cumulative;
    cumulative.reserve(static_cast<std::size_t>(k_max - cfg.k_min) + 1);
    double total = 0.0;
    for (int k = cfg.k_min; k <= k_max; ++k) {
        total += std::pow(static_cast<double>(k), -cfg.gamma);
        cumulative.push_back(total);
    }
    auto draw = [&]() {
        const double r = rng.uniform01() * total;
        const auto it = std::lower_bound(cumulative.begin(), cumulative.end(), r);
        return cfg.k_min + static_cast<int>(it - cumulative.begin());
    };
    std::vector<int> degrees(cfg.n_nodes);
    long long sum = 0;
    for (int i = 0; i < cfg.n_nodes; ++i) {
        degrees[i] = draw();
        sum += degrees[i];
    }
    // Force an even stub total by redrawing one node's degree.
    int retries = 0;
    while (sum % 2 != 0) {
        if (++retries > 64)
            throw generation_error("could not draw a degree sequence with even sum");
        sum -= degrees[cfg.n_nodes - 1];
        degrees[cfg.n_nodes - 1] = draw();
        sum += degrees[cfg.n_nodes - 1];
    }
    return degrees;
}

// Configuration-model wiring: random stub pairing with rejection of
// self-loops and multi-edges. Conflicting pairs are re-shuffled and paired
// again; whatever still conflicts after the retry budget is dropped.
inline void wire_configuration_model(EdgeBuilder& builder, const std::vector<int>& degrees,
                                     Rng& rng) {
    std::vector<int> stubs;
    for (int node = 0; node < static_cast<int>(degrees.size()); ++node)
        stubs.insert(stubs.end(), static_cast<std::size_t>(degrees[node]), node);
    constexpr int kMaxRounds = 100;
    for (int round = 0; round < kMaxRounds && stubs.size() >= 2; ++round) {
        rng.shuffle(stubs);
        std::vector<int> conflicted;
        for (std::size_t t = 0; t + 1 < stubs.size(); t += 2) {
            const int u = stubs[t];
            const int v = stubs[t + 1];
            if (!builder.add(u, v)) {
                conflicted.push_back(u);
                conflicted.push_back(v);
            }
        }
        stubs = std::move(conflicted);
    }
    // Leftover stubs are unresolvable conflicts; discard them.
}

inline void build_ring_lattice(EdgeBuilder& builder, int n, int k_base) {
    for (int i = 0; i < n; ++i)
        for (int j = 1; j <= k_base; ++j) builder.add(i, (i + j) % n);
}

inline void add_newman_watts_shortcuts(EdgeBuilder& builder, int n, const std::vector<Edge>& lattice,
                                       double alpha, Rng& rng) {
    for ([[maybe_unused]] const Edge& e : lattice) {
        if (!rng.bernoulli(alpha)) continue;
        for (int attempt = 0; attempt < 1000; ++attempt) {
            const int u = rng.uniform_int(0, n - 1);
            const int v = rng.uniform_int(0, n - 1);
            if (builder.add(u, v)) break;
        }
    }
}

inline void rewire_lattice(EdgeBuilder& builder, int n, const std::vector<Edge>& lattice,
                           double alpha, Rng& rng) {
    for (const Edge& e : lattice) {
        if (!rng.bernoulli(alpha)) continue;
        for (int attempt = 0; attempt < 1000; ++attempt) {
            const int w = rng.uniform_int(0, n - 1);
            if (w == e.first || builder.has(e.first, w)) continue;
            builder.remove(e.first, e.second);
            builder.add(e.first, w);
            break;
        }
    }
}

} // namespace detail

// Deterministic function of (cfg, seed): same config and seed give the same
// graph on every platform, run, and thread count.
inline Graph generate(const GeneratorConfig& cfg) {
    validate_config(cfg);
    Rng rng(cfg.seed);
    detail::EdgeBuilder builder(cfg.n_nodes);
    switch (cfg.kind) {
        case GraphModel::scale_free: {
            const auto degrees = detail::sample_power_law_degrees(cfg, rng);
            detail::wire_configuration_model(builder, degrees, rng);
            break;
        }
        case GraphModel::ring_lattice:
            detail::build_ring_lattice(builder, cfg.n_nodes, cfg.k_base);
            break;
        case GraphModel::newman_watts: {
            detail::build_ring_lattice(builder, cfg.n_nodes, cfg.k_base);
            const std::vector<Edge> lattice = builder.edges();
            if (cfg.rewire)
                detail::rewire_lattice(builder, cfg.n_nodes, lattice, cfg.alpha, rng);
            else
                detail::add_newman_watts_shortcuts(builder, cfg.n_nodes, lattice, cfg.alpha, rng);
            break;
        }
        case GraphModel::erdos_renyi:
            for (int i = 0; i < cfg.n_nodes; ++i)
                for (int j = i + 1; j < cfg.n_nodes; ++j)
                    if (rng.bernoulli(cfg.edge_prob)) builder.add(i, j);
            break;
        case GraphModel::complete:
            for (int i = 0; i < cfg.n_nodes; ++i)
                for (int j = i + 1; j < cfg.n_nodes; ++j) builder.add(i, j);
            break;
    }
    return Graph(cfg.n_nodes, builder.take());
}

// Maximum-likelihood power-law exponent of the degree sequence (Hill-style
// estimator with continuity correction, lower cutoff k_min). `degenerate`
// flags a spread-free tail (all qualifying degrees equal), where the
// estimate is meaningless.
struct ExponentEstimate {
    double gamma_hat = 0.0;
    int n_tail = 0;
    bool degenerate = false;
};

inline ExponentEstimate empirical_exponent(const Graph& g, int k_min) {
    if (k_min < 1) throw config_error("k_min must be at least 1");
    double log_sum = 0.0;
    int n_tail = 0;
    int min_deg = 0;
    int max_deg = 0;
    for (int i = 0; i < g.node_count(); ++i) {
        const int d = g.degree(i);
        if (d < k_min) continue;
        log_sum += std::log(static_cast<double>(d) / (k_min - 0.5));
        if (n_tail == 0) min_deg = max_deg = d;
        min_deg = std::min(min_deg, d);
        max_deg = std::max(max_deg, d);
        ++n_tail;
    }
    if (n_tail < 20)
        throw insufficient_data_error("exponent estimate needs at least 20 nodes with degree >= " +
                                      std::to_string(k_min));
    ExponentEstimate est;
    est.n_tail = n_tail;
    est.gamma_hat = 1.0 + static_cast<double>(n_tail) / log_sum;
    est.degenerate = (min_deg == max_deg);
    return est;
}

} // namespace netstrings

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "netstrings/fit.hpp"
#include "netstrings/generators.hpp"
#include "netstrings/metrics.hpp"
#include "netstrings/parallel.hpp"

namespace netstrings {

// One (trial, q) record of a parameter sweep. param is gamma for scale-free
// grids and alpha for small-world grids.
struct SweepRow {
    GraphModel kind = GraphModel::scale_free;
    double param = 0.0;
    std::uint64_t seed = 0;
    int q = 0;
    count_t s_bar = 0;
    count_t trace_r = 0;
    count_t delta = 0;
    double c_q = 0.0;
    bool c_degenerate = false;
    double m_q = 0.0;
    double log_ratio = 0.0; // log10(M_q / N), NaN when M_q = 0
    double x = 0.0;
    double y = 0.0; // log10 M_q, NaN when M_q = 0
    bool y_defined = false;
    int q_star = 0; // smallest satisfied q of this trial, 0 = none within q_max
};

// Per (param, q) aggregate over trials. The mean of M_q is taken first and
// the log applied to the mean; per-trial logs stay available in the rows.
// q_star_aggregate is the separation number of the trial-averaged curve:
// the smallest q whose mean M_q satisfies the Milgram condition (0 = none
// within q_max). It is constant across the q rows of one parameter.
struct AggregateRow {
    GraphModel kind = GraphModel::scale_free;
    double param = 0.0;
    int q = 0;
    int trials = 0;
    double s_bar_mean = 0.0;
    double m_mean = 0.0;
    double m_std = 0.0;
    double log_ratio = 0.0; // log10(m_mean / N)
    double c_mean = 0.0;
    double c_std = 0.0;
    double x_mean = 0.0;
    double x_std = 0.0;
    double y = 0.0; // log10(m_mean)
    bool y_defined = false;
    int q_star_aggregate = 0;
    double q_star_mean = 0.0; // per-trial mean, not-found censored as q_max + 1
    double q_star_found_frac = 0.0;
};

struct SweepFailure {
    double param = 0.0;
    std::uint64_t seed = 0;
    std::string message;
};

struct SweepResult {
    int n_nodes = 0;
    int q_max = 0;
    std::vector<SweepRow> rows;
    std::vector<AggregateRow> aggregates;
    std::vector<SweepFailure> failures;
};

namespace detail {

inline double sweep_param(const GeneratorConfig& cfg) {
    switch (cfg.kind) {
        case GraphModel::scale_free: return cfg.gamma;
        case GraphModel::newman_watts:
        case GraphModel::ring_lattice: return cfg.alpha;
        case GraphModel::erdos_renyi: return cfg.edge_prob;
        case GraphModel::complete: return 0.0;
    }
    return 0.0;
}

struct TrialOutcome {
    bool ok = false;
    std::string message;
    std::vector<SweepRow> rows;
};

inline TrialOutcome run_trial(const GeneratorConfig& cfg, int q_max, const CountOptions& opts) {
    TrialOutcome outcome;
    try {
        const Graph g = generate(cfg);
        const int n_nodes = g.node_count();
        const auto family = count_strings_family(g, q_max, opts);
        int q_star = 0;
        for (int q = 2; q <= q_max; ++q) {
            const count_t s_bar = family[q - 2].counts.entry_sum() / 2;
            if (milgram_satisfied(s_bar, n_nodes)) {
                q_star = q;
                break;
            }
        }
        double x = 0.0;
        for (int q = 2; q <= q_max; ++q) {
            SweepRow row;
            row.kind = cfg.kind;
            row.param = sweep_param(cfg);
            row.seed = cfg.seed;
            row.q = q;
            const StringStatistics stats = statistics_from_family(family, q);
            row.s_bar = stats.s_bar;
            row.trace_r = stats.trace_r;
            row.delta = stats.delta;
            const ClusteringValue c = clustering_from_family(family, q);
            row.c_q = c.value;
            row.c_degenerate = c.degenerate;
            if (q >= 3) x += c.value;
            row.x = x;
            row.m_q = static_cast<double>(stats.s_bar) / n_nodes;
            if (row.m_q > 0.0) {
                row.y = std::log10(row.m_q);
                row.log_ratio = std::log10(row.m_q / n_nodes);
                row.y_defined = true;
            } else {
                row.y = std::nan("");
                row.log_ratio = std::nan("");
            }
            row.q_star = q_star;
            outcome.rows.push_back(row);
        }
        outcome.ok = true;
    } catch (const error& e) {
        outcome.message = e.what();
    }
    return outcome;
}

} // namespace detail

// Shared sweep engine: for every config in the grid and every trial index,
// generates a graph with seed = cfg.seed + trial and computes the profile for
// each q in [2, q_max]. Trials run concurrently; rows are order-normalized
// by (param, seed, q) so the output is schedule-independent. Generation
// failures are recorded and skipped; a parameter point with no surviving
// trial is an error.
inline SweepResult run_sweep(const std::vector<GeneratorConfig>& grid, int q_max, int trials,
                             const CountOptions& opts = {}) {
    if (trials < 1) throw config_error("trials must be at least 1");
    if (grid.empty()) throw config_error("sweep grid is empty");
    if (q_max < 2) throw config_error("sweep requires q_max >= 2");
    for (const auto& cfg : grid) {
        validate_config(cfg);
        if (cfg.n_nodes != grid.front().n_nodes)
            throw config_error("sweep grid must share one node count");
    }

    SweepResult result;
    result.q_max = q_max;
    result.n_nodes = grid.front().n_nodes;

    const std::size_t n_tasks = grid.size() * static_cast<std::size_t>(trials);
    std::vector<detail::TrialOutcome> outcomes(n_tasks);
    std::vector<GeneratorConfig> task_cfg(n_tasks);
    for (std::size_t g = 0; g < grid.size(); ++g) {
        for (int t = 0; t < trials; ++t) {
            GeneratorConfig cfg = grid[g];
            cfg.seed = grid[g].seed + static_cast<std::uint64_t>(t);
            task_cfg[g * trials + t] = cfg;
        }
    }
    // Graph generation itself is single-threaded per task (sequential RNG
    // stream), so parallelism goes across tasks and counting stays serial
    // inside each one.
    CountOptions task_opts = opts;
    task_opts.workers = 1;
    parallel_for(n_tasks, opts.workers, [&](std::size_t task) {
        outcomes[task] = detail::run_trial(task_cfg[task], q_max, task_opts);
    });

    for (std::size_t g = 0; g < grid.size(); ++g) {
        int ok_count = 0;
        for (int t = 0; t < trials; ++t) {
            auto& outcome = outcomes[g * trials + t];
            if (outcome.ok) {
                ++ok_count;
                result.rows.insert(result.rows.end(), outcome.rows.begin(), outcome.rows.end());
            } else {
                result.failures.push_back({detail::sweep_param(task_cfg[g * trials + t]),
                                           task_cfg[g * trials + t].seed, outcome.message});
            }
        }
        if (ok_count == 0)
            throw generation_error("all trials failed at parameter " +
                                   std::to_string(detail::sweep_param(grid[g])));
    }
    std::sort(result.rows.begin(), result.rows.end(), [](const SweepRow& a, const SweepRow& b) {
        if (a.param != b.param) return a.param < b.param;
        if (a.seed != b.seed) return a.seed < b.seed;
        return a.q < b.q;
    });

    // Aggregates per (param, q).
    std::map<std::pair<double, int>, std::vector<const SweepRow*>> groups;
    for (const SweepRow& row : result.rows) groups[{row.param, row.q}].push_back(&row);
    std::map<double, int> aggregate_star;
    for (const auto& [key, rows] : groups) {
        if (aggregate_star.contains(key.first) && aggregate_star[key.first] != 0) continue;
        double s_bar_mean = 0.0;
        for (const SweepRow* r : rows) s_bar_mean += static_cast<double>(r->s_bar);
        s_bar_mean /= static_cast<double>(rows.size());
        const double threshold = static_cast<double>(result.n_nodes) * result.n_nodes;
        aggregate_star[key.first] = s_bar_mean >= threshold ? key.second : 0;
    }
    for (const auto& [key, group] : groups) {
        // Plain local name: lambdas below cannot capture a structured binding.
        const std::vector<const SweepRow*>& rows = group;
        AggregateRow agg;
        agg.kind = rows.front()->kind;
        agg.param = key.first;
        agg.q = key.second;
        agg.trials = static_cast<int>(rows.size());
        auto mean_std = [&](auto field) {
            double mean = 0.0;
            for (const SweepRow* r : rows) mean += field(*r);
            mean /= rows.size();
            double var = 0.0;
            for (const SweepRow* r : rows) {
                const double d = field(*r) - mean;
                var += d * d;
            }
            const double std_dev = rows.size() > 1 ? std::sqrt(var / (rows.size() - 1)) : 0.0;
            return std::pair<double, double>(mean, std_dev);
        };
        std::tie(agg.m_mean, agg.m_std) = mean_std([](const SweepRow& r) { return r.m_q; });
        std::tie(agg.c_mean, agg.c_std) = mean_std([](const SweepRow& r) { return r.c_q; });
        std::tie(agg.x_mean, agg.x_std) = mean_std([](const SweepRow& r) { return r.x; });
        agg.s_bar_mean =
            mean_std([](const SweepRow& r) { return static_cast<double>(r.s_bar); }).first;
        agg.q_star_aggregate = aggregate_star.at(key.first);
        if (agg.m_mean > 0.0) {
            agg.y = std::log10(agg.m_mean);
            agg.log_ratio = std::log10(agg.m_mean / result.n_nodes);
            agg.y_defined = true;
        } else {
            agg.y = std::nan("");
            agg.log_ratio = std::nan("");
        }
        double star_sum = 0.0;
        int found = 0;
        for (const SweepRow* r : rows) {
            star_sum += r->q_star > 0 ? r->q_star : q_max + 1;
            if (r->q_star > 0) ++found;
        }
        agg.q_star_mean = star_sum / rows.size();
        agg.q_star_found_frac = static_cast<double>(found) / rows.size();
        result.aggregates.push_back(agg);
    }
    return result;
}

// Milgram-condition sweep: rows answer "which q satisfies the condition".
inline SweepResult sweep_milgram(const std::vector<GeneratorConfig>& grid, int q_max, int trials,
                                 const CountOptions& opts = {}) {
    return run_sweep(grid, q_max, trials, opts);
}

// X-Y sweep: rows carry the (X, Y) pairs per (config, q); rows with
// undefined Y (M_q = 0) are flagged and excluded from fits.
inline SweepResult sweep_xy(const std::vector<GeneratorConfig>& grid, int q_max, int trials,
                            const CountOptions& opts = {}) {
    return run_sweep(grid, q_max, trials, opts);
}

// (X, Y) points from the aggregate rows; q = 0 pools every q >= 3.
inline std::vector<Point> aggregate_xy_points(const SweepResult& result, int q) {
    std::vector<Point> points;
    for (const AggregateRow& agg : result.aggregates) {
        if (agg.q < 3) continue;
        if (q != 0 && agg.q != q) continue;
        if (!agg.y_defined) continue;
        points.push_back({agg.x_mean, agg.y});
    }
    return points;
}

// Default reproduction grids at N = 200.
inline std::vector<double> default_gamma_grid() {
    return {1.8, 2.0, 2.25, 2.5, 2.75, 3.0, 3.5, 4.0};
}

inline std::vector<double> default_alpha_grid() {
    return {0.0, 0.01, 0.05, 0.1, 0.2, 0.4, 0.6, 0.8, 1.0};
}

inline std::vector<GeneratorConfig> scale_free_grid(const std::vector<double>& gammas, int n_nodes,
                                                    std::uint64_t base_seed, int k_min = 2,
                                                    int k_max = 0) {
    std::vector<GeneratorConfig> grid;
    for (const double gamma : gammas) {
        GeneratorConfig cfg;
        cfg.kind = GraphModel::scale_free;
        cfg.n_nodes = n_nodes;
        cfg.gamma = gamma;
        cfg.k_min = k_min;
        cfg.k_max = k_max;
        cfg.seed = base_seed;
        grid.push_back(cfg);
    }
    return grid;
}

inline std::vector<GeneratorConfig> small_world_grid(const std::vector<double>& alphas, int n_nodes,
                                                     std::uint64_t base_seed, int k_base = 2) {
    std::vector<GeneratorConfig> grid;
    for (const double alpha : alphas) {
        GeneratorConfig cfg;
        cfg.kind = GraphModel::newman_watts;
        cfg.n_nodes = n_nodes;
        cfg.k_base = k_base;
        cfg.alpha = alpha;
        cfg.seed = base_seed;
        grid.push_back(cfg);
    }
    return grid;
}

} // namespace netstrings

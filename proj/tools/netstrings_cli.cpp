// netstrings command line: generate graphs, compute string metrics, run
// parameter sweeps, fit X-Y relations, and emit CSV tables plus SVG charts.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "netstrings/netstrings.hpp"

namespace ns = netstrings;

namespace {

// Flat "key = value" config support: --config <file> entries are expanded
// into --key=value tokens, skipping keys already present on the command
// line, so explicit flags always override file values.
std::vector<std::string> expand_config_args(int argc, char** argv);

// Ceiling on q (and therefore on string length in edges). NETSTRINGS_MAX_Q
// can raise it, bounded at 10.
int q_ceiling() {
    int ceiling = ns::kDefaultMaxStringEdges;
    if (const char* env = std::getenv("NETSTRINGS_MAX_Q")) {
        try {
            const int requested = std::stoi(env);
            ceiling = std::max(ceiling, std::min(requested, ns::kHardMaxStringEdges));
        } catch (const std::exception&) {
            throw ns::config_error("NETSTRINGS_MAX_Q is not an integer");
        }
    }
    return ceiling;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ns::io_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ns::io_error("cannot open " + path + " for writing");
    out << content;
    if (!out) throw ns::io_error("failed writing " + path);
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty() || path == "-")
        std::cout << content;
    else
        write_file(path, content);
}

std::string trim(const std::string& text) {
    const auto begin = text.find_first_not_of(" \t\r");
    if (begin == std::string::npos) return "";
    const auto end = text.find_last_not_of(" \t\r");
    return text.substr(begin, end - begin + 1);
}

std::vector<std::string> expand_config_args(int argc, char** argv) {
    std::vector<std::string> tokens(argv + 1, argv + argc);
    std::string config_path;
    std::vector<std::string> out;
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (tokens[i] == "--config") {
            if (i + 1 >= tokens.size()) throw ns::config_error("--config needs a file path");
            config_path = tokens[++i];
        } else if (tokens[i].rfind("--config=", 0) == 0) {
            config_path = tokens[i].substr(9);
        } else {
            out.push_back(tokens[i]);
        }
    }
    if (config_path.empty()) return out;
    std::istringstream in(read_file(config_path));
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ns::parse_error(config_path + " line " + std::to_string(line_no) +
                                  ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw ns::parse_error(config_path + " line " + std::to_string(line_no) +
                                  ": empty key");
        const std::string flag = "--" + key;
        bool overridden = false;
        for (const std::string& token : out)
            if (token == flag || token.rfind(flag + "=", 0) == 0) {
                overridden = true;
                break;
            }
        if (!overridden) out.push_back(flag + "=" + value);
    }
    return out;
}

ns::GraphModel parse_model(const std::string& name) {
    if (name == "sf") return ns::GraphModel::scale_free;
    if (name == "nw") return ns::GraphModel::newman_watts;
    if (name == "ring") return ns::GraphModel::ring_lattice;
    if (name == "er") return ns::GraphModel::erdos_renyi;
    if (name == "complete") return ns::GraphModel::complete;
    throw ns::config_error("unknown model '" + name + "'");
}

struct GenerateArgs {
    std::string model = "sf";
    int n = 200;
    double gamma = 3.0;
    int k_min = 2;
    int k_max = 0;
    int k_base = 2;
    double alpha = 0.0;
    bool rewire = false;
    double edge_prob = 0.1;
    std::uint64_t seed = 1;
    std::string out;
};

ns::GeneratorConfig to_config(const GenerateArgs& args) {
    ns::GeneratorConfig cfg;
    cfg.kind = parse_model(args.model);
    cfg.n_nodes = args.n;
    cfg.gamma = args.gamma;
    cfg.k_min = args.k_min;
    cfg.k_max = args.k_max;
    cfg.k_base = args.k_base;
    cfg.alpha = args.alpha;
    cfg.rewire = args.rewire;
    cfg.edge_prob = args.edge_prob;
    cfg.seed = args.seed;
    return cfg;
}

std::string config_header(const ns::GeneratorConfig& cfg, const ns::Graph& g) {
    std::ostringstream out;
    out << "# netstrings generate\n";
    out << "# model " << ns::model_name(cfg.kind) << "\n";
    out << "# n " << cfg.n_nodes << "\n";
    switch (cfg.kind) {
        case ns::GraphModel::scale_free:
            out << "# gamma " << ns::format_double(cfg.gamma) << "\n";
            out << "# kmin " << cfg.k_min << "\n";
            out << "# kmax " << ns::effective_k_max(cfg) << "\n";
            break;
        case ns::GraphModel::newman_watts:
            out << "# kbase " << cfg.k_base << "\n";
            out << "# alpha " << ns::format_double(cfg.alpha) << "\n";
            out << "# rewire " << (cfg.rewire ? 1 : 0) << "\n";
            break;
        case ns::GraphModel::ring_lattice:
            out << "# kbase " << cfg.k_base << "\n";
            break;
        case ns::GraphModel::erdos_renyi:
            out << "# p " << ns::format_double(cfg.edge_prob) << "\n";
            break;
        case ns::GraphModel::complete:
            break;
    }
    out << "# seed " << cfg.seed << "\n";
    out << "# edges " << g.edge_count() << "\n";
    out << "# lcc " << ns::largest_component_size(g) << "\n";
    return out.str();
}

void cmd_generate(const GenerateArgs& args) {
    const ns::GeneratorConfig cfg = to_config(args);
    const ns::Graph g = ns::generate(cfg);
    write_output(args.out, config_header(cfg, g) + ns::to_edge_list(g));
}

struct MetricsArgs {
    std::string in;
    std::string out;
    int q_max = 7;
    int workers = 0;
};

std::string metrics_csv(const ns::Graph& g, int q_max, const ns::CountOptions& opts) {
    std::string csv = ns::csv_line({"q", "S_bar", "Tr_Rq", "Delta_q", "C_q", "M_q",
                                    "log10_Mq_over_N", "X", "Y", "c_degenerate", "y_undefined"});
    const auto family = ns::count_strings_family(g, q_max, opts);
    double x = 0.0;
    for (int q = 2; q <= q_max; ++q) {
        ns::StringStatistics stats;
        try {
            stats = ns::statistics_from_family(family, q);
        } catch (const ns::overflow_error& e) {
            throw ns::overflow_error(std::string(e.what()) + " at q = " + std::to_string(q));
        }
        const ns::ClusteringValue c = ns::detail::clustering_from_family(family, q);
        if (q >= 3) x += c.value;
        const double m = static_cast<double>(stats.s_bar) / g.node_count();
        const bool y_defined = m > 0.0;
        csv += ns::csv_line({std::to_string(q), std::to_string(stats.s_bar),
                             std::to_string(stats.trace_r), std::to_string(stats.delta),
                             ns::format_double(c.value), ns::format_double(m),
                             ns::format_double(y_defined ? std::log10(m / g.node_count())
                                                         : std::nan("")),
                             ns::format_double(x),
                             ns::format_double(y_defined ? std::log10(m) : std::nan("")),
                             c.degenerate ? "1" : "0", y_defined ? "0" : "1"});
    }
    return csv;
}

void cmd_metrics(const MetricsArgs& args, int ceiling) {
    if (args.q_max < 2 || args.q_max > ceiling)
        throw ns::config_error("qmax must lie in [2, " + std::to_string(ceiling) + "]");
    const ns::Graph g = ns::from_edge_list(read_file(args.in));
    ns::CountOptions opts;
    opts.max_edges = ceiling;
    opts.workers = args.workers;
    write_output(args.out, metrics_csv(g, args.q_max, opts));
}

struct SweepArgs {
    std::string model = "sf";
    int n = 200;
    int q_max = 7;
    int trials = 20;
    std::vector<double> gamma_grid;
    std::vector<double> alpha_grid;
    int k_min = 2;
    int k_max = 0;
    int k_base = 2;
    std::uint64_t seed = 1;
    std::string out;
    bool plot = false;
    int workers = 0;
};

std::string trials_csv(const ns::SweepResult& result) {
    std::string csv = ns::csv_line({"kind", "param", "seed", "q", "S_bar", "Tr_Rq", "Delta_q",
                                    "C_q", "M_q", "log10_Mq_over_N", "X", "Y", "q_star",
                                    "q_star_found", "c_degenerate", "y_undefined"});
    for (const ns::SweepRow& row : result.rows) {
        csv += ns::csv_line({ns::model_name(row.kind), ns::format_double(row.param),
                             std::to_string(row.seed), std::to_string(row.q),
                             std::to_string(row.s_bar), std::to_string(row.trace_r),
                             std::to_string(row.delta), ns::format_double(row.c_q),
                             ns::format_double(row.m_q), ns::format_double(row.log_ratio),
                             ns::format_double(row.x), ns::format_double(row.y),
                             std::to_string(row.q_star), row.q_star > 0 ? "1" : "0",
                             row.c_degenerate ? "1" : "0", row.y_defined ? "0" : "1"});
    }
    return csv;
}

std::string aggregate_csv(const ns::SweepResult& result) {
    std::string csv = ns::csv_line({"kind", "param", "q", "trials", "S_bar_mean", "M_q_mean",
                                    "M_q_std", "log10_Mq_over_N", "C_q_mean", "C_q_std", "X_mean",
                                    "X_std", "Y", "q_star_agg", "q_star_mean",
                                    "q_star_found_frac"});
    for (const ns::AggregateRow& agg : result.aggregates) {
        csv += ns::csv_line({ns::model_name(agg.kind), ns::format_double(agg.param),
                             std::to_string(agg.q), std::to_string(agg.trials),
                             ns::format_double(agg.s_bar_mean), ns::format_double(agg.m_mean),
                             ns::format_double(agg.m_std), ns::format_double(agg.log_ratio),
                             ns::format_double(agg.c_mean), ns::format_double(agg.c_std),
                             ns::format_double(agg.x_mean), ns::format_double(agg.x_std),
                             ns::format_double(agg.y), std::to_string(agg.q_star_aggregate),
                             ns::format_double(agg.q_star_mean),
                             ns::format_double(agg.q_star_found_frac)});
    }
    return csv;
}

// Per-q fits plus, for scale-free grids, a pooled fit across q. Scale-free
// X-Y clouds are fitted linearly, small-world ones log-linearly.
std::string fit_summary(const ns::SweepResult& result, ns::GraphModel kind) {
    const bool linear = kind != ns::GraphModel::newman_watts;
    std::ostringstream out;
    auto emit = [&](const std::string& label, const std::vector<ns::Point>& points) {
        out << "[fit " << label << "]\n";
        try {
            const ns::FitResult fit =
                linear ? ns::fit_linear(points) : ns::fit_loglinear(points);
            out << ns::format_fit(fit);
        } catch (const ns::error& e) {
            out << "error = " << e.what() << "\n";
        }
        out << "\n";
    };
    if (linear) emit("pooled linear", ns::aggregate_xy_points(result, 0));
    for (int q = 3; q <= result.q_max; ++q)
        emit((linear ? "linear q=" : "loglinear q=") + std::to_string(q),
             ns::aggregate_xy_points(result, q));
    return out.str();
}

std::string milgram_svg(const ns::SweepResult& result, const std::string& param_name) {
    ns::ChartSpec spec;
    spec.title = "Milgram condition: log10(Mq/N) by q";
    spec.x_label = "q";
    spec.y_label = "log10(Mq/N)";
    spec.horizontal_line = 0.0;
    std::map<double, ns::Series> by_param;
    for (const ns::AggregateRow& agg : result.aggregates) {
        ns::Series& series = by_param[agg.param];
        if (series.label.empty()) series.label = param_name + "=" + ns::format_double(agg.param);
        if (agg.y_defined)
            series.points.push_back({static_cast<double>(agg.q), agg.log_ratio});
    }
    for (auto& [param, series] : by_param) spec.series.push_back(std::move(series));
    return ns::render_chart(spec);
}

std::string xy_svg(const ns::SweepResult& result) {
    ns::ChartSpec spec;
    spec.title = "Y = log10 Mq against X = sum of C(p)";
    spec.x_label = "X";
    spec.y_label = "Y";
    for (int q = 3; q <= result.q_max; ++q) {
        ns::Series series;
        series.label = "q=" + std::to_string(q);
        series.draw_line = false;
        series.points = ns::aggregate_xy_points(result, q);
        spec.series.push_back(std::move(series));
    }
    return spec.series.empty() ? std::string() : ns::render_chart(spec);
}

void cmd_sweep(const SweepArgs& args, int ceiling) {
    if (args.q_max < 2 || args.q_max > ceiling)
        throw ns::config_error("qmax must lie in [2, " + std::to_string(ceiling) + "]");
    if (args.trials < 1) throw ns::config_error("trials must be at least 1");
    if (args.out.empty()) throw ns::config_error("sweep requires --out <prefix>");
    const ns::GraphModel kind = parse_model(args.model);
    std::vector<ns::GeneratorConfig> grid;
    std::string param_name;
    if (kind == ns::GraphModel::scale_free) {
        const auto gammas =
            args.gamma_grid.empty() ? ns::default_gamma_grid() : args.gamma_grid;
        grid = ns::scale_free_grid(gammas, args.n, args.seed, args.k_min, args.k_max);
        param_name = "gamma";
    } else if (kind == ns::GraphModel::newman_watts) {
        const auto alphas =
            args.alpha_grid.empty() ? ns::default_alpha_grid() : args.alpha_grid;
        grid = ns::small_world_grid(alphas, args.n, args.seed, args.k_base);
        param_name = "alpha";
    } else {
        throw ns::config_error("sweep supports --model sf or nw");
    }
    ns::CountOptions opts;
    opts.max_edges = ceiling;
    opts.workers = args.workers;
    const ns::SweepResult result = ns::run_sweep(grid, args.q_max, args.trials, opts);

    write_file(args.out + "_trials.csv", trials_csv(result));
    write_file(args.out + "_aggregate.csv", aggregate_csv(result));
    write_file(args.out + "_fits.txt", fit_summary(result, kind));
    if (!result.failures.empty()) {
        std::string manifest;
        for (const ns::SweepFailure& f : result.failures)
            manifest += ns::format_double(f.param) + " seed=" + std::to_string(f.seed) + " " +
                        f.message + "\n";
        write_file(args.out + "_failures.txt", manifest);
        std::cerr << result.failures.size() << " trial(s) failed; see " << args.out
                  << "_failures.txt\n";
    }
    if (args.plot) {
        write_file(args.out + "_milgram.svg", milgram_svg(result, param_name));
        write_file(args.out + "_xy.svg", xy_svg(result));
    }
}

struct FitArgs {
    std::string in;
    std::string model = "linear";
    std::string x_col = "x";
    std::string y_col = "y";
    std::string out;
};

void cmd_fit(const FitArgs& args) {
    std::ifstream in(args.in);
    if (!in) throw ns::io_error("cannot open " + args.in);
    const ns::CsvTable table = ns::parse_csv(in);
    const int xi = table.column(args.x_col);
    const int yi = table.column(args.y_col);
    const bool linear = args.model == "linear";
    if (!linear && args.model != "loglinear")
        throw ns::config_error("model must be linear or loglinear");
    std::vector<ns::Point> points;
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
        const double x = table.number_at(r, xi);
        const double y = table.number_at(r, yi);
        if (std::isnan(x) || std::isnan(y)) continue; // undefined rows are excluded
        if (!linear && !(x > 0.0))
            throw ns::domain_error("log-linear fit requires x > 0, violated at row " +
                                   std::to_string(r + 2));
        points.push_back({x, y});
    }
    const ns::FitResult fit = linear ? ns::fit_linear(points) : ns::fit_loglinear(points);
    write_output(args.out, ns::format_fit(fit));
}

struct PlotArgs {
    std::string in;
    std::string style = "milgram";
    std::string out;
};

void cmd_plot(const PlotArgs& args) {
    std::ifstream in(args.in);
    if (!in) throw ns::io_error("cannot open " + args.in);
    const ns::CsvTable table = ns::parse_csv(in);
    ns::ChartSpec spec;
    if (args.style == "milgram") {
        const int param = table.column("param");
        const int q = table.column("q");
        const int log_ratio = table.column("log10_Mq_over_N");
        spec.title = "Milgram condition: log10(Mq/N) by q";
        spec.x_label = "q";
        spec.y_label = "log10(Mq/N)";
        spec.horizontal_line = 0.0;
        std::map<double, ns::Series> by_param;
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            const double p = table.number_at(r, param);
            ns::Series& series = by_param[p];
            if (series.label.empty()) series.label = "param=" + ns::format_double(p);
            const double y = table.number_at(r, log_ratio);
            if (!std::isnan(y)) series.points.push_back({table.number_at(r, q), y});
        }
        for (auto& [p, series] : by_param) spec.series.push_back(std::move(series));
    } else if (args.style == "xy") {
        const int q = table.column("q");
        // Aggregate CSVs carry X_mean; per-trial CSVs carry X.
        const bool aggregated = std::find(table.header.begin(), table.header.end(), "X_mean") !=
                                table.header.end();
        const int x = table.column(aggregated ? "X_mean" : "X");
        const int y = table.column("Y");
        spec.title = "Y = log10 Mq against X = sum of C(p)";
        spec.x_label = "X";
        spec.y_label = "Y";
        std::map<double, ns::Series> by_q;
        for (std::size_t r = 0; r < table.rows.size(); ++r) {
            const double qv = table.number_at(r, q);
            if (qv < 3) continue;
            ns::Series& series = by_q[qv];
            if (series.label.empty()) series.label = "q=" + ns::format_double(qv);
            series.draw_line = false;
            const double yv = table.number_at(r, y);
            if (!std::isnan(yv)) series.points.push_back({table.number_at(r, x), yv});
        }
        for (auto& [qv, series] : by_q) spec.series.push_back(std::move(series));
    } else {
        throw ns::config_error("style must be milgram or xy");
    }
    if (args.out.empty()) throw ns::config_error("plot requires --out <file.svg>");
    write_file(args.out, ns::render_chart(spec));
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact string counting, generalized clustering, and separation-number "
                 "experiments on undirected graphs"};
    app.require_subcommand(1);
    // Consumed before parsing; registered per subcommand so it shows in --help.
    std::string config_path;

    GenerateArgs gen;
    CLI::App* generate = app.add_subcommand("generate", "Generate a seeded random graph");
    generate->add_option("--config", config_path, "flat key = value config file; flags override");
    generate->add_option("--model", gen.model, "sf|nw|ring|er|complete")->capture_default_str();
    generate->add_option("--n", gen.n, "node count")->capture_default_str();
    generate->add_option("--gamma", gen.gamma, "scale-free exponent")->capture_default_str();
    generate->add_option("--kmin", gen.k_min, "scale-free minimum degree")->capture_default_str();
    generate->add_option("--kmax", gen.k_max, "scale-free maximum degree, 0 = floor(sqrt(N))")
        ->capture_default_str();
    generate->add_option("--kbase", gen.k_base, "lattice neighbours per side")
        ->capture_default_str();
    generate->add_option("--alpha", gen.alpha, "small-world shortcut ratio")
        ->capture_default_str();
    generate->add_flag("--rewire", gen.rewire, "rewire lattice edges instead of adding shortcuts");
    generate->add_option("--p", gen.edge_prob, "Erdos-Renyi edge probability")
        ->capture_default_str();
    generate->add_option("--seed", gen.seed, "RNG seed")->capture_default_str();
    generate->add_option("-o,--out", gen.out, "output path (default stdout)");

    MetricsArgs met;
    CLI::App* metrics = app.add_subcommand("metrics", "Per-q string metrics of an edge list");
    metrics->add_option("--config", config_path, "flat key = value config file; flags override");
    metrics->add_option("--in", met.in, "edge-list input")->required();
    metrics->add_option("--qmax", met.q_max, "largest q")->capture_default_str();
    metrics->add_option("--workers", met.workers, "counting threads, 0 = auto")
        ->capture_default_str();
    metrics->add_option("-o,--out", met.out, "output path (default stdout)");

    SweepArgs swp;
    CLI::App* sweep = app.add_subcommand("sweep", "Parameter sweep with trial averaging");
    sweep->add_option("--config", config_path, "flat key = value config file; flags override");
    sweep->add_option("--model", swp.model, "sf|nw")->capture_default_str();
    sweep->add_option("--n", swp.n, "node count")->capture_default_str();
    sweep->add_option("--qmax", swp.q_max, "largest q")->capture_default_str();
    sweep->add_option("--trials", swp.trials, "trials per grid point")->capture_default_str();
    sweep->add_option("--gamma-grid", swp.gamma_grid, "scale-free exponents")->delimiter(',');
    sweep->add_option("--alpha-grid", swp.alpha_grid, "small-world shortcut ratios")
        ->delimiter(',');
    sweep->add_option("--kmin", swp.k_min, "scale-free minimum degree")->capture_default_str();
    sweep->add_option("--kmax", swp.k_max, "scale-free maximum degree, 0 = floor(sqrt(N))")
        ->capture_default_str();
    sweep->add_option("--kbase", swp.k_base, "lattice neighbours per side")
        ->capture_default_str();
    sweep->add_option("--seed", swp.seed, "base seed; trial t uses seed + t")
        ->capture_default_str();
    sweep->add_option("-o,--out", swp.out, "output prefix")->required();
    sweep->add_flag("--plot", swp.plot, "emit SVG charts");
    sweep->add_option("--workers", swp.workers, "worker threads, 0 = auto")
        ->capture_default_str();

    FitArgs fit;
    CLI::App* fit_cmd = app.add_subcommand("fit", "Least-squares fit of CSV columns");
    fit_cmd->add_option("--config", config_path, "flat key = value config file; flags override");
    fit_cmd->add_option("--in", fit.in, "CSV input")->required();
    fit_cmd->add_option("--model", fit.model, "linear|loglinear")->capture_default_str();
    fit_cmd->add_option("--xcol", fit.x_col, "x column name")->capture_default_str();
    fit_cmd->add_option("--ycol", fit.y_col, "y column name")->capture_default_str();
    fit_cmd->add_option("-o,--out", fit.out, "output path (default stdout)");

    PlotArgs plot;
    CLI::App* plot_cmd = app.add_subcommand("plot", "Render an SVG chart from a sweep CSV");
    plot_cmd->add_option("--config", config_path, "flat key = value config file; flags override");
    plot_cmd->add_option("--in", plot.in, "aggregate CSV input")->required();
    plot_cmd->add_option("--style", plot.style, "milgram|xy")->capture_default_str();
    plot_cmd->add_option("-o,--out", plot.out, "output SVG path")->required();

    try {
        std::vector<std::string> args = expand_config_args(argc, argv);
        std::reverse(args.begin(), args.end()); // CLI11 parses reversed vectors
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        const int ceiling = q_ceiling();
        if (generate->parsed()) cmd_generate(gen);
        if (metrics->parsed()) cmd_metrics(met, ceiling);
        if (sweep->parsed()) cmd_sweep(swp, ceiling);
        if (fit_cmd->parsed()) cmd_fit(fit);
        if (plot_cmd->parsed()) cmd_plot(plot);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

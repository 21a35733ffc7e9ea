// Generates one scale-free graph and walks the Milgram condition up to
// q = 7, printing the per-q profile and the resulting separation number.

#include <cstdio>

#include "netstrings/netstrings.hpp"

int main() {
    using namespace netstrings;

    GeneratorConfig cfg;
    cfg.kind = GraphModel::scale_free;
    cfg.n_nodes = 200;
    cfg.gamma = 3.0;
    cfg.k_min = 2;
    cfg.k_max = 199;
    cfg.seed = 6;

    const Graph g = generate(cfg);
    std::printf("scale-free graph: N = %d, %zu edges, largest component %d\n", g.node_count(),
                g.edge_count(), largest_component_size(g));

    const int q_max = 7;
    const auto family = count_strings_family(g, q_max);
    std::printf("%3s %12s %12s %10s %10s\n", "q", "S_bar", "M_q", "log(M/N)", "C(q)");
    for (int q = 2; q <= q_max; ++q) {
        const StringStatistics stats = statistics_from_family(family, q);
        const double m = static_cast<double>(stats.s_bar) / g.node_count();
        const double log_ratio = m > 0 ? std::log10(m / g.node_count()) : 0.0;
        const double c = q >= 3 ? profile_from_family(family, g.node_count(), q)
                                      .c_values.at(q)
                                      .value
                                : 0.0;
        std::printf("%3d %12lld %12.2f %10.3f %10.5f\n", q, static_cast<long long>(stats.s_bar),
                    m, log_ratio, c);
    }
    const auto q_star = separation_number(g, q_max);
    if (q_star)
        std::printf("separation number: %d\n", *q_star);
    else
        std::printf("separation number: not reached within q = %d\n", q_max);
    return 0;
}

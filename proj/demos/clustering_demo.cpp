// Shows how shortcuts dilute the generalized clustering coefficients of a
// small-world graph while shortening separation.

#include <cstdio>

#include "netstrings/netstrings.hpp"

int main() {
    using namespace netstrings;

    std::printf("%7s %10s %10s %10s %8s\n", "alpha", "C(3)", "C(4)", "X(q=6)", "q*");
    for (const double alpha : {0.0, 0.05, 0.2, 0.6, 1.0}) {
        GeneratorConfig cfg;
        cfg.kind = GraphModel::newman_watts;
        cfg.n_nodes = 200;
        cfg.k_base = 2;
        cfg.alpha = alpha;
        cfg.seed = 11;
        const Graph g = generate(cfg);
        const MilgramProfile profile = milgram_profile(g, 6);
        const auto q_star = separation_number(g, 7);
        std::printf("%7.2f %10.5f %10.5f %10.5f %8s\n", alpha, profile.c_values.at(3).value,
                    profile.c_values.at(4).value, profile.x,
                    q_star ? std::to_string(*q_star).c_str() : "none");
    }
    return 0;
}

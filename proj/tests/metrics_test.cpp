#include <catch2/catch.hpp>

#include "netstrings/generators.hpp"
#include "netstrings/metrics.hpp"
#include "oracles.hpp"

using namespace netstrings;

namespace {

Graph random_graph(int n, double p, std::uint64_t seed) {
    GeneratorConfig cfg;
    cfg.kind = GraphModel::erdos_renyi;
    cfg.n_nodes = n;
    cfg.edge_prob = p;
    cfg.seed = seed;
    return generate(cfg);
}

} // namespace

TEST_CASE("generalized clustering known values", "[metrics]") {
    CHECK(generalized_clustering(oracle::complete_graph(3), 3).value == 1.0);
    CHECK(generalized_clustering(oracle::star_graph(4), 3).value == 0.0);
    CHECK(generalized_clustering(oracle::cycle_graph(4), 4).value == 1.0);
}

TEST_CASE("zero denominator is a flagged zero, not an error", "[metrics]") {
    const Graph edgeless = from_edge_list("# nodes 4\n");
    const ClusteringValue c = generalized_clustering(edgeless, 3);
    CHECK(c.value == 0.0);
    CHECK(c.degenerate);
    CHECK_FALSE(generalized_clustering(oracle::complete_graph(4), 3).degenerate);
}

TEST_CASE("closed-form C(3) on hand-checked graphs", "[metrics]") {
    CHECK(clustering_c3_closed_form(oracle::complete_graph(3)) == 1.0);
    CHECK(clustering_c3_closed_form(oracle::path_graph(3)) == 0.0);
    CHECK_THROWS_AS(clustering_c3_closed_form(from_edge_list("# nodes 3\n")),
                    degenerate_graph_error);
    // A single edge has no 2-edge path either.
    CHECK_THROWS_AS(clustering_c3_closed_form(from_edge_list("0 1")), degenerate_graph_error);
}

TEST_CASE("closed form, generalized form, and the textbook value agree exactly", "[metrics]") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
        const Graph g = random_graph(15, 0.3, 300 + seed);
        const auto textbook = oracle::textbook_global_clustering(g);
        if (!textbook) continue;
        const double closed = clustering_c3_closed_form(g);
        const ClusteringValue general = generalized_clustering(g, 3);
        CAPTURE(seed);
        CHECK(general.value == closed);
        CHECK(general.value == Approx(*textbook).epsilon(1e-12));
    }
}

TEST_CASE("C(p) is 1 on the p-cycle", "[metrics]") {
    for (int p = 3; p <= 7; ++p) {
        CAPTURE(p);
        CHECK(generalized_clustering(oracle::cycle_graph(p), p).value == 1.0);
    }
}

TEST_CASE("C(p) vanishes on trees", "[metrics]") {
    const Graph tree = oracle::tree_graph(14);
    for (int p = 3; p <= 7; ++p) CHECK(generalized_clustering(tree, p).value == 0.0);
}

TEST_CASE("C(p) is zero exactly when there is no p-gon", "[metrics]") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const Graph g = random_graph(10, 0.3, 400 + seed);
        const auto family = count_strings_family(g, 6);
        for (int p = 3; p <= 6; ++p) {
            const StringStatistics stats = statistics_from_family(family, p);
            const ClusteringValue c = generalized_clustering(g, p);
            CAPTURE(seed, p);
            CHECK((c.value == 0.0) == (stats.delta == 0));
        }
    }
}

TEST_CASE("milgram ratio is exact", "[metrics]") {
    const Rational k4 = milgram_ratio(oracle::complete_graph(4), 3);
    CHECK(k4 == Rational(3, 1));

    const Rational none = milgram_ratio(from_edge_list("# nodes 6\n"), 3);
    CHECK(none.num == 0);

    const Rational k20 = milgram_ratio(oracle::complete_graph(20), 3);
    CHECK(k20 == Rational(171, 1)); // 20 * C(19,2) / 20
}

TEST_CASE("separation number of K20 is 3", "[metrics]") {
    const Graph k20 = oracle::complete_graph(20);
    CHECK(separation_number(k20, 7) == 3);
    CHECK_FALSE(separation_number(from_edge_list("# nodes 8\n"), 7).has_value());
}

TEST_CASE("separation number respects the threshold monotonically", "[metrics]") {
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        const Graph g = random_graph(12, 0.5, 500 + seed);
        const auto family = count_strings_family(g, 6);
        const auto q_star = separation_number(g, 6);
        for (int q = 2; q <= 6; ++q) {
            const count_t s_bar = family[q - 2].counts.entry_sum() / 2;
            const bool satisfied =
                s_bar >= static_cast<count_t>(g.node_count()) * g.node_count();
            if (satisfied) {
                REQUIRE(q_star.has_value());
                CHECK(*q_star <= q);
            }
        }
    }
}

TEST_CASE("milgram profile of K3", "[metrics]") {
    const MilgramProfile profile = milgram_profile(oracle::complete_graph(3), 3);
    CHECK(profile.x == 1.0);
    CHECK(profile.m_q == Rational(1, 1));
    CHECK(profile.y == 0.0);
    CHECK(profile.y_defined);
    CHECK(profile.c_values.at(3).value == 1.0);
}

TEST_CASE("milgram profile of a tree has X = 0", "[metrics]") {
    const MilgramProfile profile = milgram_profile(oracle::tree_graph(10), 5);
    CHECK(profile.x == 0.0);
    for (const auto& [p, c] : profile.c_values) CHECK(c.value == 0.0);
}

TEST_CASE("milgram profile of the 4-leaf star", "[metrics]") {
    // Six 2-edge paths through the center (one per leaf pair), so
    // S_bar(3) = 6 and M_3 = 6/5; verified against the enumeration oracle.
    const Graph star = oracle::star_graph(4);
    const auto enumerated = oracle::enumerate_strings(star, 2);
    count_t total = 0;
    for (int i = 0; i < 5; ++i)
        for (int j = 0; j < 5; ++j) total += enumerated(i, j);
    CHECK(total / 2 == 6);

    const MilgramProfile profile = milgram_profile(star, 3);
    CHECK(profile.x == 0.0);
    CHECK(profile.m_q == Rational(6, 5));
}

TEST_CASE("undefined Y is flagged when M_q is zero", "[metrics]") {
    const MilgramProfile profile = milgram_profile(from_edge_list("# nodes 4\n"), 3);
    CHECK_FALSE(profile.y_defined);
    CHECK_FALSE(profile.log_ratio_defined);
    CHECK(profile.m_q.num == 0);
}

TEST_CASE("X is non-decreasing in q", "[metrics]") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const Graph g = random_graph(14, 0.35, 600 + seed);
        double previous = 0.0;
        for (int q = 3; q <= 6; ++q) {
            const double x = milgram_profile(g, q).x;
            CHECK(x >= previous);
            previous = x;
        }
    }
}

TEST_CASE("empirical C(p) bound is observed, not enforced", "[metrics]") {
    // No upper bound on C(p) is asserted anywhere; this only records the
    // largest value seen across a mixed bag of graphs.
    double max_c = 0.0;
    auto scan = [&](const Graph& g) {
        const auto family = count_strings_family(g, 6);
        for (int p = 3; p <= 6; ++p)
            max_c = std::max(max_c, detail::clustering_from_family(family, p).value);
    };
    for (std::uint64_t seed = 1; seed <= 10; ++seed) scan(random_graph(14, 0.4, 900 + seed));
    scan(oracle::complete_graph(7));
    scan(oracle::cycle_graph(6));
    INFO("largest C(p) observed: " << max_c);
    if (max_c > 1.0) WARN("C(p) exceeded 1: " << max_c);
    CHECK(max_c >= 0.0);
}

TEST_CASE("profile reuses one family consistently", "[metrics]") {
    const Graph g = random_graph(12, 0.4, 777);
    const auto family = count_strings_family(g, 5);
    const MilgramProfile from_family = profile_from_family(family, g.node_count(), 5);
    const MilgramProfile direct = milgram_profile(g, 5);
    CHECK(from_family.x == direct.x);
    CHECK(from_family.m_q == direct.m_q);
    for (int p = 3; p <= 5; ++p)
        CHECK(from_family.c_values.at(p).value == direct.c_values.at(p).value);
}

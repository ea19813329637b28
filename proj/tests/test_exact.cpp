// Exhaustive oracles: connected Grundy, Grundy, chromatic number. The worked
// six-vertex example is frozen here (Grundy 4 vs connected Grundy 3), plus
// family values, witness validity, and the budget refusals.

#include "doctest.h"

#include <set>

#include "cgc/coloring.hpp"
#include "cgc/exact.hpp"
#include "cgc/graph.hpp"
#include "test_util.hpp"

using namespace cgc;
using namespace cgc::testutil;

namespace {

Graph complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
    return make_graph(n, e);
}

Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 1; u < n; ++u) e.emplace_back(u, u + 1);
    e.emplace_back(n, 1);
    return make_graph(n, e);
}

Graph path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 1; u < n; ++u) e.emplace_back(u, u + 1);
    return make_graph(n, e);
}

// 5-cycle a-b-c-d-e plus f adjacent to a,b (vertices 1..6to a..f).
Graph example6() {
    return make_graph(6, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 6}, {2, 6}});
}

}  // namespace

TEST_CASE("six-vertex example: Grundy 4 but connected Grundy 3") {
    Graph g = example6();
    ExactResult gamma = brute_gamma(g);
    CHECK(gamma.value == 4);
    Coloring cg = first_fit(g, gamma.witness);
    CHECK(cg.used_colors == 4);
    CHECK(validate_grundy(g, cg));

    ExactResult gc = brute_gamma_c(g);
    CHECK(gc.value == 3);
    CHECK(is_connected_sequence(g, gc.witness));
    Coloring cc = first_fit(g, gc.witness);
    CHECK(cc.used_colors == 3);
    CHECK(validate_grundy(g, cc));
}

TEST_CASE("family values") {
    SUBCASE("complete graphs") {
        for (int n = 1; n <= 6; ++n) {
            Graph k = complete(n);
            CHECK(brute_gamma_c(k).value == n);
            if (n <= 6) CHECK(brute_gamma(k).value == n);
            CHECK(brute_chromatic(k) == n);
        }
    }
    SUBCASE("paths: Grundy grows, connected Grundy stays 2") {
        CHECK(brute_gamma(path(4)).value == 3);
        CHECK(brute_gamma_c(path(4)).value == 2);
        CHECK(brute_gamma_c(path(8)).value == 2);
        CHECK(brute_chromatic(path(5)) == 2);
    }
    SUBCASE("cycles") {
        CHECK(brute_chromatic(cycle(4)) == 2);
        CHECK(brute_chromatic(cycle(5)) == 3);
        CHECK(brute_gamma_c(cycle(4)).value == 2);
        CHECK(brute_gamma_c(cycle(5)).value == 3);
    }
    SUBCASE("single vertex and single edge") {
        CHECK(brute_gamma_c(make_graph(1, {})).value == 1);
        CHECK(brute_gamma_c(complete(2)).value == 2);
        CHECK(brute_gamma(make_graph(1, {})).value == 1);
        CHECK(brute_chromatic(make_graph(1, {})) == 1);
    }
}

TEST_CASE("connected bipartite graphs have connected Grundy number 2") {
    for (std::uint64_t s = 0; s < 60; ++s) {
        Graph g = random_connected_bipartite(8, 0.5, 40 + s);
        REQUIRE(g.m >= 1);
        CAPTURE(write_dimacs(g));
        CHECK(brute_gamma_c(g).value == 2);
    }
}

TEST_CASE("gamma_c <= gamma on every small connected graph") {
    for_each_labeled_graph(5, true, [](const Graph& g) {
        ExactResult gc = brute_gamma_c(g);
        ExactResult gamma = brute_gamma(g);
        CAPTURE(write_dimacs(g));
        CHECK(gc.value <= gamma.value);
        CHECK(brute_chromatic(g) <= gc.value);
    });
    for (std::uint64_t s = 0; s < 40; ++s) {
        Graph g = random_connected(7, 0.4, 800 + s);
        CHECK(brute_gamma_c(g).value <= brute_gamma(g).value);
    }
}

TEST_CASE("witnesses are genuine achievers") {
    for (std::uint64_t s = 0; s < 50; ++s) {
        Graph g = random_connected(8, 0.35, 1200 + s);
        ExactResult gc = brute_gamma_c(g);
        REQUIRE(is_permutation(gc.witness, g.n));
        CHECK(is_connected_sequence(g, gc.witness));
        CHECK(first_fit(g, gc.witness).used_colors == gc.value);

        ExactResult gamma = brute_gamma(g);
        REQUIRE(is_permutation(gamma.witness, g.n));
        CHECK(first_fit(g, gamma.witness).used_colors == gamma.value);
    }
}

TEST_CASE("budget refusals") {
    Graph big = random_connected(11, 0.3, 5);
    CHECK_THROWS_AS(brute_gamma_c(big, 10), BudgetExceeded);
    CHECK_THROWS_AS(brute_gamma(random_connected(10, 0.3, 5), 9), BudgetExceeded);
    CHECK_THROWS_AS(brute_chromatic(random_connected(13, 0.3, 5), 12), BudgetExceeded);
    CHECK_THROWS_AS(brute_vertex_color_max(random_connected(9, 0.3, 5), 8), BudgetExceeded);
    // raising the limit admits the instance
    CHECK_NOTHROW(brute_gamma_c(big, 11));
}

TEST_CASE("brute_gamma_c requires a connected graph") {
    Graph split = make_graph(4, {{1, 2}, {3, 4}});
    CHECK_THROWS_AS(brute_gamma_c(split), std::invalid_argument);
}

TEST_CASE("vertex color maxima agree with the sequence oracle") {
    for (std::uint64_t s = 0; s < 25; ++s) {
        Graph g = generate({GraphClass::random_uniform, 6, 0.5, 90 + s});
        std::vector<int> caps = brute_vertex_color_max(g);
        int best = 0;
        for (int v = 1; v <= g.n; ++v) best = std::max(best, caps[v]);
        CHECK(best == brute_gamma(g).value);
    }
}

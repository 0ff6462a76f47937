#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gluing/acceptance.hpp"
#include "gluing/solvers.hpp"

using namespace gluing;

namespace {

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) e.emplace_back(u, v);
    return make_graph(n, e);
}

Graph cycle_graph(int n) {
    std::vector<std::pair<int, int>> e;
    for (int v = 1; v < n; ++v) e.emplace_back(v, v + 1);
    e.emplace_back(1, n);
    return make_graph(n, e);
}

Graph grid3x3() {
    return make_graph(9, {{1, 2}, {2, 3}, {4, 5}, {5, 6}, {7, 8}, {8, 9},
                          {1, 4}, {4, 7}, {2, 5}, {5, 8}, {3, 6}, {6, 9}});
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> e;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (coin(rng) < p) e.emplace_back(u, v);
    return make_graph(n, e);
}

} // namespace

TEST_CASE("exact treewidth on known graphs") {
    CHECK(exact_treewidth(make_graph(1, {})).width == 0);
    CHECK(exact_treewidth(make_graph(5, {})).width == 0);
    CHECK(exact_treewidth(path_graph(8)).width == 1);
    CHECK(exact_treewidth(star_graph(8)).width == 1);
    CHECK(exact_treewidth(cycle_graph(8)).width == 2);
    CHECK(exact_treewidth(complete_graph(5)).width == 4);
    CHECK(exact_treewidth(grid3x3()).width == 3);
    // K_{3,3}
    Graph k33 = make_graph(6, {{1, 4}, {1, 5}, {1, 6}, {2, 4}, {2, 5}, {2, 6},
                               {3, 4}, {3, 5}, {3, 6}});
    CHECK(exact_treewidth(k33).width == 3);
    CHECK_THROWS_AS(exact_treewidth(complete_graph(5), 4), std::invalid_argument);
}

TEST_CASE("treewidth witnesses validate at the reported width") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 30; ++i) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph g = random_graph(n, 0.4, rng);
        TreewidthResult r = exact_treewidth(g);
        CHECK(validate_td(g, r.witness).valid);
        CHECK(r.witness.width() == r.width);
    }
}

TEST_CASE("exact pathwidth on known graphs") {
    CHECK(exact_pathwidth(path_graph(8)).width == 1);
    CHECK(exact_pathwidth(star_graph(8)).width == 1);
    CHECK(exact_pathwidth(cycle_graph(8)).width == 2);
    CHECK(exact_pathwidth(complete_graph(5)).width == 4);
    // complete binary tree on 15 vertices has pathwidth 2
    std::vector<std::pair<int, int>> e;
    for (int v = 2; v <= 15; ++v) e.emplace_back(v / 2, v);
    CHECK(exact_pathwidth(make_graph(15, e)).width == 2);
}

TEST_CASE("pathwidth layout is lexicographically smallest optimal") {
    PathwidthResult r = exact_pathwidth(path_graph(4));
    CHECK(r.width == 1);
    CHECK(r.layout.order == std::vector<int>{1, 2, 3, 4});
    CHECK(vs_of_layout(path_graph(4), r.layout) == r.width);
    // star center 1: layout (1,2,...) is optimal and lexicographically first
    PathwidthResult s = exact_pathwidth(star_graph(5));
    CHECK(s.layout.order == std::vector<int>{1, 2, 3, 4, 5});
}

TEST_CASE("pathwidth witnesses validate and match the layout") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 30; ++i) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = random_graph(n, 0.4, rng);
        PathwidthResult r = exact_pathwidth(g);
        CHECK(validate_td(g, r.witness).valid);
        CHECK(r.witness.is_path_shaped());
        CHECK(vs_of_layout(g, r.layout) == r.width);
    }
}

TEST_CASE("solvers agree with exhaustive oracles") {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 40; ++i) {
        int n = 1 + static_cast<int>(rng() % 7);
        Graph g = random_graph(n, 0.5, rng);
        CHECK(exact_treewidth(g).width == accept::brute_force_treewidth(g));
        CHECK(exact_pathwidth(g).width == accept::brute_force_pathwidth(g));
    }
}

TEST_CASE("bounds bracket the exact treewidth") {
    std::mt19937_64 rng(24);
    for (int i = 0; i < 25; ++i) {
        int n = 2 + static_cast<int>(rng() % 11);
        Graph g = random_graph(n, 0.4, rng);
        int tw = exact_treewidth(g).width;
        CHECK(degeneracy(g) <= tw);
        CHECK(tw <= greedy_fillin_width(g));
    }
}

TEST_CASE("minimum vertex cover") {
    CHECK(min_vertex_cover(path_graph(4)).size() == 2);
    CHECK(min_vertex_cover(star_graph(9)).size() == 1);
    CHECK(min_vertex_cover(make_graph(5, {})).empty());
    std::mt19937_64 rng(25);
    for (int i = 0; i < 20; ++i) {
        int n = 1 + static_cast<int>(rng() % 10);
        Graph g = random_graph(n, 0.4, rng);
        auto cover = min_vertex_cover(g);
        std::vector<char> in(n + 1, 0);
        for (int v : cover) in[v] = 1;
        for (auto [u, v] : g.edges) CHECK((in[u] || in[v]));
        // exhaustive optimum
        size_t best = n;
        for (uint32_t mask = 0; mask < (1u << n); ++mask) {
            bool covers = true;
            for (auto [u, v] : g.edges)
                if (!(mask & (1u << (u - 1))) && !(mask & (1u << (v - 1)))) {
                    covers = false;
                    break;
                }
            if (covers) best = std::min<size_t>(best, __builtin_popcount(mask));
        }
        CHECK(cover.size() == best);
    }
}

TEST_CASE("smoothify produces smooth decompositions") {
    std::mt19937_64 rng(26);
    for (int i = 0; i < 25; ++i) {
        int n = 2 + static_cast<int>(rng() % 14);
        Graph g = random_graph(n, 0.35, rng);
        TreewidthResult r = exact_treewidth(g);
        if (r.width == 0) continue; // smoothness needs at least one edge
        TreeDecomposition s = smoothify(g, r.witness);
        CHECK(validate_td(g, s).valid);
        CHECK(s.node_count() == n - r.width);
        for (int b = 1; b <= s.node_count(); ++b)
            CHECK(static_cast<int>(s.bag(b).size()) == r.width + 1);
    }
}

TEST_CASE("partial k-trees come with valid width-k witnesses") {
    std::mt19937_64 rng(27);
    for (int k : {1, 2, 3}) {
        PartialKTree pk = partial_ktree(15, k, 0.8, rng);
        CHECK(validate_td(pk.graph, pk.witness).valid);
        CHECK(pk.witness.width() == k);
        CHECK(exact_treewidth(pk.graph).width <= k);
    }
}

TEST_CASE("window graphs respect their layout bound") {
    std::mt19937_64 rng(28);
    for (int l : {1, 2, 3}) {
        WindowGraph w = window_graph(18, l, 0.7, rng);
        CHECK(vs_of_layout(w.graph, w.layout) <= l);
    }
}

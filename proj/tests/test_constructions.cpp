#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "gluing/constructions.hpp"

using namespace gluing;

TEST_CASE("tilt, frozen 9-vertex instance") {
    Graph t = make_graph(9, {{1, 2}, {1, 3}, {1, 6}, {1, 9}, {3, 4}, {3, 5}, {6, 7}, {6, 8}});
    RootedTree rt = root_and_order(t, 1);
    Layout sigma = dfs_preorder(rt);
    CHECK(sigma.order == std::vector<int>{1, 2, 3, 4, 5, 6, 7, 8, 9});
    TiltTree tt = tilt(rt, sigma);
    Graph expect = make_graph(
        9, {{1, 2}, {2, 3}, {3, 6}, {6, 9}, {3, 4}, {4, 5}, {6, 7}, {7, 8}});
    CHECK(tt.tree.underlying.edges == expect.edges);
    CHECK(tt.tree.root == 1);
    CHECK(dfs_preorder(tt.tree).order == sigma.order);
}

TEST_CASE("tilt rejects non-DFS orderings") {
    RootedTree rt = root_and_order(path_graph(4), 1);
    CHECK_THROWS_AS(tilt(rt, make_layout({1, 3, 2, 4})), std::invalid_argument);
    CHECK_THROWS_AS(tilt(rt, make_layout({2, 1, 3, 4})), std::invalid_argument);
}

TEST_CASE("tilt keeps degree at most 3 on random trees") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 30; ++i) {
        int n = 2 + static_cast<int>(rng() % 30);
        RootedTree rt = root_and_order(random_tree(n, rng), 1);
        TiltTree tt = tilt(rt, dfs_preorder(rt)); // postconditions checked inside
        auto deg = tt.tree.underlying.degrees();
        CHECK(*std::max_element(deg.begin() + 1, deg.end()) <= 3);
    }
}

TEST_CASE("cover gluing works for arbitrary permutations") {
    std::mt19937_64 rng(32);
    Graph g1 = random_tree(12, rng);
    Graph g2 = random_tree(12, rng);
    std::vector<int> cover = min_vertex_cover(g1);
    TreeDecomposition d2 = tree_decomposition_of_tree(g2);
    for (int t = 0; t < 100; ++t) {
        GluingResult r = glue_via_cover(g1, cover, g2, d2, Permutation::random(12, rng));
        CHECK(r.claimed_bound == static_cast<int>(cover.size()) + 1);
    }
    // rejects a non-cover
    CHECK_THROWS_AS(glue_via_cover(g1, {}, g2, d2, Permutation::identity(12)),
                    std::invalid_argument);
}

TEST_CASE("layout gluing of two paths stays narrow") {
    GluingResult r = glue_via_layouts(path_graph(10), path_graph(10));
    CHECK(r.claimed_bound == 2);
    CHECK(r.witness.width() <= 2);
    CHECK(r.witness.is_path_shaped());
    CHECK(exact_treewidth(r.glued).width <= 2);
}

TEST_CASE("tw-pw gluing meets its bound and its exact width") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 10; ++i) {
        int n = 6 + static_cast<int>(rng() % 9); // 6..14
        Graph g1 = random_tree(n, rng);
        Graph g2 = random_tree(n, rng);
        GluingResult r = glue_tw_pw(g1, g2);
        CHECK(exact_treewidth(r.glued).width <= r.witness.width());
        CHECK(r.witness.width() <= r.claimed_bound);
    }
}

TEST_CASE("tw-pw gluing with supplied witnesses, including l > k + 1") {
    std::mt19937_64 rng(34);
    Graph g1 = random_tree(14, rng);
    // keep sampling window graphs until the layout really costs 3
    for (int attempt = 0; attempt < 50; ++attempt) {
        WindowGraph w = window_graph(14, 3, 0.9, rng);
        if (vs_of_layout(w.graph, w.layout) != 3) continue;
        GluingResult r =
            glue_tw_pw(g1, w.graph, tree_decomposition_of_tree(g1), w.layout);
        CHECK(r.claimed_bound == 1 + 3 * 3 + 1);
        CHECK(r.witness.width() <= r.claimed_bound);
        return;
    }
    FAIL("no window graph with separation cost 3 found");
}

TEST_CASE("tw-pw gluing degenerate cases") {
    // single vertex
    GluingResult r1 = glue_tw_pw(make_graph(1, {}), make_graph(1, {}));
    CHECK(r1.witness.width() == 0);
    // complete graph glued with a path
    std::vector<std::pair<int, int>> ke;
    for (int u = 1; u <= 4; ++u)
        for (int v = u + 1; v <= 4; ++v) ke.emplace_back(u, v);
    GluingResult r2 = glue_tw_pw(make_graph(4, ke), path_graph(4));
    CHECK(r2.witness.width() <= r2.claimed_bound);
}

TEST_CASE("path-tree gluing, small exhaustive confidence") {
    std::mt19937_64 rng(35);
    for (int i = 0; i < 30; ++i) {
        int n = 1 + static_cast<int>(rng() % 12);
        Graph t = random_tree(n, rng);
        GluingResult r = glue_path_tree(path_graph(n), t);
        CHECK(r.claimed_bound == 2);
        for (const auto& b : r.witness.bags) CHECK(b.size() <= 3);
        CHECK(exact_treewidth(r.glued).width <= 2);
        // the tree survives inside the union
        for (auto [u, v] : t.edges) CHECK(r.glued.has_edge(u, v));
    }
    CHECK_THROWS_AS(glue_path_tree(star_graph(5), path_graph(5)), std::invalid_argument);
}

TEST_CASE("check_gluing rejects tampered results") {
    Graph g1 = path_graph(6);
    Graph g2 = path_graph(6);
    GluingResult r = glue_via_layouts(g1, g2);
    GluingResult bad = r;
    bad.claimed_bound = 0;
    CHECK_THROWS_AS(check_gluing(g1, g2, bad), std::logic_error);
    bad = r;
    bad.glued = star_graph(6);
    CHECK_THROWS_AS(check_gluing(g1, g2, bad), std::logic_error);
}

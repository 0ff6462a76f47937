#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "gluing/graph.hpp"

using namespace gluing;

TEST_CASE("make_graph normalizes, deduplicates, validates") {
    Graph g = make_graph(4, {{3, 1}, {1, 3}, {2, 4}});
    CHECK(g.edges == std::vector<std::pair<int, int>>{{1, 3}, {2, 4}});
    CHECK(g.has_edge(3, 1));
    CHECK(!g.has_edge(1, 2));
    CHECK_THROWS_AS(make_graph(3, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(3, {{2, 2}}), std::invalid_argument);
}

TEST_CASE("permutation algebra") {
    Permutation phi = make_permutation({2, 3, 1});
    Permutation inv = phi.inverse();
    for (int i = 1; i <= 3; ++i) CHECK(inv(phi(i)) == i);
    Permutation both = compose(inv, phi);
    CHECK(both.images == Permutation::identity(3).images);
    CHECK_THROWS_AS(make_permutation({1, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(make_permutation({0, 1, 2}), std::invalid_argument);

    std::mt19937_64 rng(7);
    Permutation r = Permutation::random(6, rng);
    std::set<int> img(r.images.begin(), r.images.end());
    CHECK(img.size() == 6);
}

TEST_CASE("gluing two trees, frozen instance") {
    // two 9-vertex trees whose union depends heavily on the permutation
    Graph g1 = make_graph(9, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {3, 6}, {3, 7}, {4, 8}, {4, 9}});
    Graph g2 = make_graph(9, {{1, 3}, {2, 4}, {3, 5}, {4, 5}, {5, 6}, {6, 7}, {6, 8}, {8, 9}});

    Graph id_union = glue(g1, g2, Permutation::identity(9));
    CHECK(id_union.edge_count() == 15); // edge {1,3} is shared

    Permutation phi = make_permutation({6, 7, 5, 8, 3, 1, 2, 9, 4});
    Graph g = glue(g1, g2, phi);
    Graph expected_image = make_graph(
        9, {{6, 7}, {5, 6}, {6, 8}, {3, 6}, {1, 5}, {2, 5}, {8, 9}, {4, 8}});
    CHECK(apply_permutation(g1, phi).edges == expected_image.edges);
    CHECK(g.edge_count() == 12); // four edges coincide under this phi
    for (auto e : expected_image.edges) CHECK(g.has_edge(e.first, e.second));
    for (auto e : g2.edges) CHECK(g.has_edge(e.first, e.second));
}

TEST_CASE("layouts and rooted trees") {
    Layout pi = make_layout({3, 1, 2});
    auto pos = pi.positions();
    CHECK(pos[3] == 1);
    CHECK(pos[1] == 2);
    CHECK(pos[2] == 3);
    CHECK_THROWS_AS(make_layout({1, 1, 2}), std::invalid_argument);

    Graph t = make_graph(5, {{1, 2}, {2, 3}, {2, 4}, {4, 5}});
    RootedTree rt = root_and_order(t, 1);
    CHECK(rt.parent[1] == 0);
    CHECK(rt.parent[3] == 2);
    CHECK(rt.children[2] == std::vector<int>{3, 4});
    auto lev = rt.levels();
    CHECK(lev[5] == 3);
    auto sz = rt.subtree_sizes();
    CHECK(sz[1] == 5);
    CHECK(sz[4] == 2);
    CHECK(dfs_preorder(rt).order == std::vector<int>{1, 2, 3, 4, 5});
    auto walk = dfs_walk(rt);
    CHECK(walk.size() == 2 * 4 + 1);
    CHECK(walk.front() == 1);
    CHECK(walk.back() == 1);
}

TEST_CASE("tree classification") {
    CHECK(classify_tree_kind(path_graph(5)).is_path);
    CHECK(classify_tree_kind(path_graph(5)).is_caterpillar);
    CHECK(classify_tree_kind(star_graph(5)).kind == TreeKind::star);
    CHECK(classify_tree_kind(star_graph(5)).is_caterpillar);
    Graph cat = caterpillar_graph({2, 0, 1});
    CHECK(classify_tree_kind(cat).kind == TreeKind::caterpillar);
    // spider: three legs of length 2 is a tree but not a caterpillar
    Graph spider = make_graph(7, {{1, 2}, {2, 3}, {1, 4}, {4, 5}, {1, 6}, {6, 7}});
    TreeClass sc = classify_tree_kind(spider);
    CHECK(sc.is_tree);
    CHECK(!sc.is_caterpillar);
    Graph cycle = make_graph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
    CHECK(classify_tree_kind(cycle).kind == TreeKind::not_tree);
    CHECK(classify_tree_kind(make_graph(1, {})).is_path);
}

TEST_CASE("random generators produce the advertised families") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 25; ++i) {
        int n = 2 + static_cast<int>(rng() % 19);
        Graph t = random_tree(n, rng);
        CHECK(t.edge_count() == n - 1);
        CHECK(is_connected(t));
        Graph c = random_caterpillar(n, rng);
        CHECK(classify_tree_kind(c).is_caterpillar);
    }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gluing/decomposition.hpp"
#include "gluing/graph.hpp"

using namespace gluing;

TEST_CASE("validate_td flags each violation kind") {
    Graph g = make_graph(4, {{1, 2}, {2, 3}, {3, 4}});
    // valid baseline
    TreeDecomposition ok =
        make_tree_decomposition(4, {{1, 2}, {2, 3}, {3, 4}}, {{1, 2}, {2, 3}});
    CHECK(validate_td(g, ok).valid);
    CHECK(ok.width() == 1);
    CHECK(ok.is_path_shaped());

    // (I): vertex 4 in no bag
    auto r1 = validate_td(g, make_tree_decomposition(4, {{1, 2}, {2, 3}}, {{1, 2}}));
    CHECK(!r1.valid);

    // (II): edge {3,4} in no bag
    auto r2 = validate_td(
        g, make_tree_decomposition(4, {{1, 2}, {2, 3}, {4}}, {{1, 2}, {2, 3}}));
    CHECK(!r2.valid);

    // (III): occurrences of vertex 2 disconnected
    auto r3 = validate_td(g, make_tree_decomposition(4, {{1, 2}, {3, 4}, {2, 3}},
                                                     {{1, 2}, {2, 3}}));
    CHECK(!r3.valid);

    // malformed node tree: cycle
    auto r4 = validate_td(
        g, make_tree_decomposition(4, {{1, 2}, {2, 3}, {3, 4}},
                                   {{1, 2}, {2, 3}, {1, 3}}));
    CHECK(!r4.valid);
}

TEST_CASE("separation profile of a path under the identity layout") {
    Graph p = path_graph(5);
    Layout id = make_layout({1, 2, 3, 4, 5});
    auto s = separation_profile(p, id);
    CHECK(s[1].empty());
    for (int v = 2; v <= 5; ++v) CHECK(s[v] == std::vector<int>{v - 1});
    CHECK(vs_of_layout(p, id) == 1);

    TreeDecomposition d = path_decomposition_from_layout(p, id);
    CHECK(validate_td(p, d).valid);
    CHECK(d.width() == vs_of_layout(p, id));
    CHECK(d.is_path_shaped());
}

TEST_CASE("bad layouts cost more") {
    Graph p = path_graph(5);
    Layout bad = make_layout({1, 3, 5, 2, 4});
    CHECK(vs_of_layout(p, bad) > 1);
    TreeDecomposition d = path_decomposition_from_layout(p, bad);
    CHECK(validate_td(p, d).valid);
    CHECK(d.width() == vs_of_layout(p, bad));
}

TEST_CASE("tree decompositions of trees have width at most 1") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        int n = 1 + static_cast<int>(rng() % 20);
        Graph t = random_tree(n, rng);
        TreeDecomposition d = tree_decomposition_of_tree(t);
        CHECK(validate_td(t, d).valid);
        CHECK(d.width() <= 1);
    }
    // forests with isolated vertices work too
    Graph f = make_graph(4, {{2, 3}});
    TreeDecomposition d = tree_decomposition_of_tree(f);
    CHECK(validate_td(f, d).valid);
}

TEST_CASE("caterpillar layouts witness vertex separation 1") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 20; ++i) {
        int n = 2 + static_cast<int>(rng() % 30);
        Graph c = random_caterpillar(n, rng);
        CHECK(vs_of_layout(c, caterpillar_layout(c)) <= 1);
    }
    CHECK_THROWS_AS(
        caterpillar_layout(make_graph(7, {{1, 2}, {2, 3}, {1, 4}, {4, 5}, {1, 6}, {6, 7}})),
        std::invalid_argument);
}

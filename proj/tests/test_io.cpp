#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <sstream>

#include "gluing/constructions.hpp"
#include "gluing/io.hpp"
#include "gluing/solvers.hpp"

using namespace gluing;

namespace {

Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> e;
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v)
            if (coin(rng) < p) e.emplace_back(u, v);
    return make_graph(n, e);
}

} // namespace

TEST_CASE("gr round trip") {
    std::mt19937_64 rng(51);
    for (int i = 0; i < 20; ++i) {
        Graph g = random_graph(1 + static_cast<int>(rng() % 15), 0.4, rng);
        std::stringstream ss;
        write_gr(ss, g, {"round trip"});
        Graph back = read_gr(ss);
        CHECK(back.n == g.n);
        CHECK(back.edges == g.edges);
    }
}

TEST_CASE("gr parse errors carry location") {
    auto expect_error = [](const std::string& text, const std::string& needle) {
        std::stringstream ss(text);
        try {
            read_gr(ss, "input.gr");
            FAIL("expected a parse error for: " << text);
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()).find("input.gr") != std::string::npos);
            CHECK(std::string(e.what()).find(needle) != std::string::npos);
        }
    };
    expect_error("p xx 3 1\n1 2\n", "header");
    expect_error("p tw 3 1\n1 4\n", "out of range");
    expect_error("p tw 3 2\n1 2\n", "announces 2 edges");
    expect_error("c only comments\n", "header");
    expect_error("p tw 3 1\n1 2 7\n", "trailing");
}

TEST_CASE("td round trip") {
    std::mt19937_64 rng(52);
    for (int i = 0; i < 15; ++i) {
        Graph g = random_graph(2 + static_cast<int>(rng() % 10), 0.4, rng);
        TreeDecomposition d = exact_treewidth(g).witness;
        std::stringstream ss;
        write_td(ss, d);
        TreeDecomposition back = read_td(ss);
        CHECK(back.target_n == d.target_n);
        CHECK(back.bags == d.bags);
        CHECK(back.tree_edges == d.tree_edges);
        CHECK(validate_td(g, back).valid);
    }
    std::stringstream bad("s td 2 2 3\nb 1 1 2\nb 1 2 3\n1 2\n");
    CHECK_THROWS_AS(read_td(bad), std::runtime_error); // duplicate bag
}

TEST_CASE("perm round trip") {
    std::mt19937_64 rng(53);
    for (int i = 0; i < 20; ++i) {
        Permutation phi = Permutation::random(1 + static_cast<int>(rng() % 20), rng);
        std::stringstream ss;
        write_perm(ss, phi);
        CHECK(read_perm(ss).images == phi.images);
    }
    std::stringstream bad("1 1 3\n");
    CHECK_THROWS_AS(read_perm(bad), std::invalid_argument);
}

TEST_CASE("write_gluing_result emits a readable triple") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "gluing-io-test";
    fs::create_directories(dir);
    std::mt19937_64 rng(54);
    Graph g1 = random_tree(9, rng);
    Graph g2 = random_tree(9, rng);
    GluingResult r = glue_via_layouts(g1, g2);
    std::string stem = (dir / "result").string();
    write_gluing_result(stem, r, 54);

    Graph glued = read_gr_file(stem + ".gr");
    Permutation phi = read_perm_file(stem + ".perm");
    TreeDecomposition wit = read_td_file(stem + ".td");
    CHECK(glued.edges == r.glued.edges);
    CHECK(phi.images == r.phi.images);
    CHECK(wit.bags == r.witness.bags);
    CHECK(validate_td(glued, wit).valid);
    CHECK(glue(g1, g2, phi).edges == glued.edges);
    fs::remove_all(dir);
}

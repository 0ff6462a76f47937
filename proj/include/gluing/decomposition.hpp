#ifndef GLUING_DECOMPOSITION_HPP
#define GLUING_DECOMPOSITION_HPP

#include <string>
#include <vector>

#include "gluing/graph.hpp"

namespace gluing {

// Tree of decomposition nodes (ids 1..node_count) with a bag of graph
// vertices per node. Path decompositions are the special case where the
// node tree is a path.
struct TreeDecomposition {
    int target_n = 0;
    std::vector<std::vector<int>> bags;          // bags[i] is the bag of node i+1, sorted
    std::vector<std::pair<int, int>> tree_edges; // node ids

    int node_count() const { return static_cast<int>(bags.size()); }
    int width() const; // max bag size - 1; -1 for all-empty
    bool is_path_shaped() const;
    const std::vector<int>& bag(int node) const { return bags[node - 1]; }
};

TreeDecomposition make_tree_decomposition(int target_n,
                                          std::vector<std::vector<int>> bags,
                                          std::vector<std::pair<int, int>> tree_edges);

struct ValidationReport {
    bool valid = true;
    std::vector<std::string> violations;
};

// Checks (I) bag union covers V(G), (II) every edge inside some bag,
// (III) the nodes containing each vertex induce a connected subtree,
// plus node-tree well-formedness. Violations come with witnesses.
ValidationReport validate_td(const Graph& g, const TreeDecomposition& d);

// S(v) = {w : pi(w) < pi(v) <= pi(x) for some neighbor x of w}.
// Returns S indexed by vertex (entries sorted).
std::vector<std::vector<int>> separation_profile(const Graph& g, const Layout& pi);

// vs_pi(G) = max_v |S(v)|.
int vs_of_layout(const Graph& g, const Layout& pi);

// Path decomposition with bags {v} united with S(v), in layout order;
// its width equals vs_of_layout(g, pi).
TreeDecomposition path_decomposition_from_layout(const Graph& g, const Layout& pi);

// Width-1 decomposition of a tree (or forest): one bag per edge, joined
// along shared vertices; single-vertex bags for isolated vertices.
TreeDecomposition tree_decomposition_of_tree(const Graph& tree);

// vs-1 layout of a caterpillar (spine order, leaves after their spine vertex).
Layout caterpillar_layout(const Graph& caterpillar);

} // namespace gluing

#endif

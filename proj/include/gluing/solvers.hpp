#ifndef GLUING_SOLVERS_HPP
#define GLUING_SOLVERS_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "gluing/decomposition.hpp"
#include "gluing/graph.hpp"

namespace gluing {

inline constexpr int kDefaultSolverLimit = 20;

struct TreewidthResult {
    int width = 0;
    TreeDecomposition witness;
};

// Exact treewidth via iterative deepening over elimination orderings
// (subset memoization); deterministic. Throws if g.n exceeds the limit.
TreewidthResult exact_treewidth(const Graph& g, int limit = kDefaultSolverLimit);

struct PathwidthResult {
    int width = 0;
    Layout layout;
    TreeDecomposition witness; // path-shaped, width == .width
};

// Exact pathwidth = vertex separation number, subset dynamic programming.
// The returned layout is the lexicographically smallest optimal one.
PathwidthResult exact_pathwidth(const Graph& g, int limit = kDefaultSolverLimit);

// Exact minimum vertex cover, branch on a max-degree vertex.
std::vector<int> min_vertex_cover(const Graph& g, int limit = kDefaultSolverLimit);

// Turns a valid width-k decomposition into a smooth one: all bags of size
// k+1, adjacent bags sharing exactly k vertices, exactly n-k nodes.
TreeDecomposition smoothify(const Graph& g, const TreeDecomposition& d);

// Greedy fill-in elimination; returns an upper bound on treewidth.
// Not exact; used where the exact solver is out of reach.
int greedy_fillin_width(const Graph& g);

// Max over subgraphs of the minimum degree; lower bound on treewidth.
int degeneracy(const Graph& g);

// k-tree built by clique attachment, then each edge kept with probability
// retention; the witness is the width-k decomposition of the full k-tree.
struct PartialKTree {
    Graph graph;
    TreeDecomposition witness;
};
PartialKTree partial_ktree(int n, int k, double retention, std::mt19937_64& rng);

// Random subgraph of the l-th power of a path; identity layout witnesses
// vs <= l, so pathwidth <= l.
struct WindowGraph {
    Graph graph;
    Layout layout;
};
WindowGraph window_graph(int n, int l, double density, std::mt19937_64& rng);

} // namespace gluing

#endif

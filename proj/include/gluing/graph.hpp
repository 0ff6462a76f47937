#ifndef GLUING_GRAPH_HPP
#define GLUING_GRAPH_HPP

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace gluing {

// Undirected simple graph on vertex labels 1..n. Edges are stored sorted,
// as (lo, hi) pairs, deduplicated. Values are immutable after construction:
// every operation returns a new graph.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    int edge_count() const { return static_cast<int>(edges.size()); }
    bool has_edge(int u, int v) const;
    std::vector<int> degrees() const;                // index 1..n
    std::vector<std::vector<int>> adjacency() const; // index 1..n, sorted
};

// Builds a graph from arbitrary label pairs; normalizes and deduplicates.
// Throws std::invalid_argument on out-of-range labels or self-loops.
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

// A bijection of [n]; images[i-1] = phi(i).
struct Permutation {
    std::vector<int> images;

    int size() const { return static_cast<int>(images.size()); }
    int operator()(int i) const { return images[i - 1]; }
    Permutation inverse() const;

    static Permutation identity(int n);
    static Permutation random(int n, std::mt19937_64& rng);
};

Permutation make_permutation(std::vector<int> images);

// phi2 after phi1: (compose(phi2, phi1))(i) = phi2(phi1(i)).
Permutation compose(const Permutation& phi2, const Permutation& phi1);

// Returns ([n], phi(E)). Throws on size mismatch.
Graph apply_permutation(const Graph& g, const Permutation& phi);

// The union of g1 and g2 along phi: ([n], phi(E1) union E2).
Graph glue(const Graph& g1, const Graph& g2, const Permutation& phi);

// Linear ordering of all n vertices; order[p] is the vertex at position p+1.
struct Layout {
    std::vector<int> order;

    int size() const { return static_cast<int>(order.size()); }
    // positions()[v] = 1-based position of vertex v.
    std::vector<int> positions() const;
};

Layout make_layout(std::vector<int> order);

struct RootedTree {
    Graph underlying;
    int root = 1;
    std::vector<int> parent;                // parent[v]; parent[root] = 0
    std::vector<std::vector<int>> children; // ordered lists

    int n() const { return underlying.n; }
    std::vector<int> levels() const;        // lev(root) = 0
    std::vector<int> subtree_sizes() const; // n_v
};

// Roots a tree at the given vertex; children visited in ascending label order.
RootedTree root_and_order(const Graph& tree, int root);

// Builds a rooted tree directly from parent links (parent[root] = 0),
// children ordered ascending.
RootedTree rooted_tree_from_parents(int n, int root, const std::vector<int>& parent);

Layout dfs_preorder(const RootedTree& t);
// Full traversal sequence, starts and ends at the root, length 2(n-1)+1.
std::vector<int> dfs_walk(const RootedTree& t);

enum class TreeKind { not_tree, tree, caterpillar, path, star };

struct TreeClass {
    TreeKind kind = TreeKind::not_tree; // most specific applicable label
    bool is_tree = false;
    bool is_caterpillar = false;
    bool is_path = false;
    bool is_star = false;
};

TreeClass classify_tree_kind(const Graph& g);

// Family generators. All 1-based; star center is vertex 1, path is 1-2-...-n.
Graph star_graph(int n);
Graph path_graph(int n);
// Spine vertices 1..m (m = leaf_counts.size()), leaf_counts[i] leaves hang
// off spine vertex i+1; n = m + sum(leaf_counts).
Graph caterpillar_graph(const std::vector<int>& leaf_counts);
// Uniform over labeled trees via Pruefer sequences.
Graph random_tree(int n, std::mt19937_64& rng);
Graph random_caterpillar(int n, std::mt19937_64& rng);

bool is_connected(const Graph& g);

} // namespace gluing

#endif

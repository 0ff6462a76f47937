#include "gluing/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gluing {

bool Graph::has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return std::binary_search(edges.begin(), edges.end(), std::make_pair(u, v));
}

std::vector<int> Graph::degrees() const {
    std::vector<int> deg(n + 1, 0);
    for (auto [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

std::vector<std::vector<int>> Graph::adjacency() const {
    std::vector<std::vector<int>> adj(n + 1);
    for (auto [u, v] : edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    return adj;
}

Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw std::invalid_argument("graph must have at least one vertex");
    Graph g;
    g.n = n;
    g.edges.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("edge endpoint " +
                                        std::to_string(u < 1 || u > n ? u : v) +
                                        " out of range 1.." + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
        g.edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges.begin(), g.edges.end());
    g.edges.erase(std::unique(g.edges.begin(), g.edges.end()), g.edges.end());
    return g;
}

Permutation Permutation::inverse() const {
    Permutation inv;
    inv.images.resize(images.size());
    for (int i = 1; i <= size(); ++i) inv.images[images[i - 1] - 1] = i;
    return inv;
}

Permutation Permutation::identity(int n) {
    Permutation p;
    p.images.resize(n);
    std::iota(p.images.begin(), p.images.end(), 1);
    return p;
}

Permutation Permutation::random(int n, std::mt19937_64& rng) {
    Permutation p = identity(n);
    std::shuffle(p.images.begin(), p.images.end(), rng);
    return p;
}

Permutation make_permutation(std::vector<int> images) {
    const int n = static_cast<int>(images.size());
    std::vector<bool> seen(n + 1, false);
    for (int x : images) {
        if (x < 1 || x > n || seen[x])
            throw std::invalid_argument("not a bijection of [" + std::to_string(n) +
                                        "]: value " + std::to_string(x));
        seen[x] = true;
    }
    Permutation p;
    p.images = std::move(images);
    return p;
}

Permutation compose(const Permutation& phi2, const Permutation& phi1) {
    if (phi2.size() != phi1.size())
        throw std::invalid_argument("permutation size mismatch in compose");
    Permutation r;
    r.images.resize(phi1.size());
    for (int i = 1; i <= phi1.size(); ++i) r.images[i - 1] = phi2(phi1(i));
    return r;
}

Graph apply_permutation(const Graph& g, const Permutation& phi) {
    if (phi.size() != g.n)
        throw std::invalid_argument("permutation size " + std::to_string(phi.size()) +
                                    " does not match graph size " + std::to_string(g.n));
    std::vector<std::pair<int, int>> mapped;
    mapped.reserve(g.edges.size());
    for (auto [u, v] : g.edges) mapped.emplace_back(phi(u), phi(v));
    return make_graph(g.n, mapped);
}

Graph glue(const Graph& g1, const Graph& g2, const Permutation& phi) {
    if (g1.n != g2.n)
        throw std::invalid_argument("glue: graphs have different sizes");
    Graph mapped = apply_permutation(g1, phi);
    std::vector<std::pair<int, int>> all = mapped.edges;
    all.insert(all.end(), g2.edges.begin(), g2.edges.end());
    return make_graph(g1.n, all);
}

std::vector<int> Layout::positions() const {
    std::vector<int> pos(order.size() + 1, 0);
    for (int p = 0; p < size(); ++p) pos[order[p]] = p + 1;
    return pos;
}

Layout make_layout(std::vector<int> order) {
    make_permutation(order); // same bijection check
    Layout l;
    l.order = std::move(order);
    return l;
}

std::vector<int> RootedTree::levels() const {
    std::vector<int> lev(n() + 1, 0);
    // children precede parents never happen: walk from root
    std::vector<int> stack = {root};
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int c : children[v]) {
            lev[c] = lev[v] + 1;
            stack.push_back(c);
        }
    }
    return lev;
}

std::vector<int> RootedTree::subtree_sizes() const {
    std::vector<int> sz(n() + 1, 1);
    // process in reverse BFS order
    std::vector<int> order;
    order.reserve(n());
    order.push_back(root);
    for (size_t i = 0; i < order.size(); ++i)
        for (int c : children[order[i]]) order.push_back(c);
    for (auto it = order.rbegin(); it != order.rend(); ++it)
        if (*it != root) sz[parent[*it]] += sz[*it];
    return sz;
}

namespace {

bool check_is_tree(const Graph& g) {
    if (g.edge_count() != g.n - 1) return false;
    return is_connected(g);
}

} // namespace

bool is_connected(const Graph& g) {
    if (g.n == 0) return false;
    auto adj = g.adjacency();
    std::vector<bool> seen(g.n + 1, false);
    std::vector<int> stack = {1};
    seen[1] = true;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.n;
}

RootedTree root_and_order(const Graph& tree, int root) {
    if (!check_is_tree(tree)) throw std::invalid_argument("root_and_order: not a tree");
    if (root < 1 || root > tree.n)
        throw std::invalid_argument("root_and_order: root out of range");
    RootedTree t;
    t.underlying = tree;
    t.root = root;
    t.parent.assign(tree.n + 1, 0);
    t.children.assign(tree.n + 1, {});
    auto adj = tree.adjacency(); // sorted, so children come out ascending
    std::vector<bool> seen(tree.n + 1, false);
    std::vector<int> queue = {root};
    seen[root] = true;
    for (size_t i = 0; i < queue.size(); ++i) {
        int v = queue[i];
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = true;
                t.parent[w] = v;
                t.children[v].push_back(w);
                queue.push_back(w);
            }
    }
    return t;
}

RootedTree rooted_tree_from_parents(int n, int root, const std::vector<int>& parent) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= n; ++v)
        if (v != root) edges.emplace_back(parent[v], v);
    RootedTree t;
    t.underlying = make_graph(n, edges);
    if (!check_is_tree(t.underlying))
        throw std::invalid_argument("rooted_tree_from_parents: parent links do not form a tree");
    t.root = root;
    t.parent = parent;
    t.parent.resize(n + 1);
    t.parent[root] = 0;
    t.children.assign(n + 1, {});
    for (int v = 1; v <= n; ++v)
        if (v != root) t.children[t.parent[v]].push_back(v);
    return t;
}

Layout dfs_preorder(const RootedTree& t) {
    std::vector<int> order;
    order.reserve(t.n());
    std::vector<std::pair<int, size_t>> stack = {{t.root, 0}};
    order.push_back(t.root);
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        if (next < t.children[v].size()) {
            int c = t.children[v][next++];
            order.push_back(c);
            stack.emplace_back(c, 0);
        } else {
            stack.pop_back();
        }
    }
    return make_layout(std::move(order));
}

std::vector<int> dfs_walk(const RootedTree& t) {
    std::vector<int> walk;
    walk.reserve(2 * t.n() - 1);
    std::vector<std::pair<int, size_t>> stack = {{t.root, 0}};
    walk.push_back(t.root);
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        if (next < t.children[v].size()) {
            int c = t.children[v][next++];
            walk.push_back(c);
            stack.emplace_back(c, 0);
        } else {
            stack.pop_back();
            if (!stack.empty()) walk.push_back(stack.back().first);
        }
    }
    return walk;
}

TreeClass classify_tree_kind(const Graph& g) {
    TreeClass c;
    if (!check_is_tree(g)) return c;
    c.is_tree = true;
    auto deg = g.degrees();

    // path: at most two vertices of degree 1, none above 2
    c.is_path = true;
    for (int v = 1; v <= g.n; ++v)
        if (deg[v] > 2) c.is_path = false;

    // star: at most one vertex of degree >= 2
    int high = 0;
    for (int v = 1; v <= g.n; ++v)
        if (deg[v] >= 2) ++high;
    c.is_star = high <= 1;

    // caterpillar: non-leaf vertices induce a path (or are empty)
    std::vector<int> spine;
    for (int v = 1; v <= g.n; ++v)
        if (deg[v] >= 2) spine.push_back(v);
    if (spine.empty()) {
        c.is_caterpillar = true;
    } else {
        std::vector<int> keep(g.n + 1, 0);
        for (int v : spine) keep[v] = 1;
        std::vector<std::pair<int, int>> induced;
        for (auto [u, v] : g.edges)
            if (keep[u] && keep[v]) induced.emplace_back(u, v);
        // remap to 1..|spine| and classify the induced subgraph
        std::vector<int> id(g.n + 1, 0);
        for (size_t i = 0; i < spine.size(); ++i) id[spine[i]] = static_cast<int>(i) + 1;
        std::vector<std::pair<int, int>> remapped;
        for (auto [u, v] : induced) remapped.emplace_back(id[u], id[v]);
        Graph sub = make_graph(static_cast<int>(spine.size()), remapped);
        TreeClass subclass = classify_tree_kind(sub);
        c.is_caterpillar = subclass.is_tree && subclass.is_path;
    }
    if (c.is_path || c.is_star) c.is_caterpillar = true;

    if (c.is_star)
        c.kind = TreeKind::star;
    else if (c.is_path)
        c.kind = TreeKind::path;
    else if (c.is_caterpillar)
        c.kind = TreeKind::caterpillar;
    else
        c.kind = TreeKind::tree;
    return c;
}

Graph star_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 2; v <= n; ++v) edges.emplace_back(1, v);
    return make_graph(n, edges);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
    return make_graph(n, edges);
}

Graph caterpillar_graph(const std::vector<int>& leaf_counts) {
    const int m = static_cast<int>(leaf_counts.size());
    if (m < 1) throw std::invalid_argument("caterpillar needs a non-empty spine");
    int n = m;
    for (int c : leaf_counts) {
        if (c < 0) throw std::invalid_argument("negative leaf count");
        n += c;
    }
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < m; ++v) edges.emplace_back(v, v + 1);
    int next = m + 1;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < leaf_counts[i]; ++j) edges.emplace_back(i + 1, next++);
    return make_graph(n, edges);
}

Graph random_tree(int n, std::mt19937_64& rng) {
    if (n == 1) return make_graph(1, {});
    if (n == 2) return make_graph(2, {{1, 2}});
    std::uniform_int_distribution<int> pick(1, n);
    std::vector<int> pruefer(n - 2);
    for (int& x : pruefer) x = pick(rng);
    // decode
    std::vector<int> deg(n + 1, 1);
    for (int x : pruefer) ++deg[x];
    std::vector<std::pair<int, int>> edges;
    // min-heap of current leaves
    std::vector<int> leaves;
    for (int v = 1; v <= n; ++v)
        if (deg[v] == 1) leaves.push_back(v);
    std::make_heap(leaves.begin(), leaves.end(), std::greater<>());
    for (int x : pruefer) {
        std::pop_heap(leaves.begin(), leaves.end(), std::greater<>());
        int leaf = leaves.back();
        leaves.pop_back();
        edges.emplace_back(leaf, x);
        if (--deg[x] == 1) {
            leaves.push_back(x);
            std::push_heap(leaves.begin(), leaves.end(), std::greater<>());
        }
    }
    std::pop_heap(leaves.begin(), leaves.end(), std::greater<>());
    int a = leaves.back();
    leaves.pop_back();
    edges.emplace_back(a, leaves.front());
    return make_graph(n, edges);
}

Graph random_caterpillar(int n, std::mt19937_64& rng) {
    if (n <= 2) return path_graph(n);
    std::uniform_int_distribution<int> spine_pick(1, n);
    int m = std::max(1, std::min(n, spine_pick(rng)));
    std::vector<int> counts(m, 0);
    std::uniform_int_distribution<int> slot(0, m - 1);
    for (int i = 0; i < n - m; ++i) ++counts[slot(rng)];
    // a spine end with no leaf would just extend the spine; that's fine
    return caterpillar_graph(counts);
}

} // namespace gluing

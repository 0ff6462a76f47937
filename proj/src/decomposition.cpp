#include "gluing/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

namespace gluing {

int TreeDecomposition::width() const {
    int w = -1;
    for (const auto& b : bags) w = std::max(w, static_cast<int>(b.size()) - 1);
    return w;
}

bool TreeDecomposition::is_path_shaped() const {
    std::vector<int> deg(node_count() + 1, 0);
    for (auto [a, b] : tree_edges) {
        ++deg[a];
        ++deg[b];
    }
    for (int i = 1; i <= node_count(); ++i)
        if (deg[i] > 2) return false;
    return true;
}

TreeDecomposition make_tree_decomposition(int target_n,
                                          std::vector<std::vector<int>> bags,
                                          std::vector<std::pair<int, int>> tree_edges) {
    TreeDecomposition d;
    d.target_n = target_n;
    d.bags = std::move(bags);
    for (auto& b : d.bags) {
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
    }
    d.tree_edges = std::move(tree_edges);
    return d;
}

ValidationReport validate_td(const Graph& g, const TreeDecomposition& d) {
    ValidationReport rep;
    auto fail = [&](std::string msg) {
        rep.valid = false;
        rep.violations.push_back(std::move(msg));
    };

    const int nodes = d.node_count();
    if (d.target_n != g.n)
        fail("decomposition targets n=" + std::to_string(d.target_n) +
             " but graph has n=" + std::to_string(g.n));
    if (nodes == 0) {
        fail("decomposition has no nodes");
        return rep;
    }
    for (auto [a, b] : d.tree_edges)
        if (a < 1 || a > nodes || b < 1 || b > nodes || a == b) {
            fail("bad node-tree edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
            return rep;
        }
    // node tree must be a tree
    if (static_cast<int>(d.tree_edges.size()) != nodes - 1)
        fail("node tree has " + std::to_string(d.tree_edges.size()) + " edges, expected " +
             std::to_string(nodes - 1));
    {
        std::vector<std::vector<int>> nadj(nodes + 1);
        for (auto [a, b] : d.tree_edges) {
            nadj[a].push_back(b);
            nadj[b].push_back(a);
        }
        std::vector<bool> seen(nodes + 1, false);
        std::vector<int> stack = {1};
        seen[1] = true;
        int count = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : nadj[v])
                if (!seen[w]) {
                    seen[w] = true;
                    ++count;
                    stack.push_back(w);
                }
        }
        if (count != nodes) fail("node tree is disconnected");
    }
    if (!rep.valid) return rep;

    // (I) cover
    std::vector<char> covered(g.n + 1, 0);
    for (const auto& b : d.bags)
        for (int v : b) {
            if (v < 1 || v > g.n) {
                fail("bag vertex " + std::to_string(v) + " out of range");
                return rep;
            }
            covered[v] = 1;
        }
    for (int v = 1; v <= g.n; ++v)
        if (!covered[v]) fail("(I) vertex " + std::to_string(v) + " is in no bag");

    // (II) edges
    std::vector<std::vector<int>> nodes_of(g.n + 1);
    for (int i = 1; i <= nodes; ++i)
        for (int v : d.bag(i)) nodes_of[v].push_back(i);
    for (auto [u, v] : g.edges) {
        bool found = false;
        const auto& nu = nodes_of[u];
        for (int i : nu)
            if (std::binary_search(d.bag(i).begin(), d.bag(i).end(), v)) {
                found = true;
                break;
            }
        if (!found)
            fail("(II) edge {" + std::to_string(u) + "," + std::to_string(v) +
                 "} is in no bag");
    }

    // (III) connectivity of occurrence sets
    std::vector<std::vector<int>> nadj(nodes + 1);
    for (auto [a, b] : d.tree_edges) {
        nadj[a].push_back(b);
        nadj[b].push_back(a);
    }
    std::vector<char> inset(nodes + 1, 0);
    for (int v = 1; v <= g.n; ++v) {
        const auto& occ = nodes_of[v];
        if (occ.size() <= 1) continue;
        for (int i : occ) inset[i] = 1;
        std::vector<int> stack = {occ[0]};
        inset[occ[0]] = 2;
        size_t reached = 1;
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (int y : nadj[x])
                if (inset[y] == 1) {
                    inset[y] = 2;
                    ++reached;
                    stack.push_back(y);
                }
        }
        if (reached != occ.size())
            fail("(III) nodes containing vertex " + std::to_string(v) +
                 " are disconnected");
        for (int i : occ) inset[i] = 0;
    }
    return rep;
}

std::vector<std::vector<int>> separation_profile(const Graph& g, const Layout& pi) {
    if (pi.size() != g.n)
        throw std::invalid_argument("layout size does not match graph size");
    auto pos = pi.positions();
    // last_pos[w]: latest position among w's neighbors
    std::vector<int> last_pos(g.n + 1, 0);
    for (auto [u, v] : g.edges) {
        last_pos[u] = std::max(last_pos[u], pos[v]);
        last_pos[v] = std::max(last_pos[v], pos[u]);
    }
    // w is in S(v) iff pos[w] < pos[v] <= last_pos[w]
    std::vector<std::vector<int>> s(g.n + 1);
    for (int v = 1; v <= g.n; ++v) {
        for (int w = 1; w <= g.n; ++w)
            if (pos[w] < pos[v] && pos[v] <= last_pos[w]) s[v].push_back(w);
    }
    return s;
}

int vs_of_layout(const Graph& g, const Layout& pi) {
    auto s = separation_profile(g, pi);
    size_t best = 0;
    for (int v = 1; v <= g.n; ++v) best = std::max(best, s[v].size());
    return static_cast<int>(best);
}

TreeDecomposition path_decomposition_from_layout(const Graph& g, const Layout& pi) {
    auto s = separation_profile(g, pi);
    std::vector<std::vector<int>> bags;
    bags.reserve(g.n);
    for (int p = 0; p < g.n; ++p) {
        int v = pi.order[p];
        std::vector<int> bag = s[v];
        bag.push_back(v);
        bags.push_back(std::move(bag));
    }
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i < g.n; ++i) edges.emplace_back(i, i + 1);
    return make_tree_decomposition(g.n, std::move(bags), std::move(edges));
}

TreeDecomposition tree_decomposition_of_tree(const Graph& tree) {
    std::vector<std::vector<int>> bags;
    std::vector<std::pair<int, int>> tedges;
    if (tree.edges.empty()) {
        for (int v = 1; v <= tree.n; ++v) bags.push_back({v});
        for (int i = 1; i < tree.n; ++i) tedges.emplace_back(i, i + 1);
        return make_tree_decomposition(tree.n, std::move(bags), std::move(tedges));
    }
    // one bag per edge; bag of the edge to the parent, connected via the tree
    auto deg = tree.degrees();
    std::vector<int> owner(tree.n + 1, 0); // vertex -> some bag containing it
    int id = 0;
    for (auto [u, v] : tree.edges) {
        bags.push_back({u, v});
        ++id;
        // a new bag may join up to two previously built components
        if (owner[u]) tedges.emplace_back(owner[u], id);
        if (owner[v]) tedges.emplace_back(owner[v], id);
        if (!owner[u]) owner[u] = id;
        if (!owner[v]) owner[v] = id;
    }
    // isolated vertices
    for (int v = 1; v <= tree.n; ++v)
        if (deg[v] == 0) {
            bags.push_back({v});
            ++id;
            tedges.emplace_back(1, id);
        }
    return make_tree_decomposition(tree.n, std::move(bags), std::move(tedges));
}

Layout caterpillar_layout(const Graph& caterpillar) {
    TreeClass c = classify_tree_kind(caterpillar);
    if (!c.is_caterpillar)
        throw std::invalid_argument("caterpillar_layout: graph is not a caterpillar");
    auto deg = caterpillar.degrees();
    auto adj = caterpillar.adjacency();
    // spine = non-leaf vertices; walk it end to end
    std::vector<int> spine;
    for (int v = 1; v <= caterpillar.n; ++v)
        if (deg[v] >= 2) spine.push_back(v);
    std::vector<int> order;
    if (spine.empty()) {
        for (int v = 1; v <= caterpillar.n; ++v) order.push_back(v);
        return make_layout(std::move(order));
    }
    std::vector<char> on_spine(caterpillar.n + 1, 0);
    for (int v : spine) on_spine[v] = 1;
    int start = spine[0];
    for (int v : spine) {
        int spine_deg = 0;
        for (int w : adj[v]) spine_deg += on_spine[w];
        if (spine_deg <= 1) {
            start = v;
            break;
        }
    }
    std::vector<int> seq;
    int prev = 0, cur = start;
    while (true) {
        seq.push_back(cur);
        int next = 0;
        for (int w : adj[cur])
            if (on_spine[w] && w != prev) next = w;
        if (!next) break;
        prev = cur;
        cur = next;
    }
    for (int v : seq) {
        order.push_back(v);
        for (int w : adj[v])
            if (!on_spine[w]) order.push_back(w);
    }
    return make_layout(std::move(order));
}

} // namespace gluing

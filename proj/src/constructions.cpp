#include "gluing/constructions.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gluing {

namespace {

std::vector<int> apply_to_set(const Permutation& phi, const std::vector<int>& s) {
    std::vector<int> out;
    out.reserve(s.size());
    for (int v : s) out.push_back(phi(v));
    std::sort(out.begin(), out.end());
    return out;
}

// relabel[v] = new label of v; returns the graph under the relabeling
Graph relabel_graph(const Graph& g, const Permutation& rho) {
    return apply_permutation(g, rho);
}

// rho maps the vertex at layout position p to label p
Permutation layout_to_relabeling(const Layout& pi) {
    std::vector<int> images(pi.size());
    auto pos = pi.positions();
    for (int v = 1; v <= pi.size(); ++v) images[v - 1] = pos[v];
    return make_permutation(std::move(images));
}

} // namespace

void check_gluing(const Graph& g1, const Graph& g2, const GluingResult& r) {
    Graph expect = glue(g1, g2, r.phi);
    if (expect.edges != r.glued.edges || expect.n != r.glued.n)
        throw std::logic_error("gluing result (" + r.kind +
                               "): glued graph differs from glue(G1,G2,phi)");
    auto rep = validate_td(r.glued, r.witness);
    if (!rep.valid)
        throw std::logic_error("gluing result (" + r.kind +
                               "): witness invalid: " + rep.violations.front());
    if (r.witness.width() > r.claimed_bound)
        throw std::logic_error("gluing result (" + r.kind + "): witness width " +
                               std::to_string(r.witness.width()) + " exceeds bound " +
                               std::to_string(r.claimed_bound));
}

GluingResult glue_via_cover(const Graph& g1, const std::vector<int>& cover,
                            const Graph& g2, const TreeDecomposition& d2,
                            const Permutation& phi) {
    if (g1.n != g2.n) throw std::invalid_argument("glue_via_cover: size mismatch");
    std::vector<char> in_cover(g1.n + 1, 0);
    for (int v : cover) in_cover[v] = 1;
    for (auto [u, v] : g1.edges)
        if (!in_cover[u] && !in_cover[v])
            throw std::invalid_argument("glue_via_cover: C misses edge {" +
                                        std::to_string(u) + "," + std::to_string(v) + "}");
    auto rep = validate_td(g2, d2);
    if (!rep.valid)
        throw std::invalid_argument("glue_via_cover: D2 invalid: " + rep.violations.front());

    GluingResult r;
    r.kind = "cover";
    r.phi = phi;
    r.glued = glue(g1, g2, phi);
    std::vector<int> mapped_cover = apply_to_set(phi, cover);
    std::vector<std::vector<int>> bags = d2.bags;
    for (auto& b : bags) {
        b.insert(b.end(), mapped_cover.begin(), mapped_cover.end());
        std::sort(b.begin(), b.end());
        b.erase(std::unique(b.begin(), b.end()), b.end());
    }
    r.witness = make_tree_decomposition(g2.n, std::move(bags), d2.tree_edges);
    r.claimed_bound = static_cast<int>(cover.size()) + d2.width();
    check_gluing(g1, g2, r);
    return r;
}

GluingResult glue_via_layouts(const Graph& g1, const Layout& pi1,
                              const Graph& g2, const Layout& pi2) {
    if (g1.n != g2.n) throw std::invalid_argument("glue_via_layouts: size mismatch");
    const int k = vs_of_layout(g1, pi1);
    const int t = vs_of_layout(g2, pi2);
    Permutation rho1 = layout_to_relabeling(pi1);
    Permutation rho2 = layout_to_relabeling(pi2);

    GluingResult r;
    r.kind = "layouts";
    r.phi = compose(rho2.inverse(), rho1);
    r.glued = glue(g1, g2, r.phi);
    // in the glued graph (G2's labeling), pi2 witnesses vs <= k + t
    r.witness = path_decomposition_from_layout(r.glued, pi2);
    r.claimed_bound = k + t;
    check_gluing(g1, g2, r);
    return r;
}

GluingResult glue_via_layouts(const Graph& g1, const Graph& g2, int solver_limit) {
    return glue_via_layouts(g1, exact_pathwidth(g1, solver_limit).layout, g2,
                            exact_pathwidth(g2, solver_limit).layout);
}

TiltTree tilt(const RootedTree& t, const Layout& sigma) {
    const int n = t.n();
    if (sigma.size() != n) throw std::invalid_argument("tilt: layout size mismatch");
    auto pos = sigma.positions();

    // order children by sigma and verify sigma is a DFS preordering of t
    RootedTree ordered = t;
    for (int v = 1; v <= n; ++v)
        std::sort(ordered.children[v].begin(), ordered.children[v].end(),
                  [&](int a, int b) { return pos[a] < pos[b]; });
    if (dfs_preorder(ordered).order != sigma.order)
        throw std::invalid_argument("tilt: sigma is not a DFS preordering of the tree");

    std::vector<int> parent(n + 1, 0);
    for (int v = 1; v <= n; ++v) {
        const auto& kids = ordered.children[v];
        for (size_t i = 0; i < kids.size(); ++i)
            parent[kids[i]] = (i == 0) ? v : kids[i - 1];
    }
    RootedTree tilted;
    tilted.root = t.root;
    tilted.parent = parent;
    tilted.children.assign(n + 1, {});
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v <= n; ++v)
        if (v != t.root) edges.emplace_back(parent[v], v);
    tilted.underlying = make_graph(n, edges);
    for (int v = 1; v <= n; ++v)
        if (v != t.root) tilted.children[parent[v]].push_back(v);
    for (int v = 1; v <= n; ++v)
        std::sort(tilted.children[v].begin(), tilted.children[v].end(),
                  [&](int a, int b) { return pos[a] < pos[b]; });

    // postconditions
    auto deg = tilted.underlying.degrees();
    for (int v = 1; v <= n; ++v)
        if (deg[v] > 3) throw std::logic_error("tilt: vertex of degree > 3");
    for (int v = 1; v <= n; ++v) {
        // v together with its children in t must induce a path in the tilt
        std::vector<int> group = t.children[v];
        group.push_back(v);
        if (group.size() < 2) continue;
        std::sort(group.begin(), group.end());
        std::vector<std::pair<int, int>> induced;
        for (auto [a, b] : tilted.underlying.edges)
            if (std::binary_search(group.begin(), group.end(), a) &&
                std::binary_search(group.begin(), group.end(), b))
                induced.emplace_back(a, b);
        std::vector<int> id(n + 1, 0);
        for (size_t i = 0; i < group.size(); ++i) id[group[i]] = static_cast<int>(i) + 1;
        std::vector<std::pair<int, int>> remapped;
        for (auto [a, b] : induced) remapped.emplace_back(id[a], id[b]);
        TreeClass c = classify_tree_kind(make_graph(static_cast<int>(group.size()), remapped));
        if (!c.is_tree || !c.is_path)
            throw std::logic_error("tilt: a parent and its children do not induce a path");
    }
    if (dfs_preorder(tilted).order != sigma.order)
        throw std::logic_error("tilt: sigma is not a DFS preordering of the tilt");

    return TiltTree{std::move(tilted), sigma};
}

namespace {

// tree path from a to b (inclusive) via parent pointers
std::vector<int> tree_path(const RootedTree& t, const std::vector<int>& lev, int a, int b) {
    std::vector<int> up_a, up_b;
    while (lev[a] > lev[b]) {
        up_a.push_back(a);
        a = t.parent[a];
    }
    while (lev[b] > lev[a]) {
        up_b.push_back(b);
        b = t.parent[b];
    }
    while (a != b) {
        up_a.push_back(a);
        up_b.push_back(b);
        a = t.parent[a];
        b = t.parent[b];
    }
    up_a.push_back(a);
    up_a.insert(up_a.end(), up_b.rbegin(), up_b.rend());
    return up_a;
}

} // namespace

GluingResult glue_tw_pw(const Graph& g1, const Graph& g2,
                        std::optional<TreeDecomposition> d1,
                        std::optional<Layout> pi2, int solver_limit) {
    if (g1.n != g2.n) throw std::invalid_argument("glue_tw_pw: size mismatch");
    const int n = g1.n;
    if (!d1) d1 = exact_treewidth(g1, solver_limit).witness;
    if (!pi2) pi2 = exact_pathwidth(g2, solver_limit).layout;
    const int ell = vs_of_layout(g2, *pi2);

    TreeDecomposition smooth = smoothify(g1, *d1);
    const int k = smooth.width();
    const int nodes = smooth.node_count(); // n - k

    // root the decomposition tree at node 1 and fix a DFS preordering
    RootedTree dtree = [&] {
        if (nodes == 1) {
            RootedTree t;
            t.underlying = make_graph(1, {});
            t.root = 1;
            t.parent = {0, 0};
            t.children = {{}, {}};
            return t;
        }
        return root_and_order(make_graph(nodes, smooth.tree_edges), 1);
    }();
    Layout sigma = dfs_preorder(dtree);

    // relabel G1: X_{a_1} gets 1..k+1, then k+i for the vertex introduced at a_i
    std::vector<int> rho1_images(n + 1, 0); // original -> new
    {
        int next = 1;
        for (int v : smooth.bag(sigma.order[0])) rho1_images[v] = next++;
        for (int i = 2; i <= nodes; ++i) {
            int a_i = sigma.order[i - 1];
            int p_i = dtree.parent[a_i];
            std::vector<int> fresh;
            std::set_difference(smooth.bag(a_i).begin(), smooth.bag(a_i).end(),
                                smooth.bag(p_i).begin(), smooth.bag(p_i).end(),
                                std::back_inserter(fresh));
            if (fresh.size() != 1)
                throw std::logic_error("glue_tw_pw: smooth bag introduces " +
                                       std::to_string(fresh.size()) + " vertices");
            if (rho1_images[fresh[0]] != 0)
                throw std::logic_error("glue_tw_pw: vertex introduced twice");
            rho1_images[fresh[0]] = k + i;
        }
    }
    Permutation rho1 = make_permutation(
        std::vector<int>(rho1_images.begin() + 1, rho1_images.end()));
    Permutation rho2 = layout_to_relabeling(*pi2);

    Graph h1 = relabel_graph(g1, rho1);
    Graph h2 = relabel_graph(g2, rho2);
    Graph h = glue(h1, h2, Permutation::identity(n));

    // S(v) on the relabeled G2 under the identity layout
    auto s_sets = separation_profile(h2, make_layout([&] {
                                         std::vector<int> ord(n);
                                         std::iota(ord.begin(), ord.end(), 1);
                                         return ord;
                                     }()));
    for (int v = 1; v <= n; ++v)
        if (static_cast<int>(s_sets[v].size()) > ell)
            throw std::logic_error("glue_tw_pw: |S(v)| exceeds the separation number");
    // Claim 1: S(i+1) within {i} union S(i)
    for (int i = 1; i < n; ++i) {
        std::set<int> allowed(s_sets[i].begin(), s_sets[i].end());
        allowed.insert(i);
        for (int w : s_sets[i + 1])
            if (!allowed.count(w))
                throw std::logic_error("glue_tw_pw: Claim 1 fails at i=" + std::to_string(i));
    }

    // tilted decomposition tree with widened bags Z
    TiltTree tstar = [&] {
        if (nodes == 1) return TiltTree{dtree, sigma};
        return tilt(dtree, sigma);
    }();
    std::vector<std::set<int>> z(nodes + 1);
    {
        int a_1 = sigma.order[0];
        for (int v : smooth.bag(a_1)) z[a_1].insert(rho1(v));
        for (int i = 2; i <= nodes; ++i) {
            int a_i = sigma.order[i - 1];
            int p_i = dtree.parent[a_i];
            for (int v : smooth.bag(a_i)) z[a_i].insert(rho1(v));
            for (int v : smooth.bag(p_i)) z[a_i].insert(rho1(v));
        }
    }
    auto z_decomposition = [&](int target) {
        std::vector<std::vector<int>> bags(nodes);
        for (int i = 1; i <= nodes; ++i) bags[i - 1].assign(z[i].begin(), z[i].end());
        std::vector<std::pair<int, int>> edges = tstar.tree.underlying.edges;
        return make_tree_decomposition(target, std::move(bags), std::move(edges));
    };
    // Claim 2: (T*, Z) is a decomposition of the relabeled G1 of width <= k+1
    {
        TreeDecomposition zd = z_decomposition(n);
        auto rep = validate_td(h1, zd);
        if (!rep.valid)
            throw std::logic_error("glue_tw_pw: Claim 2 fails: " + rep.violations.front());
        if (zd.width() > k + 1)
            throw std::logic_error("glue_tw_pw: Claim 2 width exceeds k+1");
    }

    // iterative extension along T*
    const int r = (k + 1 < ell) ? (ell - k) : 1;
    {
        std::set<int> prefix_union;
        for (int i = 1; i <= r; ++i)
            for (int v : z[sigma.order[i - 1]]) prefix_union.insert(v);
        std::set<int> expect;
        for (int v = 1; v <= k + r; ++v) expect.insert(v);
        if (prefix_union != expect)
            throw std::logic_error("glue_tw_pw: first bags do not cover 1..k+r");
        for (int i = 1; i <= r; ++i) z[sigma.order[i - 1]] = expect;
    }
    auto lev = tstar.tree.levels();
    std::vector<int> growth_count(nodes + 1, 0);
    for (int i = r + 1; i <= nodes; ++i) {
        const auto& s = s_sets[k + i];
        auto path = tree_path(tstar.tree, lev, sigma.order[i - 2], sigma.order[i - 1]);
        for (int node : path) {
            size_t before = z[node].size();
            z[node].insert(s.begin(), s.end());
            if (z[node].size() > before) ++growth_count[node];
        }
    }
    for (int i = 1; i <= nodes; ++i)
        if (growth_count[i] > 3)
            throw std::logic_error("glue_tw_pw: bag extended more than 3 times");

    // decomposition of H in relabeled space
    TreeDecomposition hd = z_decomposition(n);
    {
        auto rep = validate_td(h, hd);
        if (!rep.valid)
            throw std::logic_error("glue_tw_pw: final decomposition invalid: " +
                                   rep.violations.front());
        if (hd.width() > k + 1 + 3 * ell)
            throw std::logic_error("glue_tw_pw: final width exceeds k+1+3l");
    }

    // map back so that the invariant glued == glue(g1, g2, phi) holds literally
    GluingResult result;
    result.kind = "tw-pw";
    result.phi = compose(rho2.inverse(), rho1);
    result.glued = glue(g1, g2, result.phi);
    Permutation back = rho2.inverse();
    std::vector<std::vector<int>> bags(nodes);
    for (int i = 1; i <= nodes; ++i)
        for (int v : z[i]) bags[i - 1].push_back(back(v));
    result.witness =
        make_tree_decomposition(n, std::move(bags), tstar.tree.underlying.edges);
    result.claimed_bound = k + 3 * ell + 1;
    check_gluing(g1, g2, result);
    return result;
}

namespace {

struct FanBuilder {
    const RootedTree& tree; // in position space: vertex = preorder position
    std::vector<int> end;   // last position of each subtree
    std::vector<std::vector<int>> bags;
    std::vector<std::pair<int, int>> edges;

    int add_bag(std::vector<int> bag) {
        bags.push_back(std::move(bag));
        return static_cast<int>(bags.size());
    }

    // builds bags for the subtree of v; returns the id of a bag containing
    // {v, end(v)} (0 when v is a leaf)
    int build(int v) {
        const auto& kids = tree.children[v];
        if (kids.empty()) return 0;
        std::vector<int> w = {v};
        for (int c : kids) {
            w.push_back(c);
            if (end[c] != c) w.push_back(end[c]);
        }
        int last = 0;
        if (w.size() == 2) {
            last = add_bag({w[0], w[1]});
        } else {
            int prev = 0;
            for (size_t i = 1; i + 1 < w.size(); ++i) {
                int id = add_bag({v, w[i], w[i + 1]});
                if (prev) edges.emplace_back(prev, id);
                prev = id;
            }
            last = prev;
        }
        // attach each non-leaf child below the bag holding {c, end(c)}
        for (int c : kids) {
            int child_last = build(c);
            if (!child_last) continue;
            int host = 0;
            for (size_t i = 0; i < bags.size(); ++i) {
                const auto& b = bags[i];
                if (std::find(b.begin(), b.end(), c) != b.end() &&
                    std::find(b.begin(), b.end(), end[c]) != b.end() &&
                    std::find(b.begin(), b.end(), v) != b.end()) {
                    host = static_cast<int>(i) + 1;
                    break;
                }
            }
            edges.emplace_back(host, child_last);
        }
        return last;
    }
};

} // namespace

GluingResult glue_path_tree(const Graph& path, const Graph& tree) {
    if (path.n != tree.n) throw std::invalid_argument("glue_path_tree: size mismatch");
    const int n = path.n;
    TreeClass pc = classify_tree_kind(path);
    if (!pc.is_path) throw std::invalid_argument("glue_path_tree: first graph is not a path");
    TreeClass tc = classify_tree_kind(tree);
    if (!tc.is_tree) throw std::invalid_argument("glue_path_tree: second graph is not a tree");

    // path sequence from its smaller endpoint
    std::vector<int> seq;
    if (n == 1) {
        seq = {1};
    } else {
        auto deg = path.degrees();
        auto adj = path.adjacency();
        int start = 0;
        for (int v = 1; v <= n && !start; ++v)
            if (deg[v] == 1) start = v;
        int prev = 0, cur = start;
        while (seq.size() < static_cast<size_t>(n)) {
            seq.push_back(cur);
            int next = 0;
            for (int w : adj[cur])
                if (w != prev) next = w;
            prev = cur;
            cur = next;
            if (!cur) break;
        }
    }

    RootedTree rooted = root_and_order(tree, 1);
    Layout sigma = dfs_preorder(rooted);

    // phi maps the i-th path vertex onto the i-th DFS vertex
    std::vector<int> images(n);
    for (int i = 0; i < n; ++i) images[seq[i] - 1] = sigma.order[i];

    GluingResult r;
    r.kind = "path-tree";
    r.phi = make_permutation(std::move(images));
    r.glued = glue(path, tree, r.phi);

    // witness in position space: preorder position i stands for sigma.order[i-1]
    auto pos = sigma.positions();
    std::vector<int> parent_pos(n + 1, 0);
    for (int v = 1; v <= n; ++v)
        if (v != rooted.root) parent_pos[pos[v]] = pos[rooted.parent[v]];
    RootedTree ptree = rooted_tree_from_parents(n, 1, parent_pos);
    auto sz = ptree.subtree_sizes();
    FanBuilder fb{ptree, {}, {}, {}};
    fb.end.assign(n + 1, 0);
    for (int p = 1; p <= n; ++p) fb.end[p] = p + sz[p] - 1;
    int last = fb.build(1);
    (void)last;
    if (fb.bags.empty()) fb.bags.push_back({1});
    // back to graph labels
    for (auto& b : fb.bags)
        for (int& v : b) v = sigma.order[v - 1];
    r.witness = make_tree_decomposition(n, std::move(fb.bags), std::move(fb.edges));
    r.claimed_bound = 2;
    check_gluing(path, tree, r);
    return r;
}

} // namespace gluing

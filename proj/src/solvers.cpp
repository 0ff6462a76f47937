#include "gluing/solvers.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <stdexcept>
#include <unordered_set>

namespace gluing {

namespace {

constexpr int kHardCap = 25; // bitmask solvers use 32-bit subsets

std::vector<uint32_t> adjacency_masks(const Graph& g) {
    std::vector<uint32_t> adj(g.n, 0);
    for (auto [u, v] : g.edges) {
        adj[u - 1] |= 1u << (v - 1);
        adj[v - 1] |= 1u << (u - 1);
    }
    return adj;
}

uint32_t neighborhood_of_mask(const std::vector<uint32_t>& adj, uint32_t mask) {
    uint32_t nb = 0;
    while (mask) {
        int v = std::countr_zero(mask);
        mask &= mask - 1;
        nb |= adj[v];
    }
    return nb;
}

// |{w not in S, w != v, adjacent to v or connected to v through S}|
uint32_t q_set(const std::vector<uint32_t>& adj, uint32_t s, int v) {
    uint32_t allowed = s | (1u << v);
    uint32_t reach = 1u << v;
    while (true) {
        uint32_t grown = (reach | neighborhood_of_mask(adj, reach)) & allowed;
        if (grown == reach) break;
        reach = grown;
    }
    return neighborhood_of_mask(adj, reach) & ~allowed;
}

void check_limit(const Graph& g, int limit, const char* what) {
    int cap = std::min(limit, kHardCap);
    if (g.n > cap)
        throw std::invalid_argument(std::string(what) + ": exact solver limit exceeded (n=" +
                                    std::to_string(g.n) + ", limit=" + std::to_string(cap) + ")");
}

struct TwSearch {
    const std::vector<uint32_t>& adj;
    int n;
    int k;
    uint32_t full;
    std::unordered_set<uint32_t> dead; // states with no completion
    std::vector<int> order;

    bool run(uint32_t s) {
        if (s == full) return true;
        if (dead.count(s)) return false;
        // a vertex whose contracted neighborhood has size <= 1 can always
        // be eliminated first; take the smallest such and do not branch
        int safe = -1;
        std::vector<std::pair<int, int>> candidates; // (|Q|, v)
        for (int v = 0; v < n; ++v) {
            if (s & (1u << v)) continue;
            int qc = std::popcount(q_set(adj, s, v));
            if (qc > k) continue;
            if (qc <= 1 && k >= 1) {
                safe = v;
                break;
            }
            candidates.emplace_back(qc, v);
        }
        if (safe >= 0) {
            order.push_back(safe + 1);
            if (run(s | (1u << safe))) return true;
            order.pop_back();
        } else {
            std::sort(candidates.begin(), candidates.end());
            for (auto [qc, v] : candidates) {
                order.push_back(v + 1);
                if (run(s | (1u << v))) return true;
                order.pop_back();
            }
        }
        dead.insert(s);
        return false;
    }
};

// True if an elimination ordering with max |Q| <= k exists; fills `order`.
bool decide_treewidth(const std::vector<uint32_t>& adj, int n, int k,
                      std::vector<int>& order) {
    TwSearch search{adj, n, k, (1u << n) - 1, {}, {}};
    if (!search.run(0u)) return false;
    order = std::move(search.order);
    return true;
}

TreeDecomposition decomposition_from_elimination(const Graph& g,
                                                 const std::vector<int>& order) {
    const int n = g.n;
    auto adj = adjacency_masks(g);
    std::vector<int> pos_of(n + 1, 0);
    for (int i = 0; i < n; ++i) pos_of[order[i]] = i + 1;
    uint32_t remaining = (n == 32) ? ~0u : (1u << n) - 1;

    std::vector<std::vector<int>> bags(n);
    std::vector<std::pair<int, int>> tedges;
    for (int i = 0; i < n; ++i) {
        int v = order[i];
        remaining &= ~(1u << (v - 1));
        uint32_t rest = adj[v - 1] & remaining;
        std::vector<int> bag = {v};
        int parent_pos = 0;
        uint32_t it = rest;
        while (it) {
            int w = std::countr_zero(it) + 1;
            it &= it - 1;
            bag.push_back(w);
            if (!parent_pos || pos_of[w] < pos_of[order[parent_pos - 1]])
                parent_pos = pos_of[w];
        }
        bags[i] = std::move(bag);
        if (parent_pos)
            tedges.emplace_back(i + 1, parent_pos);
        else if (i + 1 < n)
            tedges.emplace_back(i + 1, i + 2);
        // eliminate: make the remaining neighbors a clique
        uint32_t a = rest;
        while (a) {
            int x = std::countr_zero(a);
            a &= a - 1;
            adj[x] |= rest & ~(1u << x);
        }
    }
    return make_tree_decomposition(n, std::move(bags), std::move(tedges));
}

} // namespace

int degeneracy(const Graph& g) {
    auto adj = g.adjacency();
    std::vector<int> deg = g.degrees();
    std::vector<char> gone(g.n + 1, 0);
    int result = 0;
    for (int step = 0; step < g.n; ++step) {
        int best = 0;
        for (int v = 1; v <= g.n; ++v)
            if (!gone[v] && (!best || deg[v] < deg[best])) best = v;
        result = std::max(result, deg[best]);
        gone[best] = 1;
        for (int w : adj[best])
            if (!gone[w]) --deg[w];
    }
    return result;
}

int greedy_fillin_width(const Graph& g) {
    std::vector<std::set<int>> adj(g.n + 1);
    for (auto [u, v] : g.edges) {
        adj[u].insert(v);
        adj[v].insert(u);
    }
    std::vector<char> gone(g.n + 1, 0);
    int width = 0;
    for (int step = 0; step < g.n; ++step) {
        int best = 0;
        long long best_fill = -1;
        for (int v = 1; v <= g.n; ++v) {
            if (gone[v]) continue;
            long long fill = 0;
            for (auto it = adj[v].begin(); it != adj[v].end(); ++it)
                for (auto jt = std::next(it); jt != adj[v].end(); ++jt)
                    if (!adj[*it].count(*jt)) ++fill;
            if (best == 0 || fill < best_fill ||
                (fill == best_fill && adj[v].size() < adj[best].size())) {
                best = v;
                best_fill = fill;
            }
        }
        width = std::max(width, static_cast<int>(adj[best].size()));
        std::vector<int> nb(adj[best].begin(), adj[best].end());
        for (size_t i = 0; i < nb.size(); ++i)
            for (size_t j = i + 1; j < nb.size(); ++j) {
                adj[nb[i]].insert(nb[j]);
                adj[nb[j]].insert(nb[i]);
            }
        for (int w : nb) adj[w].erase(best);
        adj[best].clear();
        gone[best] = 1;
    }
    return width;
}

TreewidthResult exact_treewidth(const Graph& g, int limit) {
    check_limit(g, limit, "exact_treewidth");
    if (g.n == 1) {
        TreewidthResult r;
        r.width = 0;
        r.witness = make_tree_decomposition(1, {{1}}, {});
        return r;
    }
    auto adj = adjacency_masks(g);
    int lb = degeneracy(g);
    int ub = greedy_fillin_width(g);
    std::vector<int> order;
    for (int k = lb; k <= ub; ++k) {
        if (decide_treewidth(adj, g.n, k, order)) {
            TreewidthResult r;
            r.width = k;
            r.witness = decomposition_from_elimination(g, order);
            return r;
        }
    }
    throw std::logic_error("exact_treewidth: greedy upper bound not reached"); // unreachable
}

PathwidthResult exact_pathwidth(const Graph& g, int limit) {
    check_limit(g, limit, "exact_pathwidth");
    const int n = g.n;
    auto adj = adjacency_masks(g);
    const uint32_t full = (1u << n) - 1;

    // bnd[p] = #vertices in p with a neighbor outside p
    std::vector<uint8_t> bnd(full + 1, 0);
    for (uint32_t p = 1; p <= full; ++p) {
        int count = 0;
        uint32_t it = p;
        while (it) {
            int v = std::countr_zero(it);
            it &= it - 1;
            if (adj[v] & ~p) ++count;
        }
        bnd[p] = static_cast<uint8_t>(count);
    }

    // cost[p] = best achievable max boundary when completing from prefix p
    std::vector<uint8_t> cost(full + 1, 0);
    cost[full] = 0;
    for (uint32_t p = full - 1;; --p) {
        int best = n + 1;
        for (int v = 0; v < n; ++v)
            if (!(p & (1u << v))) best = std::min<int>(best, cost[p | (1u << v)]);
        cost[p] = static_cast<uint8_t>(std::max<int>(bnd[p], best));
        if (p == 0) break;
    }

    const int opt = cost[0];
    // lexicographically smallest optimal layout
    std::vector<int> order;
    uint32_t p = 0;
    while (p != full) {
        for (int v = 0; v < n; ++v) {
            if (p & (1u << v)) continue;
            if (cost[p | (1u << v)] <= opt) {
                order.push_back(v + 1);
                p |= 1u << v;
                break;
            }
        }
    }

    PathwidthResult r;
    r.width = opt;
    r.layout = make_layout(std::move(order));
    r.witness = path_decomposition_from_layout(g, r.layout);
    return r;
}

namespace {

void mvc_branch(const std::vector<std::vector<int>>& adj, std::vector<char>& covered,
                std::vector<int>& current, std::vector<int>& best) {
    if (!best.empty() && current.size() >= best.size()) return;
    // max-degree uncovered-edge vertex
    int pick = 0, pick_deg = 0;
    const int n = static_cast<int>(adj.size()) - 1;
    for (int v = 1; v <= n; ++v) {
        if (covered[v]) continue;
        int d = 0;
        for (int w : adj[v])
            if (!covered[w]) ++d;
        if (d > pick_deg) {
            pick = v;
            pick_deg = d;
        }
    }
    if (!pick) { // no uncovered edges remain
        if (best.empty() || current.size() < best.size()) best = current;
        return;
    }
    // branch 1: pick in the cover
    covered[pick] = 1;
    current.push_back(pick);
    mvc_branch(adj, covered, current, best);
    current.pop_back();
    covered[pick] = 0;
    // branch 2: all live neighbors of pick in the cover
    std::vector<int> taken;
    for (int w : adj[pick])
        if (!covered[w]) {
            covered[w] = 1;
            current.push_back(w);
            taken.push_back(w);
        }
    if (!taken.empty() && current.size() <= (best.empty() ? static_cast<size_t>(n) : best.size()))
        mvc_branch(adj, covered, current, best);
    for (int w : taken) {
        covered[w] = 0;
        current.pop_back();
    }
}

} // namespace

std::vector<int> min_vertex_cover(const Graph& g, int limit) {
    if (g.n > std::max(limit, 40))
        throw std::invalid_argument("min_vertex_cover: exact solver limit exceeded (n=" +
                                    std::to_string(g.n) + ")");
    auto adj = g.adjacency();
    std::vector<char> covered(g.n + 1, 0);
    std::vector<int> current, best;
    if (g.edges.empty()) return {};
    mvc_branch(adj, covered, current, best);
    std::sort(best.begin(), best.end());
    return best;
}

TreeDecomposition smoothify(const Graph& g, const TreeDecomposition& d) {
    auto rep = validate_td(g, d);
    if (!rep.valid)
        throw std::invalid_argument("smoothify: input decomposition invalid: " +
                                    rep.violations.front());
    const int k = d.width();
    const int n = g.n;
    if (n <= k)
        throw std::invalid_argument("smoothify: need n > width");

    // mutable working copy
    std::vector<std::set<int>> bags;
    std::vector<std::set<int>> nbr; // node adjacency
    for (const auto& b : d.bags) bags.emplace_back(b.begin(), b.end());
    nbr.resize(bags.size());
    for (auto [a, b] : d.tree_edges) {
        nbr[a - 1].insert(b - 1);
        nbr[b - 1].insert(a - 1);
    }
    std::vector<char> alive(bags.size(), 1);

    auto contract_into = [&](int i, int j) { // remove node i, attach its links to j
        alive[i] = 0;
        nbr[j].erase(i);
        for (int x : nbr[i])
            if (x != j) {
                nbr[x].erase(i);
                nbr[x].insert(j);
                nbr[j].insert(x);
            }
        nbr[i].clear();
    };

    bool changed = true;
    while (changed) {
        changed = false;
        // merge bags contained in a neighbor
        for (size_t i = 0; i < bags.size() && !changed; ++i) {
            if (!alive[i]) continue;
            for (int j : nbr[i])
                if (std::includes(bags[j].begin(), bags[j].end(), bags[i].begin(),
                                  bags[i].end())) {
                    contract_into(static_cast<int>(i), j);
                    changed = true;
                    break;
                }
        }
        if (changed) continue;
        // grow an undersized bag from a neighbor
        for (size_t i = 0; i < bags.size() && !changed; ++i) {
            if (!alive[i] || static_cast<int>(bags[i].size()) >= k + 1) continue;
            for (int j : nbr[i]) {
                for (int v : bags[j])
                    if (!bags[i].count(v)) {
                        bags[i].insert(v);
                        changed = true;
                        break;
                    }
                if (changed) break;
            }
            // single-node decomposition: pad from the vertex set
            if (!changed && nbr[i].empty()) {
                for (int v = 1; v <= n && !changed; ++v)
                    if (!bags[i].count(v)) {
                        bags[i].insert(v);
                        changed = true;
                    }
            }
        }
    }

    // compact to live nodes
    std::vector<std::vector<int>> out_bags;
    std::vector<std::pair<int, int>> out_edges;
    std::vector<int> new_id(bags.size(), 0);
    for (size_t i = 0; i < bags.size(); ++i)
        if (alive[i]) {
            out_bags.emplace_back(bags[i].begin(), bags[i].end());
            new_id[i] = static_cast<int>(out_bags.size());
        }
    for (size_t i = 0; i < bags.size(); ++i)
        if (alive[i])
            for (int j : nbr[i])
                if (static_cast<int>(i) < j) out_edges.emplace_back(new_id[i], new_id[j]);

    // subdivide edges whose endpoint bags differ by more than one swap
    std::vector<std::pair<int, int>> final_edges;
    for (auto [a, b] : out_edges) {
        const auto& ba = out_bags[a - 1];
        const auto& bb = out_bags[b - 1];
        std::vector<int> remove, add;
        std::set_difference(ba.begin(), ba.end(), bb.begin(), bb.end(),
                            std::back_inserter(remove));
        std::set_difference(bb.begin(), bb.end(), ba.begin(), ba.end(),
                            std::back_inserter(add));
        int prev = a;
        std::set<int> cur(ba.begin(), ba.end());
        for (size_t s = 0; s + 1 < remove.size(); ++s) {
            cur.erase(remove[s]);
            cur.insert(add[s]);
            out_bags.emplace_back(cur.begin(), cur.end());
            int id = static_cast<int>(out_bags.size());
            final_edges.emplace_back(prev, id);
            prev = id;
        }
        final_edges.emplace_back(prev, b);
    }

    auto result = make_tree_decomposition(n, std::move(out_bags), std::move(final_edges));
    // postconditions
    auto check = validate_td(g, result);
    if (!check.valid)
        throw std::logic_error("smoothify: produced invalid decomposition: " +
                               check.violations.front());
    if (result.node_count() != n - k)
        throw std::logic_error("smoothify: expected " + std::to_string(n - k) +
                               " nodes, got " + std::to_string(result.node_count()));
    for (const auto& b : result.bags)
        if (static_cast<int>(b.size()) != k + 1)
            throw std::logic_error("smoothify: bag of size " + std::to_string(b.size()));
    for (auto [a, b] : result.tree_edges) {
        std::vector<int> inter;
        std::set_intersection(result.bag(a).begin(), result.bag(a).end(),
                              result.bag(b).begin(), result.bag(b).end(),
                              std::back_inserter(inter));
        if (static_cast<int>(inter.size()) != k)
            throw std::logic_error("smoothify: adjacent bags share " +
                                   std::to_string(inter.size()) + " vertices");
    }
    return result;
}

PartialKTree partial_ktree(int n, int k, double retention, std::mt19937_64& rng) {
    if (k < 1 || n < k + 1)
        throw std::invalid_argument("partial_ktree: need n >= k+1 >= 2");
    std::vector<std::pair<int, int>> full_edges;
    std::vector<std::vector<int>> cliques; // k-cliques available for attachment
    std::vector<int> base;
    for (int v = 1; v <= k + 1; ++v) {
        for (int w = v + 1; w <= k + 1; ++w) full_edges.emplace_back(v, w);
        base.push_back(v);
    }
    for (int v = 1; v <= k + 1; ++v) {
        std::vector<int> c;
        for (int w = 1; w <= k + 1; ++w)
            if (w != v) c.push_back(w);
        cliques.push_back(c);
    }

    std::vector<std::vector<int>> bags = {base};
    std::vector<std::pair<int, int>> tedges;
    std::vector<int> bag_of_clique(cliques.size(), 1); // node id introducing the clique

    for (int v = k + 2; v <= n; ++v) {
        std::uniform_int_distribution<size_t> pick(0, cliques.size() - 1);
        size_t ci = pick(rng);
        std::vector<int> c = cliques[ci];
        for (int w : c) full_edges.emplace_back(w, v);
        std::vector<int> bag = c;
        bag.push_back(v);
        bags.push_back(bag);
        int id = static_cast<int>(bags.size());
        tedges.emplace_back(bag_of_clique[ci], id);
        for (int drop = 0; drop < k; ++drop) {
            std::vector<int> nc;
            for (int i = 0; i < k; ++i)
                if (i != drop) nc.push_back(c[i]);
            nc.push_back(v);
            cliques.push_back(nc);
            bag_of_clique.push_back(id);
        }
    }

    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> kept;
    for (auto e : full_edges)
        if (coin(rng) < retention) kept.push_back(e);

    PartialKTree result;
    result.graph = make_graph(n, kept);
    result.witness = make_tree_decomposition(n, std::move(bags), std::move(tedges));
    return result;
}

WindowGraph window_graph(int n, int l, double density, std::mt19937_64& rng) {
    if (l < 0) throw std::invalid_argument("window_graph: negative width");
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    std::vector<std::pair<int, int>> edges;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= std::min(n, i + l); ++j)
            if (coin(rng) < density) edges.emplace_back(i, j);
    WindowGraph w;
    w.graph = make_graph(n, edges);
    w.layout = make_layout([&] {
        std::vector<int> order(n);
        for (int i = 0; i < n; ++i) order[i] = i + 1;
        return order;
    }());
    return w;
}

} // namespace gluing

#include "gluing/lab.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>

#include "gluing/decomposition.hpp"
#include "gluing/solvers.hpp"

namespace gluing {

BalancedTree balanced_tree(int b, int n) {
    if (b < 2) throw std::invalid_argument("balanced_tree: b must be >= 2");
    if (n < 1) throw std::invalid_argument("balanced_tree: n must be >= 1");
    std::vector<int> parent(n + 1, 0);
    std::vector<std::vector<int>> children(n + 1);
    std::vector<int> size(n + 1, 1);
    for (int v = 2; v <= n; ++v) {
        // descend from the root into the smallest subtree until a vertex
        // with a free child slot is found; ties go to the smallest label
        int cur = 1;
        std::vector<int> path = {1};
        while (static_cast<int>(children[cur].size()) == b) {
            int best = children[cur][0];
            for (int c : children[cur])
                if (size[c] < size[best]) best = c;
            cur = best;
            path.push_back(cur);
        }
        parent[v] = cur;
        children[cur].push_back(v);
        for (int x : path) ++size[x];
    }
    BalancedTree t;
    t.b = b;
    t.tree = rooted_tree_from_parents(n, 1, parent);
    if (!is_balanced(t.tree, b))
        throw std::logic_error("balanced_tree: construction is not balanced");
    return t;
}

bool is_balanced(const RootedTree& t, int b) {
    const int n = t.n();
    auto lev = t.levels();
    auto sz = t.subtree_sizes();
    int max_lev = 0;
    for (int v = 1; v <= n; ++v) max_lev = std::max(max_lev, lev[v]);
    std::vector<long long> level_count(max_lev + 1, 0);
    std::vector<int> level_min(max_lev + 1, n + 1), level_max(max_lev + 1, 0);
    for (int v = 1; v <= n; ++v) {
        ++level_count[lev[v]];
        level_min[lev[v]] = std::min(level_min[lev[v]], sz[v]);
        level_max[lev[v]] = std::max(level_max[lev[v]], sz[v]);
    }
    long long full = 1;
    for (int i = 0; i < max_lev; ++i) {
        if (level_count[i] != full) return false; // non-last level not filled
        if (full > n) return false;
        full *= b;
    }
    for (int i = 0; i <= max_lev; ++i)
        if (level_max[i] - level_min[i] > 1) return false;
    return true;
}

std::vector<SubtreeInfo> subtree_profile(const BalancedTree& t) {
    const int n = t.tree.n();
    const int b = t.b;
    auto lev = t.tree.levels();
    auto sz = t.tree.subtree_sizes();
    std::vector<SubtreeInfo> out(n + 1);
    for (int v = 1; v <= n; ++v) {
        long long p = 1; // b^lev
        for (int i = 0; i < lev[v]; ++i) p *= b;
        // beta = n_v - (n - (b^lev - 1)/(b - 1)) / b^lev
        long long num = sz[v] * p - n + (p - 1) / (b - 1);
        out[v].level = lev[v];
        out[v].subtree_size = sz[v];
        out[v].beta_num = num;
        out[v].beta_den = p;
        if (std::llabs(num) > p)
            throw std::logic_error("subtree_profile: |beta| > 1 at vertex " +
                                   std::to_string(v));
    }
    return out;
}

long long cut_size_formula(const RootedTree& t, const std::vector<int>& u_set) {
    const int n = t.n();
    std::vector<char> in_u(n + 1, 0);
    for (int v : u_set) {
        if (v < 1 || v > n) throw std::invalid_argument("cut_size_formula: bad vertex");
        in_u[v] = 1;
    }
    auto sz = t.subtree_sizes();
    long long total = in_u[t.root] ? n : 0;
    for (int v = 1; v <= n; ++v) {
        if (v == t.root) continue;
        int u = t.parent[v];
        if (in_u[u] == in_u[v]) continue;
        total += in_u[u] ? -static_cast<long long>(sz[v]) : sz[v];
    }
    return total;
}

long long cut_edges(const Graph& g, const std::vector<bool>& in_u) {
    long long e = 0;
    for (auto [u, v] : g.edges) e += in_u[u] != in_u[v];
    return e;
}

long long similarity_mu(const Graph& g, const std::vector<int>& u_set) {
    std::vector<char> in_u(g.n + 1, 0);
    for (int v : u_set) in_u[v] = 1;
    auto adj = g.adjacency();
    std::map<std::vector<int>, int> classes;
    for (int v : u_set) {
        std::vector<int> outside;
        for (int w : adj[v])
            if (!in_u[w]) outside.push_back(w);
        ++classes[outside];
    }
    return static_cast<long long>(classes.size());
}

namespace {

void scan_cut(const Graph& g, const std::vector<int>& u, bool with_mu,
              ScanResult& r) {
    std::vector<bool> in_u(g.n + 1, false);
    for (int v : u) in_u[v] = true;
    long long e = cut_edges(g, in_u);
    if (r.min_e < 0 || e < r.min_e) {
        r.min_e = e;
        r.argmin_u = u;
    }
    if (with_mu) {
        long long mu = similarity_mu(g, u);
        if (!r.min_mu || mu < *r.min_mu) {
            r.min_mu = mu;
            r.argmin_mu_u = u;
        }
    }
}

} // namespace

ScanResult balanced_cut_scan_exhaustive(const Graph& g, bool with_mu, int limit) {
    const int n = g.n;
    if (n > limit || n > 25)
        throw std::invalid_argument("balanced_cut_scan_exhaustive: n too large");
    ScanResult r;
    r.exhaustive = true;
    for (int s = 1; s <= n; ++s) {
        if (3 * s < n || 3 * s > 2 * n) continue;
        // Gosper's hack over subsets of size s
        uint32_t c = (s == 32) ? ~0u : ((1u << s) - 1);
        const uint32_t end = 1u << n;
        while (c < end) {
            std::vector<int> u;
            for (int v = 1; v <= n; ++v)
                if (c & (1u << (v - 1))) u.push_back(v);
            scan_cut(g, u, with_mu, r);
            uint32_t lo = c & (~c + 1);
            uint32_t lz = c + lo;
            if (lz == 0) break;
            c = lz | (((c ^ lz) / lo) >> 2);
        }
    }
    return r;
}

ScanResult balanced_cut_scan_sampled(const Graph& g, int count, uint64_t seed,
                                     bool with_mu) {
    const int n = g.n;
    std::mt19937_64 rng(seed);
    std::vector<int> sizes;
    for (int s = 1; s <= n; ++s)
        if (3 * s >= n && 3 * s <= 2 * n) sizes.push_back(s);
    if (sizes.empty()) throw std::invalid_argument("no balanced cut sizes for n");
    ScanResult r;
    r.exhaustive = false;
    std::vector<int> ids(n);
    std::iota(ids.begin(), ids.end(), 1);
    for (int i = 0; i < count; ++i) {
        int s = sizes[rng() % sizes.size()];
        std::shuffle(ids.begin(), ids.end(), rng);
        std::vector<int> u(ids.begin(), ids.begin() + s);
        std::sort(u.begin(), u.end());
        scan_cut(g, u, with_mu, r);
    }
    return r;
}

BAdicSet badic_set(int b, int c) {
    if (b < 2 || c < 0) throw std::invalid_argument("badic_set: need b >= 2, c >= 0");
    BAdicSet s;
    s.b = b;
    s.c = c;
    mpz_class den = 1;
    for (int i = 0; i < c; ++i) den *= b;
    mpz_class amin = (den + 2) / 3;   // ceil(b^c / 3)
    mpz_class amax = (2 * den) / 3;   // floor(2 b^c / 3)
    for (mpz_class a = amin; a <= amax; ++a)
        s.elements.push_back(mpq_class(a) / mpq_class(den));
    return s;
}

std::optional<mpq_class> badic_distance(int i, int j) {
    auto r2 = badic_set(2, i).elements;
    auto r3 = badic_set(3, j).elements;
    if (r2.empty() || r3.empty()) return std::nullopt;
    std::optional<mpq_class> best;
    size_t a = 0, b = 0;
    while (a < r2.size() && b < r3.size()) {
        mpq_class d = abs(r2[a] - r3[b]);
        if (!best || d < *best) best = d;
        if (r2[a] < r3[b])
            ++a;
        else
            ++b;
    }
    // remaining one-sided tails can't beat the best crossing pair, but the
    // lists are tiny; finish the sweep against the last element of the other
    for (; a < r2.size(); ++a) {
        mpq_class d = abs(r2[a] - r3.back());
        if (!best || d < *best) best = d;
    }
    for (; b < r3.size(); ++b) {
        mpq_class d = abs(r2.back() - r3[b]);
        if (!best || d < *best) best = d;
    }
    return best;
}

namespace {

// a * b, throwing on signed overflow
long long checked_mul(long long a, long long b) {
    long long r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::invalid_argument("big_gap: parameter overflow");
    return r;
}

} // namespace

long long big_gap(long long a, long long m, long long k, long long l,
                  const std::set<long long>& reds) {
    if (a < 1 || m < 2 || k < 0)
        throw std::invalid_argument("big_gap: need a >= 1, m >= 2, k >= 0");
    if (static_cast<long long>(reds.size()) > k)
        throw std::invalid_argument("big_gap: more than k red elements");
    for (long long r : reds)
        if (r <= a || r > l)
            throw std::invalid_argument("big_gap: red element outside (a, l]");
    // need l >= a * m^(k+2) so that all k+1 candidate intervals fit below l/m
    long long need = a;
    for (long long i = 0; i < k + 2; ++i) need = checked_mul(need, m);
    if (l < need)
        throw std::invalid_argument("big_gap: l < a * m^(k+2)");

    long long lo = checked_mul(a, m); // a * m^j
    for (long long j = 1; j <= k + 1; ++j) {
        long long hi = checked_mul(lo, m); // a * m^(j+1)
        auto it = reds.upper_bound(lo);
        if (it == reds.end() || *it > hi) {
            // postconditions: a < c, m*c <= l, (c, m*c] all black
            if (lo <= a || hi > l)
                throw std::logic_error("big_gap: postcondition violated");
            return lo;
        }
        lo = hi;
    }
    throw std::logic_error("big_gap: no empty interval among k+1 candidates");
}

std::vector<int> layer_profile(const BalancedTree& t2, const BalancedTree& t3,
                               const Permutation& phi,
                               const std::vector<int>& u_set) {
    const int n = t3.tree.n();
    if (t2.tree.n() != n || phi.size() != n)
        throw std::invalid_argument("layer_profile: size mismatch");
    std::vector<char> in_u(n + 1, 0);
    for (int v : u_set) in_u[v] = 1;
    Permutation inv = phi.inverse();
    auto lev2 = t2.tree.levels();
    auto lev3 = t3.tree.levels();
    std::set<int> layers;
    // the layer of a tree edge is the level of its deeper endpoint
    for (auto [u, v] : t2.tree.underlying.edges) {
        int gu = phi(u), gv = phi(v);
        if (in_u[gu] != in_u[gv]) layers.insert(std::max(lev2[u], lev2[v]));
    }
    for (auto [u, v] : t3.tree.underlying.edges)
        if (in_u[u] != in_u[v]) layers.insert(std::max(lev3[u], lev3[v]));
    return {layers.begin(), layers.end()};
}

namespace {

struct WidthEval {
    int width;
    bool certified;
};

WidthEval eval_width(const Graph& g, int solver_limit) {
    if (g.n <= solver_limit) return {exact_treewidth(g, solver_limit).width, true};
    return {greedy_fillin_width(g), false};
}

} // namespace

ProbeReport impossibility_probe(int n, int tries, uint64_t seed, int ls_budget,
                                int solver_limit) {
    BalancedTree t2 = balanced_tree(2, n);
    BalancedTree t3 = balanced_tree(3, n);
    const Graph& g2 = t2.tree.underlying;
    const Graph& g3 = t3.tree.underlying;

    ProbeReport rep;
    rep.n = n;
    rep.seed = seed;
    rep.ls_budget = ls_budget;
    rep.min_width = n; // anything is better

    for (int t = 1; t <= tries; ++t) {
        uint64_t try_seed = seed ^ (0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(t));
        std::mt19937_64 rng(try_seed);
        Permutation phi = Permutation::random(n, rng);
        WidthEval cur = eval_width(glue(g2, g3, phi), solver_limit);
        int evals = 1;

        // first-improvement transposition local search
        bool improved = true;
        while (improved && evals < ls_budget) {
            improved = false;
            for (int i = 1; i <= n && evals < ls_budget; ++i) {
                for (int j = i + 1; j <= n && evals < ls_budget; ++j) {
                    std::swap(phi.images[i - 1], phi.images[j - 1]);
                    WidthEval cand = eval_width(glue(g2, g3, phi), solver_limit);
                    ++evals;
                    if (cand.width < cur.width) {
                        cur = cand;
                        improved = true;
                    } else {
                        std::swap(phi.images[i - 1], phi.images[j - 1]);
                    }
                }
            }
        }

        ProbeTry pt;
        pt.try_index = t;
        pt.seed = try_seed;
        pt.phi = phi;
        pt.width = cur.width;
        pt.certified = cur.certified;
        pt.evaluations = evals;
        if (cur.width < rep.min_width) {
            rep.min_width = cur.width;
            rep.argmin_try = t;
        }
        rep.tries.push_back(std::move(pt));
    }

    // re-verify the winner from scratch
    if (rep.argmin_try) {
        const ProbeTry& best = rep.tries[rep.argmin_try - 1];
        Graph glued = glue(g2, g3, best.phi);
        WidthEval check = eval_width(glued, solver_limit);
        if (check.width != rep.min_width)
            throw std::logic_error("impossibility_probe: re-verification mismatch");
        if (n <= 18)
            rep.min_balanced_e = balanced_cut_scan_exhaustive(glued, false).min_e;
    }
    return rep;
}

} // namespace gluing

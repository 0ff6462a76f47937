#ifndef GLUING_LAB_HPP
#define GLUING_LAB_HPP

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include <gmpxx.h>

#include "gluing/graph.hpp"

namespace gluing {

// Balanced b-ary tree; labels are insertion order of the incremental
// construction (level order overall: root = 1, levels fill in sequence).
struct BalancedTree {
    RootedTree tree;
    int b = 2;
};

BalancedTree balanced_tree(int b, int n);

// True iff both balancedness conditions hold (all non-last levels filled,
// same-level subtree sizes within 1).
bool is_balanced(const RootedTree& t, int b);

struct SubtreeInfo {
    int level = 0;
    int subtree_size = 0;
    // beta = n_v - (n - (b^lev - 1)/(b - 1)) / b^lev, exact.
    long long beta_num = 0;
    long long beta_den = 1;
};

// Per-vertex (lev, n_v, beta), indexed 1..n. Throws if some |beta| > 1.
std::vector<SubtreeInfo> subtree_profile(const BalancedTree& t);

// Evaluates 1_U(r)*n + sum over crossing edges (u,v) of (-1)^{1_U(u)} * n_v;
// equals |U| for every U (tree-cut identity).
long long cut_size_formula(const RootedTree& t, const std::vector<int>& u_set);

// Crossing-edge count of the U-cut.
long long cut_edges(const Graph& g, const std::vector<bool>& in_u);

// Number of classes of U under "same neighborhood outside U".
long long similarity_mu(const Graph& g, const std::vector<int>& u_set);

struct ScanResult {
    long long min_e = -1;
    std::vector<int> argmin_u;
    std::optional<long long> min_mu;
    std::vector<int> argmin_mu_u;
    bool exhaustive = false; // sampled results are upper bounds only
};

// Exact minimum over balanced cuts (n/3 <= |U| <= 2n/3); requires n <= 18.
ScanResult balanced_cut_scan_exhaustive(const Graph& g, bool with_mu,
                                        int limit = 18);
// Samples balanced cuts; gives an upper bound on the minima.
ScanResult balanced_cut_scan_sampled(const Graph& g, int count, uint64_t seed,
                                     bool with_mu);

// b-adic rationals a/b^c within [1/3, 2/3], exact.
struct BAdicSet {
    int b = 2;
    int c = 0;
    std::vector<mpq_class> elements; // ascending
};

BAdicSet badic_set(int b, int c);

// Exact min pairwise distance between R_{2,i} and R_{3,j}; nullopt when
// either set is empty (d(X, empty) = +infinity by convention).
std::optional<mpq_class> badic_distance(int i, int j);

// Gap lemma: returns C = A*M^j for the smallest j >= 1 whose interval
// X_j = (A*M^j, A*M^{j+1}] contains no red element. Guarantees A < C < L/M
// and that every element of (C, M*C] is black.
long long big_gap(long long a, long long m, long long k, long long l,
                  const std::set<long long>& reds);

// Layer indices touched by the U-cut of glue(T2, T3, phi): for each
// crossing edge, the layer of its preimage in T2 (if a T2 edge) and its
// layer in T3 (if a T3 edge). Sorted, deduplicated.
std::vector<int> layer_profile(const BalancedTree& t2, const BalancedTree& t3,
                               const Permutation& phi,
                               const std::vector<int>& u_set);

struct ProbeTry {
    int try_index = 0;
    uint64_t seed = 0;
    Permutation phi;      // after local search
    int width = 0;        // exact tw for n <= solver limit, else heuristic
    bool certified = false;
    int evaluations = 0;
};

struct ProbeReport {
    int n = 0;
    uint64_t seed = 0;
    int ls_budget = 0;
    std::vector<ProbeTry> tries;
    int min_width = 0;
    int argmin_try = 0;
    std::optional<long long> min_balanced_e; // of the best gluing, n <= 18
};

// Samples `tries` permutations gluing T_2(n) with T_3(n), improves each by
// transposition local search (first improvement, budget in evaluations),
// and reports the best width found.
ProbeReport impossibility_probe(int n, int tries, uint64_t seed,
                                int ls_budget = 40,
                                int solver_limit = 20);

} // namespace gluing

#endif

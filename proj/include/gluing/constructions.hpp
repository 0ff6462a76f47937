#ifndef GLUING_CONSTRUCTIONS_HPP
#define GLUING_CONSTRUCTIONS_HPP

#include <optional>
#include <string>

#include "gluing/decomposition.hpp"
#include "gluing/graph.hpp"
#include "gluing/solvers.hpp"

namespace gluing {

// A gluing together with its certificate: glued == glue(g1, g2, phi),
// the witness validates for glued, and width(witness) <= claimed_bound.
struct GluingResult {
    Permutation phi;
    Graph glued;
    TreeDecomposition witness;
    int claimed_bound = 0;
    std::string kind;
};

// Throws std::logic_error if the GluingResult invariants fail.
void check_gluing(const Graph& g1, const Graph& g2, const GluingResult& r);

// Cover gluing: adds phi(C) to every bag of d2. Works for every phi;
// bound = |C| + width(d2).
GluingResult glue_via_cover(const Graph& g1, const std::vector<int>& cover,
                            const Graph& g2, const TreeDecomposition& d2,
                            const Permutation& phi);

// Layout gluing: relabels both graphs by vs-witnessing layouts and unites
// along the identity; bound = vs(pi1) + vs(pi2), path-shaped witness.
GluingResult glue_via_layouts(const Graph& g1, const Layout& pi1,
                              const Graph& g2, const Layout& pi2);
// Convenience overload that solves for optimal layouts first.
GluingResult glue_via_layouts(const Graph& g1, const Graph& g2,
                              int solver_limit = kDefaultSolverLimit);

// Rooted tree plus the DFS preordering it was tilted about.
struct TiltTree {
    RootedTree tree;
    Layout sigma;
};

// The tilt of t about sigma: every non-leftmost child reattaches to the
// sibling immediately preceding it. Max degree 3; sigma stays a DFS
// preordering of the result. Throws if sigma is not a DFS preorder of t.
TiltTree tilt(const RootedTree& t, const Layout& sigma);

// Treewidth-k + pathwidth-l gluing with bound k + 3l + 1 (smooth
// decomposition, tilt, iterative S(v) bag extension). Witnesses may be
// supplied for inputs beyond the solver limit.
GluingResult glue_tw_pw(const Graph& g1, const Graph& g2,
                        std::optional<TreeDecomposition> d1 = std::nullopt,
                        std::optional<Layout> pi2 = std::nullopt,
                        int solver_limit = kDefaultSolverLimit);

// Glues a path onto a tree along a DFS preordering; the union is
// outerplanar and the fan-triangulation witness certifies width <= 2.
GluingResult glue_path_tree(const Graph& path, const Graph& tree);

} // namespace gluing

#endif

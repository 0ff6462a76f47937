#ifndef GLUING_ACCEPTANCE_HPP
#define GLUING_ACCEPTANCE_HPP

#include <string>
#include <vector>

#include "gluing/graph.hpp"

namespace gluing::accept {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

// Runs the numbered acceptance criteria (1..12); empty = all.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& ids = {});

// Suite names understood by `reproduce`: constructions, cut-formula,
// balanced-trees, badic, sandwich, biggap, oracles, probe, all.
std::vector<int> suite_criteria(const std::string& suite);

// Independent reference solvers for cross-checking the production ones.
// Exhaustive over all elimination orders / all layouts; tiny n only.
int brute_force_treewidth(const Graph& g); // n <= 8
int brute_force_pathwidth(const Graph& g); // n <= 7

} // namespace gluing::accept

#endif

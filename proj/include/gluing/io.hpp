#ifndef GLUING_IO_HPP
#define GLUING_IO_HPP

#include <iosfwd>
#include <string>

#include "gluing/constructions.hpp"
#include "gluing/decomposition.hpp"
#include "gluing/graph.hpp"

namespace gluing {

// PACE-style .gr: "p tw <n> <m>" header, "u v" edge lines, "c" comments.
Graph read_gr(std::istream& in, const std::string& name = "<stream>");
Graph read_gr_file(const std::string& path);
void write_gr(std::ostream& out, const Graph& g,
              const std::vector<std::string>& comments = {});
void write_gr_file(const std::string& path, const Graph& g,
                   const std::vector<std::string>& comments = {});

// PACE-style .td: "s td <#bags> <width+1> <n>", "b <id> <v...>" bag lines,
// then node-tree edges.
TreeDecomposition read_td(std::istream& in, const std::string& name = "<stream>");
TreeDecomposition read_td_file(const std::string& path);
void write_td(std::ostream& out, const TreeDecomposition& d,
              const std::vector<std::string>& comments = {});
void write_td_file(const std::string& path, const TreeDecomposition& d,
                   const std::vector<std::string>& comments = {});

// .perm: one line of n space-separated integers, the images phi(1)..phi(n).
Permutation read_perm(std::istream& in, const std::string& name = "<stream>");
Permutation read_perm_file(const std::string& path);
void write_perm(std::ostream& out, const Permutation& phi);
void write_perm_file(const std::string& path, const Permutation& phi);

// Writes <stem>.gr / <stem>.perm / <stem>.td with a provenance comment
// (construction kind, bound, seed) in each file.
void write_gluing_result(const std::string& stem, const GluingResult& r,
                         uint64_t seed);

} // namespace gluing

#endif

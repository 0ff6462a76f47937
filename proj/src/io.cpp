#include "gluing/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace gluing {

namespace {

[[noreturn]] void parse_fail(const std::string& name, int line, const std::string& msg) {
    throw std::runtime_error(name + ":" + std::to_string(line) + ": " + msg);
}

std::ifstream open_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return in;
}

std::ofstream create_or_throw(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot create " + path);
    return out;
}

bool skip_line(const std::string& line) {
    size_t i = line.find_first_not_of(" \t\r");
    return i == std::string::npos || line[i] == 'c';
}

} // namespace

Graph read_gr(std::istream& in, const std::string& name) {
    std::string line;
    int lineno = 0;
    long long n = -1, m = -1;
    std::vector<std::pair<int, int>> edges;
    while (std::getline(in, line)) {
        ++lineno;
        if (skip_line(line)) continue;
        std::istringstream ss(line);
        if (n < 0) {
            std::string p, tw;
            if (!(ss >> p >> tw >> n >> m) || p != "p" || tw != "tw" || n < 0 || m < 0)
                parse_fail(name, lineno, "expected header 'p tw <n> <m>'");
            continue;
        }
        long long u, v;
        if (!(ss >> u >> v)) parse_fail(name, lineno, "expected edge '<u> <v>'");
        std::string extra;
        if (ss >> extra) parse_fail(name, lineno, "trailing tokens on edge line");
        if (u < 1 || u > n || v < 1 || v > n)
            parse_fail(name, lineno, "edge endpoint out of range");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    if (n < 0) throw std::runtime_error(name + ": missing 'p tw' header");
    if (static_cast<long long>(edges.size()) != m)
        throw std::runtime_error(name + ": header announces " + std::to_string(m) +
                                 " edges, found " + std::to_string(edges.size()));
    return make_graph(static_cast<int>(n), edges);
}

Graph read_gr_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_gr(in, path);
}

void write_gr(std::ostream& out, const Graph& g,
              const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "c " << c << "\n";
    out << "p tw " << g.n << " " << g.edge_count() << "\n";
    for (auto [u, v] : g.edges) out << u << " " << v << "\n";
}

void write_gr_file(const std::string& path, const Graph& g,
                   const std::vector<std::string>& comments) {
    auto out = create_or_throw(path);
    write_gr(out, g, comments);
}

TreeDecomposition read_td(std::istream& in, const std::string& name) {
    std::string line;
    int lineno = 0;
    long long nbags = -1, width1 = -1, n = -1;
    std::vector<std::vector<int>> bags;
    std::vector<bool> seen;
    std::vector<std::pair<int, int>> tedges;
    while (std::getline(in, line)) {
        ++lineno;
        if (skip_line(line)) continue;
        std::istringstream ss(line);
        if (nbags < 0) {
            std::string s, td;
            if (!(ss >> s >> td >> nbags >> width1 >> n) || s != "s" || td != "td" ||
                nbags < 1 || n < 0)
                parse_fail(name, lineno, "expected header 's td <bags> <width+1> <n>'");
            bags.assign(nbags, {});
            seen.assign(nbags + 1, false);
            continue;
        }
        if (line.find_first_not_of(" \t\r") != std::string::npos &&
            line[line.find_first_not_of(" \t\r")] == 'b') {
            char bch;
            long long id;
            ss >> bch >> id;
            if (!ss || id < 1 || id > nbags)
                parse_fail(name, lineno, "bad bag id");
            if (seen[id]) parse_fail(name, lineno, "duplicate bag " + std::to_string(id));
            seen[id] = true;
            long long v;
            while (ss >> v) {
                if (v < 1 || v > n) parse_fail(name, lineno, "bag vertex out of range");
                bags[id - 1].push_back(static_cast<int>(v));
            }
            continue;
        }
        long long a, b;
        if (!(ss >> a >> b)) parse_fail(name, lineno, "expected node-tree edge '<a> <b>'");
        if (a < 1 || a > nbags || b < 1 || b > nbags)
            parse_fail(name, lineno, "node-tree edge out of range");
        tedges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
    if (nbags < 0) throw std::runtime_error(name + ": missing 's td' header");
    TreeDecomposition d = make_tree_decomposition(static_cast<int>(n), std::move(bags),
                                                  std::move(tedges));
    if (d.width() + 1 != width1)
        throw std::runtime_error(name + ": header announces width+1 = " +
                                 std::to_string(width1) + ", bags give " +
                                 std::to_string(d.width() + 1));
    return d;
}

TreeDecomposition read_td_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_td(in, path);
}

void write_td(std::ostream& out, const TreeDecomposition& d,
              const std::vector<std::string>& comments) {
    for (const auto& c : comments) out << "c " << c << "\n";
    out << "s td " << d.node_count() << " " << d.width() + 1 << " " << d.target_n << "\n";
    for (int i = 1; i <= d.node_count(); ++i) {
        out << "b " << i;
        for (int v : d.bag(i)) out << " " << v;
        out << "\n";
    }
    for (auto [a, b] : d.tree_edges) out << a << " " << b << "\n";
}

void write_td_file(const std::string& path, const TreeDecomposition& d,
                   const std::vector<std::string>& comments) {
    auto out = create_or_throw(path);
    write_td(out, d, comments);
}

Permutation read_perm(std::istream& in, const std::string& name) {
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (skip_line(line)) continue;
        std::istringstream ss(line);
        std::vector<int> images;
        long long x;
        while (ss >> x) images.push_back(static_cast<int>(x));
        if (images.empty()) parse_fail(name, lineno, "expected permutation images");
        return make_permutation(std::move(images));
    }
    throw std::runtime_error(name + ": no permutation line found");
}

Permutation read_perm_file(const std::string& path) {
    auto in = open_or_throw(path);
    return read_perm(in, path);
}

void write_perm(std::ostream& out, const Permutation& phi) {
    for (int i = 1; i <= phi.size(); ++i) out << (i > 1 ? " " : "") << phi(i);
    out << "\n";
}

void write_perm_file(const std::string& path, const Permutation& phi) {
    auto out = create_or_throw(path);
    write_perm(out, phi);
}

void write_gluing_result(const std::string& stem, const GluingResult& r,
                         uint64_t seed) {
    std::vector<std::string> prov = {
        "construction: " + r.kind,
        "claimed bound: " + std::to_string(r.claimed_bound),
        "seed: " + std::to_string(seed),
    };
    write_gr_file(stem + ".gr", r.glued, prov);
    write_td_file(stem + ".td", r.witness, prov);
    auto out = create_or_throw(stem + ".perm");
    for (const auto& c : prov) out << "c " << c << "\n";
    write_perm(out, r.phi);
}

} // namespace gluing

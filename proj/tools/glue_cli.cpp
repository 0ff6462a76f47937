// glue-cli: generate inputs, run the gluing constructions, solve widths,
// validate decompositions, and drive the section-3 experiments.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gluing/acceptance.hpp"
#include "gluing/constructions.hpp"
#include "gluing/io.hpp"
#include "gluing/lab.hpp"
#include "gluing/solvers.hpp"

namespace {

using namespace gluing;

struct Options {
    uint64_t seed = 1;
    int solver_limit = kDefaultSolverLimit;
    std::string out_dir = ".";
};

std::string path_in(const Options& o, const std::string& name) {
    return o.out_dir + "/" + name;
}

int cmd_gen(const Options& o, const std::string& family, int n, int k, int l,
            double density, const std::string& out) {
    std::mt19937_64 rng(o.seed);
    Graph g;
    if (family == "tree")
        g = random_tree(n, rng);
    else if (family == "caterpillar")
        g = random_caterpillar(n, rng);
    else if (family == "path")
        g = path_graph(n);
    else if (family == "star")
        g = star_graph(n);
    else if (family == "balanced2")
        g = balanced_tree(2, n).tree.underlying;
    else if (family == "balanced3")
        g = balanced_tree(3, n).tree.underlying;
    else if (family == "partial-ktree")
        g = partial_ktree(n, k, density, rng).graph;
    else if (family == "window")
        g = window_graph(n, l, density, rng).graph;
    else {
        std::cerr << "unknown family: " << family << "\n";
        return 2;
    }
    std::vector<std::string> prov = {"family: " + family,
                                     "seed: " + std::to_string(o.seed)};
    if (out.empty())
        write_gr(std::cout, g, prov);
    else
        write_gr_file(path_in(o, out), g, prov);
    return 0;
}

int cmd_glue(const Options& o, const std::string& g1p, const std::string& g2p,
             const std::string& permp, const std::string& out) {
    Graph g1 = read_gr_file(g1p);
    Graph g2 = read_gr_file(g2p);
    Permutation phi = permp.empty() ? Permutation::identity(g1.n)
                                    : read_perm_file(permp);
    Graph h = glue(g1, g2, phi);
    if (out.empty())
        write_gr(std::cout, h);
    else
        write_gr_file(path_in(o, out), h);
    return 0;
}

int cmd_construct(const Options& o, const std::string& kind, const std::string& g1p,
                  const std::string& g2p, const std::string& stem) {
    Graph g1 = read_gr_file(g1p);
    Graph g2 = read_gr_file(g2p);
    GluingResult r;
    if (kind == "cover") {
        std::mt19937_64 rng(o.seed);
        r = glue_via_cover(g1, min_vertex_cover(g1, std::max(o.solver_limit, 40)), g2,
                           exact_treewidth(g2, o.solver_limit).witness,
                           Permutation::random(g1.n, rng));
    } else if (kind == "layouts") {
        r = glue_via_layouts(g1, g2, o.solver_limit);
    } else if (kind == "tw-pw") {
        r = glue_tw_pw(g1, g2, std::nullopt, std::nullopt, o.solver_limit);
    } else if (kind == "path-tree") {
        r = glue_path_tree(g1, g2);
    } else {
        std::cerr << "unknown construction: " << kind << "\n";
        return 2;
    }
    write_gluing_result(path_in(o, stem), r, o.seed);
    std::cout << "construction " << r.kind << ": bound " << r.claimed_bound
              << ", witness width " << r.witness.width() << "\n";
    return 0;
}

int cmd_width(const Options& o, bool pathw, const std::string& gp,
              const std::string& td_out) {
    Graph g = read_gr_file(gp);
    if (pathw) {
        PathwidthResult r = exact_pathwidth(g, o.solver_limit);
        std::cout << "pathwidth " << r.width << "\nlayout";
        for (int v : r.layout.order) std::cout << " " << v;
        std::cout << "\n";
        if (!td_out.empty()) write_td_file(path_in(o, td_out), r.witness);
    } else {
        TreewidthResult r = exact_treewidth(g, o.solver_limit);
        std::cout << "treewidth " << r.width << "\n";
        if (!td_out.empty()) write_td_file(path_in(o, td_out), r.witness);
    }
    return 0;
}

int cmd_validate(const std::string& gp, const std::string& dp) {
    Graph g = read_gr_file(gp);
    TreeDecomposition d = read_td_file(dp);
    ValidationReport rep = validate_td(g, d);
    if (rep.valid) {
        std::cout << "valid, width " << d.width() << "\n";
        return 0;
    }
    for (const auto& v : rep.violations) std::cout << "violation: " << v << "\n";
    return 1;
}

int cmd_reproduce(const std::string& suite) {
    auto results = accept::run_acceptance(accept::suite_criteria(suite));
    bool all = true;
    for (const auto& r : results) {
        std::printf("%s criterion %2d (%s): %s [%.1fs]\n", r.pass ? "PASS" : "FAIL",
                    r.id, r.name.c_str(), r.detail.c_str(), r.seconds);
        all = all && r.pass;
    }
    return all ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"gluing constructions and width experiments"};
    app.require_subcommand(1);

    Options o;
    app.add_option("--seed", o.seed, "RNG seed");
    app.add_option("--solver-limit", o.solver_limit, "max n for exact solvers");
    app.add_option("--out-dir", o.out_dir, "directory for output files");

    // gen
    auto* gen = app.add_subcommand("gen", "generate a graph");
    std::string family = "tree", gen_out;
    int gen_n = 10, gen_k = 2, gen_l = 2;
    double gen_density = 0.8;
    gen->add_option("--family", family,
                    "tree|caterpillar|path|star|balanced2|balanced3|partial-ktree|window");
    gen->add_option("--n", gen_n, "vertex count")->required();
    gen->add_option("--k", gen_k, "k for partial-ktree");
    gen->add_option("--l", gen_l, "l for window");
    gen->add_option("--density", gen_density, "edge retention probability");
    gen->add_option("--out", gen_out, "output .gr (default stdout)");

    // glue
    auto* gl = app.add_subcommand("glue", "glue two graphs along a permutation");
    std::string gl_g1, gl_g2, gl_perm, gl_out;
    gl->add_option("g1", gl_g1, "first graph (.gr)")->required();
    gl->add_option("g2", gl_g2, "second graph (.gr)")->required();
    gl->add_option("--perm", gl_perm, "permutation (.perm), default identity");
    gl->add_option("--out", gl_out, "output .gr (default stdout)");

    // construct
    auto* con = app.add_subcommand("construct", "run a certified gluing construction");
    std::string con_kind, con_g1, con_g2, con_stem = "glued";
    con->add_option("kind", con_kind, "cover|layouts|tw-pw|path-tree")->required();
    con->add_option("g1", con_g1, "first graph (.gr)")->required();
    con->add_option("g2", con_g2, "second graph (.gr)")->required();
    con->add_option("--stem", con_stem, "output stem for .gr/.perm/.td");

    // tw / pw
    auto* tw = app.add_subcommand("tw", "exact treewidth");
    std::string tw_g, tw_td;
    tw->add_option("graph", tw_g, "graph (.gr)")->required();
    tw->add_option("--td", tw_td, "write witness decomposition (.td)");
    auto* pw = app.add_subcommand("pw", "exact pathwidth");
    std::string pw_g, pw_td;
    pw->add_option("graph", pw_g, "graph (.gr)")->required();
    pw->add_option("--td", pw_td, "write witness decomposition (.td)");

    // validate
    auto* val = app.add_subcommand("validate", "validate a decomposition");
    std::string val_g, val_d;
    val->add_option("graph", val_g, "graph (.gr)")->required();
    val->add_option("decomposition", val_d, "decomposition (.td)")->required();

    // lab
    auto* lab = app.add_subcommand("lab", "section-3 experiments");
    lab->require_subcommand(1);
    auto* lab_bt = lab->add_subcommand("balanced-tree", "emit a balanced b-ary tree");
    int bt_b = 2, bt_n = 10;
    std::string bt_out;
    lab_bt->add_option("--b", bt_b, "arity")->required();
    lab_bt->add_option("--n", bt_n, "vertex count")->required();
    lab_bt->add_option("--out", bt_out, "output .gr (default stdout)");
    auto* lab_cf = lab->add_subcommand("cut-formula", "verify the cut-size identity");
    int cf_n = 10;
    lab_cf->add_option("--n", cf_n, "tree size (<= 20)")->required();
    auto* lab_scan = lab->add_subcommand("scan", "minimum balanced cut");
    std::string scan_g;
    bool scan_mu = false;
    int scan_samples = 0;
    lab_scan->add_option("graph", scan_g, "graph (.gr)")->required();
    lab_scan->add_flag("--mu", scan_mu, "also minimize mu");
    lab_scan->add_option("--samples", scan_samples,
                         "sample count (0 = exhaustive, needs n <= 18)");
    auto* lab_mu = lab->add_subcommand("mu", "similarity classes of a cut");
    std::string mu_g;
    std::vector<int> mu_u;
    lab_mu->add_option("graph", mu_g, "graph (.gr)")->required();
    lab_mu->add_option("--u", mu_u, "vertices of U")->required();
    auto* lab_badic = lab->add_subcommand("badic", "distance between b-adic sets");
    int badic_i = 1, badic_j = 1;
    lab_badic->add_option("--i", badic_i, "exponent for base 2")->required();
    lab_badic->add_option("--j", badic_j, "exponent for base 3")->required();
    auto* lab_gap = lab->add_subcommand("biggap", "gap lemma");
    long long gap_a = 1, gap_m = 2, gap_k = 0, gap_l = 0;
    std::vector<long long> gap_reds;
    lab_gap->add_option("--a", gap_a)->required();
    lab_gap->add_option("--m", gap_m)->required();
    lab_gap->add_option("--k", gap_k)->required();
    lab_gap->add_option("--l", gap_l)->required();
    lab_gap->add_option("--reds", gap_reds, "red elements");
    auto* lab_probe = lab->add_subcommand("probe", "random gluing probe T_2 vs T_3");
    int probe_n = 10, probe_tries = 100, probe_budget = 40;
    std::string probe_csv;
    lab_probe->add_option("--n", probe_n)->required();
    lab_probe->add_option("--tries", probe_tries);
    lab_probe->add_option("--budget", probe_budget, "local-search evaluation budget");
    lab_probe->add_option("--csv", probe_csv, "per-try CSV output path");

    // reproduce
    auto* rep = app.add_subcommand("reproduce", "run acceptance criteria");
    std::string rep_suite = "all";
    rep->add_option("suite", rep_suite,
                    "constructions|cut-formula|balanced-trees|badic|sandwich|"
                    "biggap|oracles|probe|all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*gen) return cmd_gen(o, family, gen_n, gen_k, gen_l, gen_density, gen_out);
        if (*gl) return cmd_glue(o, gl_g1, gl_g2, gl_perm, gl_out);
        if (*con) return cmd_construct(o, con_kind, con_g1, con_g2, con_stem);
        if (*tw) return cmd_width(o, false, tw_g, tw_td);
        if (*pw) return cmd_width(o, true, pw_g, pw_td);
        if (*val) return cmd_validate(val_g, val_d);
        if (*rep) return cmd_reproduce(rep_suite);
        if (*lab) {
            if (*lab_bt) {
                Graph g = balanced_tree(bt_b, bt_n).tree.underlying;
                if (bt_out.empty())
                    write_gr(std::cout, g);
                else
                    write_gr_file(path_in(o, bt_out), g);
                return 0;
            }
            if (*lab_cf) {
                if (cf_n < 1 || cf_n > 20) {
                    std::cerr << "cut-formula: need 1 <= n <= 20\n";
                    return 2;
                }
                std::mt19937_64 rng(o.seed);
                RootedTree t = root_and_order(random_tree(cf_n, rng), 1);
                for (uint32_t mask = 0; mask < (1u << cf_n); ++mask) {
                    std::vector<int> u;
                    for (int v = 1; v <= cf_n; ++v)
                        if (mask & (1u << (v - 1))) u.push_back(v);
                    if (cut_size_formula(t, u) != static_cast<long long>(u.size())) {
                        std::cout << "MISMATCH at mask " << mask << "\n";
                        return 1;
                    }
                }
                std::cout << "identity holds on all " << (1u << cf_n) << " subsets\n";
                return 0;
            }
            if (*lab_scan) {
                Graph g = read_gr_file(scan_g);
                ScanResult r = scan_samples > 0
                                   ? balanced_cut_scan_sampled(g, scan_samples, o.seed,
                                                               scan_mu)
                                   : balanced_cut_scan_exhaustive(g, scan_mu);
                std::cout << (r.exhaustive ? "exhaustive" : "sampled") << " min e = "
                          << r.min_e << ", U =";
                for (int v : r.argmin_u) std::cout << " " << v;
                std::cout << "\n";
                if (r.min_mu) {
                    std::cout << "min mu = " << *r.min_mu << ", U =";
                    for (int v : r.argmin_mu_u) std::cout << " " << v;
                    std::cout << "\n";
                }
                return 0;
            }
            if (*lab_mu) {
                Graph g = read_gr_file(mu_g);
                std::cout << "mu = " << similarity_mu(g, mu_u) << "\n";
                return 0;
            }
            if (*lab_badic) {
                auto d = badic_distance(badic_i, badic_j);
                if (!d)
                    std::cout << "distance = +infinity (empty set)\n";
                else
                    std::cout << "distance = " << d->get_str() << "\n";
                return 0;
            }
            if (*lab_gap) {
                std::set<long long> reds(gap_reds.begin(), gap_reds.end());
                long long c = big_gap(gap_a, gap_m, gap_k, gap_l, reds);
                std::cout << "c = " << c << ", black interval (" << c << ", "
                          << gap_m * c << "]\n";
                return 0;
            }
            if (*lab_probe) {
                ProbeReport r = impossibility_probe(probe_n, probe_tries, o.seed,
                                                    probe_budget, o.solver_limit);
                if (!probe_csv.empty()) {
                    FILE* f = std::fopen(path_in(o, probe_csv).c_str(), "w");
                    if (!f) {
                        std::cerr << "cannot create " << probe_csv << "\n";
                        return 2;
                    }
                    std::fprintf(f, "try,seed,width,certified,evaluations\n");
                    for (const auto& t : r.tries)
                        std::fprintf(f, "%d,%llu,%d,%d,%d\n", t.try_index,
                                     static_cast<unsigned long long>(t.seed), t.width,
                                     t.certified ? 1 : 0, t.evaluations);
                    std::fclose(f);
                }
                std::cout << "n = " << r.n << ", tries = " << r.tries.size()
                          << ", min width = " << r.min_width << " (try "
                          << r.argmin_try << ")\n";
                if (r.min_balanced_e)
                    std::cout << "min balanced cut of the best gluing: "
                              << *r.min_balanced_e << "\n";
                return 0;
            }
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

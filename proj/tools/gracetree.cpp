// Command line front end: enumeration commands plus verification modes that
// re-run the independent oracles. Exit codes: 0 success, 1 negative result,
// 2 infeasible input, 3 size guard exceeded, 4 verification mismatch.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "grace/battery.hpp"
#include "grace/constrained.hpp"
#include "grace/graceful.hpp"
#include "grace/graph.hpp"
#include "grace/io.hpp"
#include "grace/lattice.hpp"
#include "grace/monomial.hpp"
#include "grace/oracle.hpp"
#include "grace/report.hpp"
#include "grace/stock.hpp"

namespace {

using nlohmann::json;

struct verify_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::ofstream open_out(const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
    return out;
}

void note(const std::string& line, bool json_mode) {
    // keeps stdout a single document in json mode
    (json_mode ? std::cerr : std::cout) << line << "\n";
}

std::uint64_t int_pow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    while (exp-- > 0) r *= base;
    return r;
}

// ------------------------------------------------------------------
// spanning: monomial classification of a complete graph or a host file

struct SpanningArgs {
    int n = 0;
    std::string graph_file, list_file;
    bool verify = false, json_out = false;
};

int cmd_spanning(const SpanningArgs& a, int jobs) {
    const grace::Graph g = a.n > 0 ? grace::Graph::complete(a.n)
                                   : grace::read_graph_file(a.graph_file);
    grace::MonomialOptions opts;
    opts.jobs = jobs;
    const auto mc = grace::classify_monomials(g, opts);

    if (!a.list_file.empty()) {
        auto out = open_out(a.list_file);
        for (const auto& cols : mc.spanning_trees) {
            std::vector<grace::Edge> edges;
            for (int c : cols) edges.push_back(g.edges[c]);
            out << grace::edge_list_string(edges) << "\n";
        }
        note("wrote " + std::to_string(mc.spanning_trees.size()) + " trees to " + a.list_file,
             a.json_out);
    }

    if (a.json_out) {
        std::cout << grace::monomial_report(g.n, mc).dump(2) << "\n";
    } else {
        std::cout << "n " << g.n << "  edges " << g.q() << "\n"
                  << "raw monomials " << mc.raw_count << "\n"
                  << "spanning trees " << mc.spanning_trees.size() << "\n"
                  << "cyclic subgraphs " << mc.cyclic_subgraphs.size() << "\n"
                  << "degenerate selections " << mc.degenerate_count << "\n";
    }

    if (a.n > 0) {
        const std::uint64_t cayley = int_pow(a.n, a.n - 2);
        note("cayley " + std::to_string(cayley) +
                 (cayley == mc.spanning_trees.size() ? " match" : " MISMATCH"),
             a.json_out);
        if (cayley != mc.spanning_trees.size())
            throw verify_error("spanning tree count disagrees with n^(n-2)");
    }
    if (a.verify) {
        const std::uint64_t expect = grace::oracle_spanning_tree_count(g);
        note("oracle spanning trees " + std::to_string(expect) +
                 (expect == mc.spanning_trees.size() ? " match" : " MISMATCH"),
             a.json_out);
        if (expect != mc.spanning_trees.size())
            throw verify_error("spanning tree count disagrees with the subset oracle");
    }
    return 0;
}

// ------------------------------------------------------------------
// graceful: catalog of graceful spanning trees of K_n

struct GracefulArgs {
    int n = 0;
    std::string list_file, dot_file;
    bool verify = false, json_out = false;
};

int cmd_graceful(const GracefulArgs& a, int jobs) {
    grace::GracefulOptions opts;
    opts.jobs = jobs;
    const auto cat = grace::build_graceful_catalog(a.n, opts);
    const auto classes = grace::coverage_by_isomorphism(cat);

    if (!a.list_file.empty()) {
        auto out = open_out(a.list_file);
        for (const auto& t : cat.trees) out << grace::edge_list_string(t) << "\n";
        note("wrote " + std::to_string(cat.trees.size()) + " trees to " + a.list_file, a.json_out);
    }
    if (!a.dot_file.empty()) {
        auto out = open_out(a.dot_file);
        int k = 0;
        for (const auto& t : cat.trees) out << grace::to_dot(a.n, t, "t" + std::to_string(++k));
        note("wrote " + std::to_string(cat.trees.size()) + " graphs to " + a.dot_file, a.json_out);
    }

    if (a.json_out) {
        std::cout << grace::catalog_report(cat, classes).dump(2) << "\n";
    } else {
        std::cout << "n " << cat.n << "\n"
                  << "factorial count " << cat.factorial_count << "\n"
                  << "raw selections " << cat.raw_selections << "\n"
                  << "proper choice vectors " << cat.choice_vectors << "\n"
                  << "distinct trees " << cat.trees.size() << "\n"
                  << "distinct non-trees " << cat.non_trees.size() << "\n"
                  << "bound theorem " << cat.bound_theorem << "\n"
                  << "bound remark " << cat.bound_remark << "\n"
                  << "classes " << classes.size() << "\n";
    }

    if (a.verify) {
        const auto expect = grace::oracle_graceful_trees(a.n);
        std::set<grace::EdgeSet> expect_set(expect.begin(), expect.end());
        std::set<grace::EdgeSet> got(cat.trees.begin(), cat.trees.end());
        note("oracle graceful trees " + std::to_string(expect_set.size()) +
                 (expect_set == got ? " match" : " MISMATCH"),
             a.json_out);
        if (expect_set != got)
            throw verify_error("graceful tree catalog disagrees with the subset oracle");
    }
    return cat.trees.empty() ? 1 : 0;
}

// ------------------------------------------------------------------
// stock: isomorphism classes of trees on n vertices

struct StockArgs {
    int n = 0;
    std::string via = "extension", two_path = "strict", dump_file;
    bool graceful = false, verify = false, json_out = false;
};

int cmd_stock(const StockArgs& a, int jobs) {
    grace::StockOptions opts;
    opts.jobs = jobs;
    opts.two_path = a.two_path == "any" ? grace::TwoPathRule::AnyMidpoint
                                        : grace::TwoPathRule::MidpointDegreeTwo;

    if (a.graceful) {
        const auto rep = grace::graceful_via_special_points(a.n, opts);
        if (a.json_out) {
            std::cout << grace::special_graceful_json(rep).dump(2) << "\n";
        } else {
            std::cout << "n " << rep.n << "\n"
                      << "classes " << rep.by_class.size() << "\n"
                      << "fallback classes " << rep.fallback_classes.size() << "\n"
                      << "uncovered classes " << rep.uncovered_classes.size() << "\n";
            for (const auto& code : rep.fallback_classes) std::cout << "fallback " << code << "\n";
            for (const auto& code : rep.uncovered_classes)
                std::cout << "uncovered " << code << "\n";
        }
        return rep.uncovered_classes.empty() ? 0 : 1;
    }

    const grace::Stock stock = a.via == "special" ? grace::stock_via_special_points(a.n, opts)
                                                  : grace::build_stock(a.n, opts);

    if (!a.dump_file.empty()) {
        auto out = open_out(a.dump_file);
        for (const auto& [code, t] : stock.members)
            out << code << "\t" << grace::edge_list_string(t.edges) << "\n";
        note("wrote " + std::to_string(stock.size()) + " classes to " + a.dump_file, a.json_out);
    }

    if (a.json_out) {
        std::cout << grace::stock_report(stock).dump(2) << "\n";
    } else {
        std::cout << "n " << stock.n << "\n"
                  << "classes " << stock.size() << "\n";
    }

    if (a.verify) {
        const grace::Stock other = a.via == "special" ? grace::build_stock(a.n, opts)
                                                      : grace::stock_via_special_points(a.n, opts);
        std::set<std::string> mine, theirs;
        for (const auto& [code, t] : stock.members) mine.insert(code);
        for (const auto& [code, t] : other.members) theirs.insert(code);
        note(std::string("other route ") + std::to_string(theirs.size()) +
                 (mine == theirs ? " match" : " MISMATCH"),
             a.json_out);
        if (mine != theirs) throw verify_error("extension and special-point routes disagree");
        const auto codes = grace::oracle_tree_codes(a.n);
        note("oracle classes " + std::to_string(codes.size()) +
                 (mine == codes ? " match" : " MISMATCH"),
             a.json_out);
        if (mine != codes) throw verify_error("stock disagrees with the sequence-scan oracle");
    }
    return 0;
}

// ------------------------------------------------------------------
// lattice: difference-triangle paths of K_n

struct LatticeArgs {
    int n = 0;
    std::string list_file;
    bool paths = false, all = false, coverage = false, render = false, json_out = false;
};

int cmd_lattice(const LatticeArgs& a, int jobs) {
    grace::LatticeOptions opts;
    opts.jobs = jobs;

    if (a.render) {
        std::cout << grace::render_lattice(a.n);
        return 0;
    }

    if (a.coverage) {
        const auto rep = grace::verify_class_coverage(a.n, opts);
        if (a.json_out) {
            std::cout << grace::coverage_json(rep).dump(2) << "\n";
        } else {
            std::cout << "n " << rep.n << "\n"
                      << "tree paths " << rep.tree_paths << "\n"
                      << "covered " << rep.covered << "/" << rep.classes << "\n"
                      << "self-mirror paths " << rep.self_mirror_paths << "\n";
            for (const auto& code : rep.missing) std::cout << "missing " << code << "\n";
        }
        if (rep.covered != rep.classes)
            throw verify_error("some tree shape is missed by every lattice path");
        return 0;
    }

    // path counting is the default action
    if (!a.list_file.empty()) {
        auto out = open_out(a.list_file);
        std::uint64_t lines = 0;
        grace::enumerate_lattice_paths(
            a.n, !a.all,
            [&](const grace::LatticePath& p) {
                out << grace::path_to_string(p) << "\n";
                ++lines;
            },
            opts);
        note("wrote " + std::to_string(lines) + " paths to " + a.list_file, a.json_out);
    }
    const std::uint64_t trees = grace::count_lattice_paths(a.n, true, opts);
    json j{{"n", a.n}, {"treePaths", trees}};
    if (a.all) j["allPaths"] = grace::count_lattice_paths(a.n, false, opts);
    if (a.json_out) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "n " << a.n << "\n"
                  << "tree paths " << trees << "\n";
        if (a.all) std::cout << "all paths " << j["allPaths"].get<std::uint64_t>() << "\n";
    }
    return trees > 0 ? 0 : 1;
}

// ------------------------------------------------------------------
// constrained: degree-capped graceful spanning tree search in a host

struct ConstrainedArgs {
    std::string graph_file, edges, list_file;
    int n = 0, max_degree = 0;
    bool enumerate = false, allow_nongraceful = false, verify = false, json_out = false;
};

int verify_against_threshold(const grace::Graph& host, int cap, bool found, bool json_mode) {
    const auto threshold = grace::oracle_graceful_degree_threshold(host);
    const bool expect = threshold && (cap == 0 || *threshold <= cap);
    note(std::string("oracle ") +
             (threshold ? "min degree cap " + std::to_string(*threshold) : "no graceful tree") +
             (expect == found ? " match" : " MISMATCH"),
         json_mode);
    if (expect != found) throw verify_error("search verdict disagrees with the subset oracle");
    return 0;
}

int cmd_constrained(const ConstrainedArgs& a, int jobs) {
    (void)jobs;  // single search is sequential by design
    const grace::Graph host = !a.graph_file.empty()
                                  ? grace::read_graph_file(a.graph_file)
                                  : grace::parse_inline_edges(a.edges, a.n);
    grace::ConstrainedOptions opts;
    opts.max_degree = a.max_degree;
    grace::SearchStats stats;

    bool empty_row = false;
    {
        const auto lat = grace::build_modified_lattice(host);
        for (int d = 1; d < host.n; ++d)
            if (lat.rows[d].empty()) empty_row = true;
    }

    if (a.enumerate) {
        std::ofstream out;
        if (!a.list_file.empty()) out = open_out(a.list_file);
        const std::uint64_t count = grace::enumerate_constrained_graceful_trees(
            host, opts,
            [&](const grace::LatticePath& p) {
                if (out.is_open()) out << grace::path_to_string(p) << "\n";
            },
            &stats);
        if (a.json_out) {
            std::cout << json{{"outcome", count > 0 ? "found" : "exhausted"},
                              {"maxDegree", a.max_degree},
                              {"count", count},
                              {"nodes", stats.nodes}}
                             .dump(2)
                      << "\n";
        } else {
            std::cout << "graceful trees " << count << "\n"
                      << "nodes " << stats.nodes << "\n";
        }
        if (a.verify) verify_against_threshold(host, a.max_degree, count > 0, a.json_out);
        if (count > 0) return 0;
        return empty_row ? 2 : 1;
    }

    grace::LatticePath path;
    const grace::SearchOutcome outcome =
        grace::find_constrained_graceful_tree(host, opts, path, &stats);

    json j = grace::constrained_json(outcome, stats, a.max_degree,
                                     outcome == grace::SearchOutcome::Found ? &path : nullptr);
    bool fallback_found = false;
    if (a.allow_nongraceful && outcome != grace::SearchOutcome::Found) {
        std::vector<grace::Edge> tree;
        grace::SearchStats fstats;
        const auto fout = grace::find_constrained_spanning_tree(host, opts, tree, &fstats);
        fallback_found = fout == grace::SearchOutcome::Found;
        j["fallback"] = json{{"outcome", grace::outcome_name(fout)}, {"nodes", fstats.nodes}};
        if (fallback_found) j["fallback"]["edges"] = grace::edge_list_string(tree);
    }

    if (a.json_out) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << "outcome " << grace::outcome_name(outcome) << "\n";
        if (outcome == grace::SearchOutcome::Found) {
            std::cout << "edges " << grace::edge_list_string(path.points) << "\n"
                      << "path " << grace::path_to_string(path) << "\n";
        }
        std::cout << "nodes " << stats.nodes << "\n";
        if (j.contains("fallback")) {
            std::cout << "fallback " << j["fallback"]["outcome"].get<std::string>() << "\n";
            if (fallback_found)
                std::cout << "fallback edges " << j["fallback"]["edges"].get<std::string>() << "\n";
        }
    }

    if (a.verify)
        verify_against_threshold(host, a.max_degree,
                                 outcome == grace::SearchOutcome::Found, a.json_out);

    switch (outcome) {
        case grace::SearchOutcome::Found: return 0;
        case grace::SearchOutcome::Exhausted: return fallback_found ? 0 : 1;
        case grace::SearchOutcome::InfeasibleEmptyRow: return fallback_found ? 0 : 2;
    }
    return 1;
}

// ------------------------------------------------------------------
// paper: the acceptance battery

int cmd_paper(int criterion, bool json_out, int jobs) {
    std::vector<grace::CriterionResult> results;
    if (criterion > 0) {
        results.push_back(grace::run_criterion(criterion, jobs));
    } else {
        results = grace::run_battery(jobs).results;
    }

    bool all_pass = true;
    int passed = 0;
    for (const auto& r : results) {
        all_pass = all_pass && r.pass;
        passed += r.pass ? 1 : 0;
    }

    if (json_out) {
        json list = json::array();
        for (const auto& r : results)
            list.push_back(json{{"id", r.id},
                                {"name", r.name},
                                {"pass", r.pass},
                                {"seconds", r.seconds},
                                {"detail", r.detail}});
        std::cout << json{{"criteria", std::move(list)}, {"allPass", all_pass}}.dump(2) << "\n";
    } else {
        for (const auto& r : results) {
            char timing[32];
            std::snprintf(timing, sizeof timing, "%.2fs", r.seconds);
            std::cout << "criterion " << (r.id < 10 ? " " : "") << r.id << " "
                      << (r.pass ? "PASS" : "FAIL") << " (" << timing << ") " << r.name << "\n"
                      << "    " << r.detail << "\n";
        }
        std::cout << passed << " of " << results.size() << " criteria pass\n";
    }
    return all_pass ? 0 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graceful spanning tree enumeration toolkit"};
    app.require_subcommand(1);
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker count for partitionable enumerations")
        ->check(CLI::Range(1, 256));

    SpanningArgs sp;
    auto* spanning = app.add_subcommand("spanning", "classify incidence-matrix monomials");
    spanning->fallthrough();
    auto* sp_n = spanning->add_option("--n", sp.n, "complete graph K_n")->check(CLI::Range(1, 12));
    spanning->add_option("--graph", sp.graph_file, "host graph file (\"n q\" then edge lines)")
        ->excludes(sp_n);
    spanning->add_option("--list", sp.list_file, "write spanning tree edge lists here");
    spanning->add_flag("--verify", sp.verify, "cross-check against the edge subset oracle");
    spanning->add_flag("--json", sp.json_out, "emit a JSON report");

    GracefulArgs gr;
    auto* graceful = app.add_subcommand("graceful", "catalog graceful spanning trees of K_n");
    graceful->fallthrough();
    graceful->add_option("--n", gr.n, "vertex count")->required()->check(CLI::Range(2, 10));
    graceful->add_option("--list", gr.list_file, "write tree edge lists here");
    graceful->add_option("--dot", gr.dot_file, "write DOT graphs here");
    graceful->add_flag("--verify", gr.verify, "cross-check against the edge subset oracle");
    graceful->add_flag("--json", gr.json_out, "emit a JSON report");

    StockArgs st;
    auto* stock = app.add_subcommand("stock", "isomorphism classes of trees on n vertices");
    stock->fallthrough();
    stock->add_option("--n", st.n, "vertex count")->required()->check(CLI::Range(1, 16));
    stock->add_option("--via", st.via, "construction route")
        ->check(CLI::IsMember({"extension", "special"}));
    stock->add_option("--two-path", st.two_path, "2-path reading for special points")
        ->check(CLI::IsMember({"strict", "any"}));
    stock->add_option("--dump", st.dump_file, "write code + representative lines here");
    stock->add_flag("--graceful", st.graceful,
                    "find a graceful labeling per class with label 1 on a special point");
    stock->add_flag("--verify", st.verify, "cross-check routes and the sequence-scan oracle");
    stock->add_flag("--json", st.json_out, "emit a JSON report");

    LatticeArgs la;
    auto* lattice = app.add_subcommand("lattice", "difference-triangle paths of K_n");
    lattice->fallthrough();
    lattice->add_option("--n", la.n, "vertex count")->required()->check(CLI::Range(2, 12));
    lattice->add_flag("--paths", la.paths, "count tree paths (default action)");
    lattice->add_flag("--all", la.all, "include paths that close a cycle");
    lattice->add_flag("--verify-coverage", la.coverage,
                      "check every tree shape is reached by some path");
    lattice->add_flag("--render", la.render, "print the triangle");
    lattice->add_option("--list", la.list_file, "write path listings here");
    lattice->add_flag("--json", la.json_out, "emit a JSON report");

    ConstrainedArgs co;
    auto* constrained =
        app.add_subcommand("constrained", "degree-capped graceful spanning tree search");
    constrained->fallthrough();
    auto* co_g = constrained->add_option("--graph", co.graph_file, "host graph file");
    constrained->add_option("--edges", co.edges, "inline host edges, e.g. \"1-2,2-3\"")
        ->excludes(co_g);
    constrained->add_option("--n", co.n, "vertex count override for --edges");
    constrained->add_option("--max-degree", co.max_degree, "degree cap, 0 = unconstrained")
        ->check(CLI::Range(0, 64));
    constrained->add_flag("--enumerate", co.enumerate, "count all hits instead of the first");
    constrained->add_flag("--allow-nongraceful", co.allow_nongraceful,
                          "fall back to any degree-capped spanning tree");
    constrained->add_option("--list", co.list_file, "with --enumerate, write hit paths here");
    constrained->add_flag("--verify", co.verify, "cross-check against the edge subset oracle");
    constrained->add_flag("--json", co.json_out, "emit a JSON report");

    int crit = 0;
    bool paper_json = false;
    auto* paper = app.add_subcommand("paper", "run the acceptance battery");
    paper->fallthrough();
    paper->add_option("--criterion", crit, "run a single criterion")
        ->check(CLI::Range(1, grace::battery_size));
    paper->add_flag("--json", paper_json, "emit a JSON report");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (spanning->parsed()) {
            if (sp.n == 0 && sp.graph_file.empty())
                throw std::invalid_argument("spanning needs --n or --graph");
            return cmd_spanning(sp, jobs);
        }
        if (graceful->parsed()) return cmd_graceful(gr, jobs);
        if (stock->parsed()) return cmd_stock(st, jobs);
        if (lattice->parsed()) return cmd_lattice(la, jobs);
        if (constrained->parsed()) {
            if (co.graph_file.empty() && co.edges.empty())
                throw std::invalid_argument("constrained needs --graph or --edges");
            return cmd_constrained(co, jobs);
        }
        if (paper->parsed()) return cmd_paper(crit, paper_json, jobs);
    } catch (const grace::guard_error& e) {
        std::cerr << "guard: " << e.what() << "\n";
        return 3;
    } catch (const verify_error& e) {
        std::cerr << "verify: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

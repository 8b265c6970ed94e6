// nbhd: analysis, elimination, census and demo front end.

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "nbhd/cayley.hpp"
#include "nbhd/error.hpp"
#include "nbhd/graph_io.hpp"
#include "nbhd/oracle.hpp"
#include "nbhd/report.hpp"
#include "nbhd/verify.hpp"

namespace {

using namespace nbhd;

constexpr int kExitEliminated = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Options {
    std::string input = "-";
    std::string format = "auto";
    bool json = false;
    bool all_rules = false;
    std::size_t max_clique_order = 8;
    std::string scope = "cayley";
    std::string census_path;
    std::size_t max_group_order = 16;
    std::size_t max_connection_size = 8;
    bool fail_on_eliminated = false;
};

struct Record {
    std::string source;
    Graph graph;
};

std::string read_input(const std::string& path) {
    if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open input file " + path, 0);
    return {std::istreambuf_iterator<char>(in), {}};
}

std::vector<std::string> graph6_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        auto t = detail::trim(line);
        if (!t.empty()) lines.emplace_back(t);
    }
    return lines;
}

std::vector<Record> parse_graph6_batch(const std::string& text) {
    std::vector<Record> out;
    for (const auto& line : graph6_lines(text)) out.push_back({line, parse_graph6(line)});
    if (out.empty()) throw ParseError("no graph6 records in input", 0);
    return out;
}

// Auto-detection: every non-empty line must parse as graph6, otherwise the whole input is read
// as one edge list.
std::vector<Record> load_records(const Options& opt) {
    auto text = read_input(opt.input);
    const std::string name = opt.input == "-" ? "<stdin>" : opt.input;
    if (opt.format == "graph6") return parse_graph6_batch(text);
    if (opt.format == "edges") return {{name, parse_edge_list(text)}};
    try {
        return parse_graph6_batch(text);
    } catch (const ParseError&) {
        return {{name, parse_edge_list(text)}};
    }
}

EliminationOptions engine_options(const Options& opt) {
    EliminationOptions e;
    e.max_clique_order = opt.max_clique_order;
    e.all_rules = opt.all_rules;
    e.scope_filter = opt.scope == "vertex-transitive" ? ScopeFilter::vertex_transitive : ScopeFilter::cayley;
    return e;
}

Json names(const Graph& g, const VertexSet& s) {
    Json arr = Json::array();
    for (Vertex v : s) arr.push_back(g.name(v));
    return arr;
}

std::string cycle_string(const Graph& g, const Permutation& p) {
    std::string out;
    for (const auto& c : p.cycles()) {
        if (c.size() < 2) continue;
        out += '(';
        for (std::size_t i = 0; i < c.size(); ++i) out += (i ? " " : "") + g.name(c[i]);
        out += ')';
    }
    return out.empty() ? "()" : out;
}

int run_analyze(const Options& opt) {
    for (const auto& rec : load_records(opt)) {
        Analysis an(rec.graph);
        const auto& g = an.graph();
        auto st = graph_stats(g);
        auto aut = automorphism_group(g);

        Json j;
        j["input"] = rec.source;
        j["n"] = st.n;
        j["m"] = st.m;
        j["valencies"] = st.valencies;
        j["asymmetric"] = an.asymmetric();
        j["automorphism_group_order"] = aut.order_saturated ? Json("saturated") : Json(aut.group_order);
        j["automorphism_generators"] = Json::array();
        for (const auto& p : aut.generators) j["automorphism_generators"].push_back(cycle_string(g, p));
        j["classes"] = Json::array();
        for (const auto& c : an.classes().classes) j["classes"].push_back(names(g, c));

        const std::size_t cap = std::min(opt.max_clique_order, st.n);
        j["orbit_restrictors"] = Json::array();
        for (std::size_t k = 1; k <= cap; ++k)
            for (const auto& s : cliques_of_order(g, k))
                if (is_orbit_restrictor(an, s)) j["orbit_restrictors"].push_back(names(g, s));
        j["max_clique_order"] = opt.max_clique_order;

        j["max_fixed_subsets"] = Json::object();
        for (const auto& c : an.classes().classes) {
            Vertex rep = c[0];
            j["max_fixed_subsets"][g.name(rep)] = names(g, max_fixed_subset(an, rep));
        }

        if (opt.json) {
            std::cout << j.dump() << "\n";
            continue;
        }
        std::cout << "input " << rec.source << "\n";
        std::cout << "  n=" << st.n << " m=" << st.m << "\n";
        std::cout << "  valencies " << j["valencies"].dump() << "\n";
        std::cout << "  asymmetric " << (an.asymmetric() ? "yes" : "no") << ", |Aut| = "
                  << j["automorphism_group_order"].dump() << "\n";
        for (const auto& p : aut.generators) std::cout << "  generator " << cycle_string(g, p) << "\n";
        std::cout << "  classes (by neighbourhood isomorphism type)\n";
        for (const auto& c : an.classes().classes) std::cout << "    " << names(g, c).dump() << "\n";
        std::cout << "  orbit-restrictors up to order " << cap << "\n";
        for (const auto& s : j["orbit_restrictors"]) std::cout << "    " << s.dump() << "\n";
        std::cout << "  maximal fixed subsets F(X,v) per class representative\n";
        for (const auto& [v, f] : j["max_fixed_subsets"].items()) std::cout << "    " << v << ": " << f.dump() << "\n";
    }
    return 0;
}

int run_eliminate(const Options& opt) {
    const auto eopt = engine_options(opt);
    bool any_eliminated = false;
    for (const auto& rec : load_records(opt)) {
        auto rep = run_all(rec.graph, eopt);
        rep.input = rec.source;
        for (const auto& v : rep.verdicts)
            if (!verify_verdict(rec.graph, v, eopt))
                throw InvariantViolation(std::string("witness re-check failed for ") + to_string(v.rule) +
                                         " on " + rec.source);
        any_eliminated = any_eliminated || rep.overall == Outcome::eliminated;
        if (opt.json)
            std::cout << report_json(rec.graph, rep).dump() << "\n";
        else
            std::cout << report_text(rec.graph, rep);
    }
    return opt.fail_on_eliminated && any_eliminated ? kExitEliminated : 0;
}

bool census_matches(const Census& c, const std::vector<GroupTable>& groups, const CensusOptions& copt) {
    if (c.catalog.size() != groups.size() || c.options.max_size != copt.max_size ||
        c.options.connected_only != copt.connected_only || c.options.capped_from_order != copt.capped_from_order)
        return false;
    for (std::size_t i = 0; i < groups.size(); ++i)
        if (c.catalog[i] != groups[i].name) return false;
    return true;
}

int run_census(const Options& opt) {
    auto groups = default_catalog(opt.max_group_order);
    CensusOptions copt;
    copt.max_size = opt.max_connection_size;

    Census census;
    bool loaded = false;
    namespace fs = std::filesystem;
    if (!opt.census_path.empty() && fs::exists(opt.census_path)) {
        census = parse_census(read_input(opt.census_path));
        loaded = census_matches(census, groups, copt);
        if (!loaded)
            std::cerr << "census file " << opt.census_path
                      << " was built with a different catalog or caps; rebuilding in memory\n";
    }
    const auto t0 = std::chrono::steady_clock::now();
    if (!loaded) {
        census = neighbourhood_census(groups, copt);
        if (!opt.census_path.empty() && !fs::exists(opt.census_path)) {
            std::ofstream out(opt.census_path, std::ios::binary);
            if (!out) throw InvalidArgument("cannot write census file " + opt.census_path);
            out << serialize_census(census);
        }
    }
    auto eopt = engine_options(opt);
    auto violations = soundness_check(census.forms, eopt);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    if (opt.json) {
        Json j;
        j["catalog"] = census.catalog;
        j["members"] = census.forms.size();
        j["loaded"] = loaded;
        j["max_connection_size"] = census.options.max_size;
        j["capped_from_order"] = census.options.capped_from_order;
        j["connected_only"] = census.options.connected_only;
        j["violations"] = Json::array();
        for (const auto& v : violations) j["violations"].push_back({{"form", v.form}, {"reason", v.reason}});
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "census: " << census.forms.size() << " distinct neighbourhoods from "
                  << census.catalog.size() << " groups" << (loaded ? " (loaded)" : "") << "\n";
        if (!loaded)
            std::cout << "  connection sets examined " << census.connection_sets_examined << ", connected "
                      << census.connected_graphs << "\n";
        std::cout << "  caps: connection sets of size <= " << census.options.max_size << " for groups of order >= "
                  << census.options.capped_from_order << ", connected only\n";
        std::cout << "soundness: " << violations.size() << " violation(s) in " << secs << " s\n";
        for (const auto& v : violations) std::cout << "  " << v.form << ": " << v.reason << "\n";
    }
    return violations.empty() ? 0 : kExitInternal;
}

int run_demo(const Options& opt) {
    auto d = semidihedral_demo();
    const auto& x = d.neighbourhood;
    if (opt.json) {
        Json j;
        j["cayley_order"] = d.cayley.order();
        j["graph6"] = emit_graph6(x);
        j["edges"] = Json::array();
        for (auto [u, v] : x.edges()) j["edges"].push_back({x.name(u), x.name(v)});
        j["report"] = report_json(x, d.report);
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << "Cayley graph of semidihedral16: " << d.cayley.order() << " vertices, "
              << d.cayley.edge_count() << " edges\n";
    std::cout << "neighbourhood of the identity (asymmetric):\n";
    std::cout << "graph6 " << emit_graph6(x) << "\n";
    std::cout << emit_edge_list(x);
    std::cout << report_text(x, d.report);
    return 0;
}

int run_selftest(const Options& opt) {
    bool ok = true;
    auto line = [&](bool pass, const std::string& what) {
        ok = ok && pass;
        if (!opt.json) std::cout << (pass ? "PASS " : "FAIL ") << what << "\n";
    };

    auto t0 = std::chrono::steady_clock::now();
    auto classes = oracle::iso_classes_up_to(7);
    std::size_t graphs = 0, mismatches = 0;
    for (const auto& level : classes)
        for (const auto& g : level) {
            ++graphs;
            if (!oracle::automorphisms_match(g)) ++mismatches;
        }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    line(graphs == 1253 && mismatches == 0, "automorphisms of all " + std::to_string(graphs) +
                                                " graphs on <= 7 vertices match brute force (" +
                                                std::to_string(mismatches) + " mismatches, " +
                                                std::to_string(secs) + " s)");

    std::mt19937_64 rng(20240611);
    std::size_t checked = 0, bad = 0;
    for (int i = 0; i < 200; ++i) {
        std::uniform_int_distribution<std::size_t> order(1, 9);
        std::uniform_real_distribution<double> density(0.2, 0.8);
        Analysis an(oracle::random_graph(order(rng), density(rng), rng));
        for (const auto& c : an.classes().classes) {
            ++checked;
            if (!oracle::fixed_subsets_consistent(an, c[0])) ++bad;
        }
    }
    line(bad == 0, "maximal fixed subsets contain every exhaustively found fixed subset (" +
                       std::to_string(checked) + " classes, " + std::to_string(bad) + " failures)");

    if (opt.json)
        std::cout << Json{{"passed", ok}, {"graphs", graphs}, {"automorphism_mismatches", mismatches},
                          {"fixed_subset_classes", checked}, {"fixed_subset_failures", bad}}
                         .dump()
                  << "\n";
    return ok ? 0 : kExitInternal;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Decide whether a graph can be the induced neighbourhood of a vertex-transitive graph"};
    app.require_subcommand(1);
    Options opt;
    if (const char* env = std::getenv("NEIGHBOURHOOD_CENSUS_PATH")) opt.census_path = env;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("input", opt.input, "Input file, or - for standard input")->default_val("-");
        cmd->add_option("--format", opt.format, "Input format")
            ->check(CLI::IsMember({"graph6", "edges", "auto"}))
            ->default_val("auto");
    };
    auto add_engine = [&](CLI::App* cmd) {
        cmd->add_flag("--all-rules,--all_rules", opt.all_rules, "Evaluate every rule instead of stopping early");
        cmd->add_option("--max-clique-order,--max_clique_order", opt.max_clique_order,
                        "Largest clique order enumerated")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--scope", opt.scope, "Which eliminations count towards the overall verdict")
            ->check(CLI::IsMember({"vertex-transitive", "cayley"}));
    };

    auto* analyze = app.add_subcommand("analyze", "Structure of a graph: classes, orbit-restrictors, fixed subsets");
    add_input(analyze);
    analyze->add_option("--max-clique-order,--max_clique_order", opt.max_clique_order,
                        "Largest orbit-restrictor order listed")
        ->check(CLI::PositiveNumber);

    auto* eliminate = app.add_subcommand("eliminate", "Run the elimination rules and print a report");
    add_input(eliminate);
    add_engine(eliminate);
    eliminate->add_flag("--fail-on-eliminated", opt.fail_on_eliminated, "Exit with status 1 when eliminated");

    auto* census = app.add_subcommand("census", "Build or load the Cayley neighbourhood census and check soundness");
    add_engine(census);
    census->add_option("--census_path,--census-path", opt.census_path,
                       "Census file (default: $NEIGHBOURHOOD_CENSUS_PATH); created if missing");
    census->add_option("--max_group_order,--max-group-order", opt.max_group_order, "Largest catalog group order")
        ->check(CLI::Range(1, 16));
    census->add_option("--max_connection_size,--max-connection-size", opt.max_connection_size,
                       "Connection-set size cap for order-16 groups");

    auto* demo = app.add_subcommand("demo", "Semidihedral Cayley graph with an asymmetric neighbourhood");
    auto* selftest = app.add_subcommand("selftest", "Cross-check against brute-force oracles");
    for (auto* cmd : {analyze, eliminate, census, demo, selftest}) cmd->add_flag("--json", opt.json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (analyze->parsed()) return run_analyze(opt);
        if (eliminate->parsed()) return run_eliminate(opt);
        if (census->parsed()) return run_census(opt);
        if (demo->parsed()) return run_demo(opt);
        if (selftest->parsed()) return run_selftest(opt);
    } catch (const ParseError& e) {
        std::cerr << "nbhd: parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvalidArgument& e) {
        std::cerr << "nbhd: " << e.what() << "\n";
        return kExitUsage;
    } catch (const InvariantViolation& e) {
        std::cerr << "nbhd: internal invariant violated: " << e.what() << "\n";
        return kExitInternal;
    } catch (const std::exception& e) {
        std::cerr << "nbhd: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "fixtures.hpp"
#include "nbhd/cayley.hpp"
#include "nbhd/eliminate.hpp"
#include "nbhd/oracle.hpp"
#include "nbhd/verify.hpp"

using namespace nbhd;
using namespace fixtures;

namespace {

// Time limits in seconds.
constexpr double kDemoLimit = 1.0;
constexpr double kRestrictorExampleLimit = 5.0;
constexpr double kCensusLimit = 600.0;
constexpr double kAutomorphismLimit = 120.0;

// Asymmetric iso-classes on n = 1..6 vertices, fixed from the brute-force oracle.
constexpr std::size_t kAsymmetricCounts[] = {1, 0, 0, 0, 0, 8};

constexpr std::size_t kGraphsUpToSeven = 1253;
constexpr int kRandomGraphs = 500;
constexpr int kRelabellings = 100;
constexpr std::size_t kMaxExhaustive = 14;

struct Outcome {
    bool pass = true;
    std::ostringstream detail;
    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            detail << " [failed: " << what << "]";
        }
    }
};

int failures = 0;

void criterion(int number, const std::string& title, double limit, const std::function<void(Outcome&)>& body) {
    Outcome out;
    auto t0 = std::chrono::steady_clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.pass = false;
        out.detail << " [exception: " << e.what() << "]";
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (limit > 0 && secs >= limit) {
        out.pass = false;
        out.detail << " [over time limit " << limit << " s]";
    }
    if (!out.pass) ++failures;
    std::printf("%s %d %s: %.3f s%s\n", out.pass ? "PASS" : "FAIL", number, title.c_str(), secs,
                out.detail.str().c_str());
    std::fflush(stdout);
}

bool eliminated_vt(const Verdict& v) {
    return v.outcome == nbhd::Outcome::eliminated && v.scope == Scope::vertex_transitive;
}

void semidihedral(Outcome& out) {
    auto d = semidihedral_demo();  // throws on any failed property
    auto st = graph_stats(d.cayley);
    out.require(st.n == 16 && st.is_connected, "Cayley graph shape");
    for (auto k : st.valencies) out.require(k == 6, "6-regular");
    auto nst = graph_stats(d.neighbourhood);
    auto vals = nst.valencies;
    std::sort(vals.begin(), vals.end());
    out.require(nst.n == 6 && nst.m == 6, "6 vertices, 6 edges");
    out.require(vals == std::vector<std::size_t>{1, 1, 2, 2, 3, 3}, "valency multiset");
    out.require(canonical_form(d.neighbourhood) == canonical_form(sd16_link()), "isomorphic to sd16_link.edges");
    out.require(is_asymmetric(d.neighbourhood), "asymmetric");
    out.require(run_all(d.neighbourhood).overall == nbhd::Outcome::inconclusive, "run_all inconclusive");
    out.detail << " graph6=" << emit_graph6(d.neighbourhood);
}

void restrictor_example_checks(Outcome& out) {
    auto g = restrictor_example();
    Analysis an(g);
    auto uv = ids(g, {"u", "v"});
    out.require(an.asymmetric(), "asymmetric");

    auto unique = unique_neighbourhood_cliques(g, 2, UniquenessMode::iso);
    out.require(unique.size() == 1 && unique[0].members == uv, "only iso-unique order-2 clique is {u,v}");
    std::size_t restrictors = 0;
    for (const auto& s : cliques_of_order(g, 2))
        if (is_orbit_restrictor(an, s)) {
            ++restrictors;
            out.require(s == uv, "order-2 orbit-restrictor is {u,v}");
        }
    out.require(restrictors == 1, "exactly one order-2 orbit-restrictor");
    auto common = induced_subgraph(g, common_neighbourhood(g, uv)).graph;
    out.require(canonical_form(common) == canonical_form(path(4)), "common neighbourhood is a path on 4 vertices");

    out.require(run_rule(RuleId::odd_class_involution, an).outcome == nbhd::Outcome::inconclusive, "R3 inconclusive");
    auto r5 = run_rule(RuleId::prime_clique, an);
    auto r6 = run_rule(RuleId::orbit_restrictor_order, an);
    out.require(eliminated_vt(r5), "R5 eliminated, vertex-transitive");
    out.require(eliminated_vt(r6), "R6 eliminated, vertex-transitive");
    out.require(verify_verdict(g, r5) && verify_verdict(g, r6), "witnesses re-check");
    auto rep = run_all(an);
    out.require(rep.overall == nbhd::Outcome::eliminated && rep.overall_scope == Scope::vertex_transitive,
                "run_all eliminated, vertex-transitive");
    out.detail << " overall=" << to_string(*rep.overall_rule);
}

void census_soundness(Outcome& out) {
    auto census = neighbourhood_census(default_catalog());
    auto violations = soundness_check(census.forms);
    out.require(census.forms.count(canonical_form(sd16_link())) == 1, "census contains the semidihedral link");
    out.require(violations.empty(), std::to_string(violations.size()) + " violations");
    for (const auto& v : violations) out.detail << " {" << v.form << ": " << v.reason << "}";
    out.detail << " groups=" << census.catalog.size() << " members=" << census.forms.size()
               << " connected_sets=" << census.connected_graphs;
}

void automorphism_oracle(Outcome& out) {
    std::size_t graphs = 0, mismatches = 0;
    for (const auto& level : oracle::iso_classes_up_to(7))
        for (const auto& g : level) {
            ++graphs;
            if (!oracle::automorphisms_match(g)) {
                ++mismatches;
                out.detail << " mismatch:" << emit_graph6(g);
            }
        }
    out.require(graphs == kGraphsUpToSeven, "graph count " + std::to_string(graphs));
    out.require(mismatches == 0, std::to_string(mismatches) + " mismatches");
    out.detail << " graphs=" << graphs << " mismatches=" << mismatches;
}

void asymmetric_counts(Outcome& out) {
    out.detail << " counts=";
    for (std::size_t n = 1; n <= 6; ++n) {
        std::size_t fast = 0, brute = 0;
        for (const auto& g : oracle::brute_iso_classes(n)) {
            if (is_asymmetric(g)) ++fast;
            if (oracle::brute_automorphisms(g).size() == 1) ++brute;
        }
        out.require(fast == brute, "n=" + std::to_string(n) + " fast " + std::to_string(fast) + " vs brute " +
                                       std::to_string(brute));
        out.require(brute == kAsymmetricCounts[n - 1], "n=" + std::to_string(n) + " frozen constant");
        out.detail << (n > 1 ? "," : "") << brute;
    }
}

void structural_properties(Outcome& out) {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> order(1, 10);
    std::uniform_real_distribution<double> density(0.15, 0.85);
    std::size_t restrictor_fail = 0, fixed_fail = 0, canon_fail = 0, g6_fail = 0, cliques = 0, classes = 0;
    for (int i = 0; i < kRandomGraphs; ++i) {
        const auto n = order(rng);
        auto g = oracle::random_graph(n, density(rng), rng);
        Analysis an(g);
        for (std::size_t k = 1; k <= n; ++k)
            for (const auto& w : unique_neighbourhood_cliques(g, k, UniquenessMode::iso)) {
                ++cliques;
                if (!is_orbit_restrictor(an, w.members)) ++restrictor_fail;
            }
        for (const auto& c : an.classes().classes) {
            ++classes;
            if (!oracle::fixed_subsets_consistent(an, c[0], kMaxExhaustive)) ++fixed_fail;
        }
        auto form = canonical_form(g);
        for (int r = 0; r < kRelabellings; ++r)
            if (canonical_form(relabel(g, oracle::random_permutation(n, rng).image())) != form) {
                ++canon_fail;
                break;
            }
        if (parse_graph6(emit_graph6(g)) != g) ++g6_fail;
    }
    out.require(restrictor_fail == 0, "unique cliques that are not orbit-restrictors");
    out.require(fixed_fail == 0, "fixed-subset exhaustion");
    out.require(canon_fail == 0, "canonical form not relabelling-invariant");
    out.require(g6_fail == 0, "graph6 round trip");
    out.detail << " unique_cliques=" << cliques << " classes=" << classes << " failures="
               << restrictor_fail + fixed_fail + canon_fail + g6_fail;
}

std::vector<Permutation> left_regular(const GroupTable& grp) {
    std::vector<Permutation> out;
    for (Element a = 0; a < grp.order; ++a) {
        std::vector<Vertex> img(grp.order);
        for (Element x = 0; x < grp.order; ++x) img[x] = grp(a, x);
        out.emplace_back(img);
    }
    return out;
}

void regularity_battery(Outcome& out) {
    struct Case {
        std::string name;
        std::vector<Permutation> perms;
        std::size_t degree;
        bool regular;
    };
    std::vector<Case> cases;
    for (std::size_t n : {1, 2, 3, 4, 5, 6, 8})
        cases.push_back({"cyclic(" + std::to_string(n) + ")", left_regular(cyclic(n)), n, true});
    cases.push_back({"klein", left_regular(direct_product(cyclic(2), cyclic(2))), 4, true});
    for (std::size_t n : {4, 6, 8, 10})
        cases.push_back({"dihedral(" + std::to_string(n) + ")", left_regular(dihedral(n)), n, true});
    cases.push_back({"quaternion8", left_regular(quaternion8()), 8, true});

    cases.push_back({"S3 on 3 points", oracle::brute_automorphisms(complete(3)), 3, false});
    cases.push_back({"D4 on 4 points", oracle::brute_automorphisms(cycle(4)), 4, false});
    cases.push_back({"D5 on 5 points", oracle::brute_automorphisms(cycle(5)), 5, false});
    cases.push_back({"S4 on 4 points", oracle::brute_automorphisms(complete(4)), 4, false});

    std::size_t disagreements = 0;
    for (const auto& c : cases) {
        auto r = is_regular_action(c.perms, c.degree);
        if (!r.agree) ++disagreements;
        out.require(r.agree, c.name + " conditions disagree");
        out.require(r.order_equals_degree == c.regular, c.name + " regularity");
    }
    out.detail << " actions=" << cases.size() << " disagreements=" << disagreements;
}

void negative_controls(Outcome& out) {
    auto k5e = run_all(k5_minus_edge());
    out.require(k5e.overall == nbhd::Outcome::eliminated && k5e.overall_rule == RuleId::edge_bound, "K5-e by R1");
    auto k13 = run_all(star(3));
    out.require(k13.overall == nbhd::Outcome::eliminated && k13.overall_rule == RuleId::complete_valency,
                "K1,3 by R2");
    EliminationOptions all;
    all.all_rules = true;
    const std::pair<const char*, Graph> symmetric[] = {
        {"C5", cycle(5)}, {"C6", cycle(6)}, {"K4", complete(4)}, {"Petersen", petersen()}};
    for (const auto& [name, g] : symmetric)
        for (const auto& v : run_all(g, all).verdicts)
            out.require(v.outcome != nbhd::Outcome::eliminated, std::string(name) + " eliminated by " + to_string(v.rule));
}

}  // namespace

int main() {
    criterion(1, "semidihedral reproduction", kDemoLimit, semidihedral);
    criterion(2, "orbit-restrictor example", kRestrictorExampleLimit, restrictor_example_checks);
    criterion(3, "census soundness", kCensusLimit, census_soundness);
    criterion(4, "automorphism oracle (n <= 7)", kAutomorphismLimit, automorphism_oracle);
    criterion(5, "asymmetric counts (n = 1..6)", 0, asymmetric_counts);
    criterion(6, "structural properties (500 random graphs)", 0, structural_properties);
    criterion(7, "regular action characterisations", 0, regularity_battery);
    criterion(8, "negative controls", 0, negative_controls);
    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}

#ifndef NBHD_ELIMINATE_HPP
#define NBHD_ELIMINATE_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "nbhd/automorphism.hpp"
#include "nbhd/graph.hpp"
#include "nbhd/structure.hpp"

namespace nbhd {

enum class RuleId {
    edge_bound,
    complete_valency,
    odd_class_involution,
    unique_clique,
    prime_clique,
    orbit_restrictor_order,
    fixed_subset,
};

inline constexpr RuleId kAllRules[] = {
    RuleId::edge_bound,           RuleId::complete_valency,       RuleId::odd_class_involution,
    RuleId::unique_clique,        RuleId::prime_clique,           RuleId::orbit_restrictor_order,
    RuleId::fixed_subset,
};

inline const char* to_string(RuleId r) {
    switch (r) {
        case RuleId::edge_bound: return "R1-edge-bound";
        case RuleId::complete_valency: return "R2-complete-valency";
        case RuleId::odd_class_involution: return "R3-odd-class-involution";
        case RuleId::unique_clique: return "R4-unique-clique";
        case RuleId::prime_clique: return "R5-prime-clique";
        case RuleId::orbit_restrictor_order: return "R6-orbit-restrictor-order";
        case RuleId::fixed_subset: return "R7-fixed-subset";
    }
    return "?";
}

enum class Outcome { eliminated, inconclusive, not_applicable };

inline const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::eliminated: return "eliminated";
        case Outcome::inconclusive: return "inconclusive";
        case Outcome::not_applicable: return "not-applicable";
    }
    return "?";
}

/// Which host graphs an elimination rules out.
enum class Scope { vertex_transitive, cayley_only };

inline const char* to_string(Scope s) {
    return s == Scope::vertex_transitive ? "vertex-transitive" : "cayley-only";
}

/// Which eliminations count toward the overall verdict.
enum class ScopeFilter { cayley, vertex_transitive };

inline const char* to_string(ScopeFilter s) {
    return s == ScopeFilter::cayley ? "cayley" : "vertex-transitive";
}

/// Rule-specific evidence. Fields a rule does not use stay empty.
struct Witness {
    std::optional<VertexSet> class_members;
    std::optional<Vertex> vertex;
    std::optional<VertexSet> clique;
    std::optional<VertexSet> common;
    std::optional<VertexSet> fixed_subset;
    std::optional<std::uint64_t> prime;
    std::vector<std::uint64_t> admissible_orders;
    std::string branch;
    std::vector<std::pair<std::string, std::int64_t>> numbers;
};

struct Verdict {
    RuleId rule = RuleId::edge_bound;
    Outcome outcome = Outcome::inconclusive;
    Scope scope = Scope::vertex_transitive;
    Witness witness;
    std::string explanation;
    bool cap_hit = false;
};

struct EliminationOptions {
    ScopeFilter scope_filter = ScopeFilter::cayley;
    std::size_t max_clique_order = 8;
    /// Largest number of neighbourhood isomorphism restrictions enumerated per test.
    std::size_t iso_enumeration_cap = 200'000;
    bool all_rules = false;
    InvolutionReading involution_reading = InvolutionReading::fixed_point_free;
};

struct EliminationReport {
    std::string input;
    GraphStats stats;
    bool asymmetric = false;
    std::vector<Verdict> verdicts;
    Outcome overall = Outcome::inconclusive;
    std::optional<Scope> overall_scope;
    std::optional<RuleId> overall_rule;
    EliminationOptions limits;
    std::vector<RuleId> caps_hit;
};

namespace detail {

inline bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

inline Scope precondition_scope(const Analysis& an) {
    return an.asymmetric() ? Scope::vertex_transitive : Scope::cayley_only;
}

inline std::string set_names(const Graph& g, const VertexSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + g.name(s[i]);
    return out + "}";
}

enum class SearchResult { found, absent, cap_exceeded };

/// Looks for a permutation satisfying pred in the union of cosets H*t over t in transversal,
/// where H is generated by gens.
template <typename Pred>
SearchResult search_restrictions(const std::vector<Permutation>& gens,
                                 const std::vector<Permutation>& transversal, std::size_t degree,
                                 std::size_t cap, Pred pred) {
    auto h_cap = cap / std::max<std::size_t>(transversal.size(), 1);
    auto elements = group_elements(gens, degree, std::max<std::size_t>(h_cap, 1));
    if (elements.empty()) return SearchResult::cap_exceeded;
    for (const auto& h : elements)
        for (const auto& t : transversal)
            if (pred(h * t)) return SearchResult::found;
    return SearchResult::absent;
}

/// Restrictions to f of every isomorphism <N(v')> -> <N(v)> with v' in [v], tested for a uniform
/// cycle length accepted by ok_length.
template <typename Ok>
SearchResult search_incoming_restrictions(const Analysis& an, Vertex v, const VertexSet& f,
                                          std::size_t cap, Ok ok_length) {
    std::vector<Permutation> gens;
    for (const auto& sigma : an.neighbourhood_automorphisms(v)) gens.push_back(sigma.restrict_to(f));
    std::vector<Permutation> transversal;
    for (Vertex w : an.class_of(v)) transversal.push_back(an.base_isomorphism(w, v).restrict_to(f));
    return search_restrictions(gens, transversal, f.size(), cap, [&](const Permutation& p) {
        return ok_length(uniform_cycle_length(p));
    });
}

/// Restrictions to f of every isomorphism between neighbourhoods of any two members of [v];
/// these form a group generated by the restricted class generators.
template <typename Ok>
SearchResult search_class_restrictions(const Analysis& an, Vertex v, const VertexSet& f,
                                       std::size_t cap, Ok ok_length) {
    std::vector<Permutation> gens;
    for (const auto& m : an.class_isomorphism_generators(v)) gens.push_back(m.restrict_to(f));
    return search_restrictions(gens, {Permutation::identity(f.size())}, f.size(), cap,
                               [&](const Permutation& p) { return ok_length(uniform_cycle_length(p)); });
}

inline std::size_t clique_cap(const Graph& g, const EliminationOptions& opt) {
    return std::min(opt.max_clique_order, g.order());
}

}  // namespace detail

inline Verdict rule_edge_bound(const Analysis& an) {
    const auto st = graph_stats(an.graph());
    Verdict v{RuleId::edge_bound, Outcome::inconclusive, Scope::vertex_transitive, {}, {}, false};
    v.witness.numbers = {{"n", static_cast<std::int64_t>(st.n)}, {"m", static_cast<std::int64_t>(st.m)}};
    if (st.is_clique) {
        v.outcome = Outcome::not_applicable;
        v.explanation = "input is a clique";
    } else if (2 * st.m + 2 * st.n > st.n * st.n) {
        // 2m > n(n-2), written without unsigned underflow at n < 2
        v.outcome = Outcome::eliminated;
        v.explanation = "2m = " + std::to_string(2 * st.m) + " exceeds n(n-2) = " +
                        std::to_string(st.n * (st.n - 2)) +
                        ", contradicting the connectivity of a vertex-transitive host";
    } else {
        v.explanation = "2m = " + std::to_string(2 * st.m) + " does not exceed n(n-2)";
    }
    return v;
}

inline Verdict rule_complete_valency(const Analysis& an) {
    const auto st = graph_stats(an.graph());
    Verdict v{RuleId::complete_valency, Outcome::inconclusive, Scope::vertex_transitive, {}, {}, false};
    const std::size_t c = st.complete_valency.size();
    v.witness.class_members = st.complete_valency;
    v.witness.numbers = {{"n", static_cast<std::int64_t>(st.n)},
                         {"complete_valency_count", static_cast<std::int64_t>(c)}};
    if (st.is_clique) {
        v.outcome = Outcome::not_applicable;
        v.explanation = "input is a clique";
    } else if (3 * c + 2 > st.n) {
        v.outcome = Outcome::eliminated;
        v.explanation = std::to_string(c) + " complete-valency vertices exceed (n-2)/3";
    } else {
        v.explanation = std::to_string(c) + " complete-valency vertices do not exceed (n-2)/3";
    }
    return v;
}

inline Verdict rule_odd_class_involution(const Analysis& an, const EliminationOptions& opt = {}) {
    const auto& g = an.graph();
    Verdict out{RuleId::odd_class_involution, Outcome::inconclusive, detail::precondition_scope(an),
                {}, {}, false};
    for (const auto& cls : an.classes().classes) {
        if (cls.size() % 2 == 0) continue;
        Vertex v = cls[0];
        if (has_fpf_involution_automorphism(an.neighbourhood_view(v).graph, opt.involution_reading))
            continue;
        out.outcome = Outcome::eliminated;
        out.witness.class_members = cls;
        out.witness.vertex = v;
        out.witness.branch = cls.size() == 1 && g.valency(v) % 2 == 1 ? "unique-odd-vertex"
                                                                       : "odd-class";
        out.explanation = "class " + detail::set_names(g, cls) +
                          " has odd size and the neighbourhood of " + g.name(v) +
                          " has no fixed-point-free involution";
        return out;
    }
    out.explanation = "every odd class has a neighbourhood with a fixed-point-free involution";
    return out;
}

inline Verdict rule_unique_clique(const Analysis& an, const EliminationOptions& opt = {}) {
    const auto& g = an.graph();
    Verdict out{RuleId::unique_clique, Outcome::inconclusive, detail::precondition_scope(an), {}, {},
                false};
    const auto cap = detail::clique_cap(g, opt);
    for (std::size_t k = 1; k <= cap; ++k) {
        for (const auto& w : unique_neighbourhood_cliques(g, k, UniquenessMode::iso)) {
            for (Vertex v : w.members) {
                auto hits = w.members.intersect(an.class_of(v));
                if (hits.size() % 2 == 0) continue;
                std::string branch;
                if (k % 2 == 0) {
                    branch = "even-clique-odd-class";
                } else if (!has_fpf_involution_automorphism(an.neighbourhood_view(v).graph,
                                                            opt.involution_reading)) {
                    branch = "neighbourhood-without-involution";
                } else if (!has_fpf_involution_automorphism(induced_subgraph(g, w.common).graph,
                                                            opt.involution_reading)) {
                    branch = "common-neighbourhood-without-involution";
                } else {
                    continue;
                }
                out.outcome = Outcome::eliminated;
                out.witness.clique = w.members;
                out.witness.common = w.common;
                out.witness.vertex = v;
                out.witness.class_members = hits;
                out.witness.branch = branch;
                out.explanation = "unique-neighbourhood clique " + detail::set_names(g, w.members) +
                                  " meets the class of " + g.name(v) + " in an odd number of vertices (" +
                                  branch + ")";
                return out;
            }
        }
    }
    out.explanation = "no unique-neighbourhood clique of order <= " + std::to_string(cap) +
                      " yields a contradiction";
    return out;
}

inline Verdict rule_prime_clique(const Analysis& an, const EliminationOptions& opt = {}) {
    const auto& g = an.graph();
    Verdict out{RuleId::prime_clique, Outcome::inconclusive, detail::precondition_scope(an), {}, {},
                false};
    const auto cap = detail::clique_cap(g, opt);
    for (std::uint64_t p = 2; p - 1 <= cap; ++p) {
        if (!detail::is_prime(p)) continue;
        for (const auto& w : unique_neighbourhood_cliques(g, p - 1, UniquenessMode::count)) {
            if (w.common.empty() || w.common.size() % p == 0) continue;
            out.outcome = Outcome::eliminated;
            out.witness.prime = p;
            out.witness.clique = w.members;
            out.witness.common = w.common;
            out.explanation = "clique " + detail::set_names(g, w.members) + " of order " +
                              std::to_string(p - 1) + " has a unique count of " +
                              std::to_string(w.common.size()) + " common neighbours, not divisible by " +
                              std::to_string(p);
            return out;
        }
    }
    out.explanation = "no count-unique clique of prime-minus-one order <= " + std::to_string(cap) +
                      " has a common-neighbour count indivisible by the prime";
    return out;
}

inline Verdict rule_orbit_restrictor_order(const Analysis& an, const EliminationOptions& opt = {}) {
    const auto& g = an.graph();
    Verdict out{RuleId::orbit_restrictor_order, Outcome::inconclusive, detail::precondition_scope(an),
                {}, {}, false};
    const auto cap = detail::clique_cap(g, opt);
    for (std::size_t k = 1; k <= cap; ++k) {
        const std::uint64_t host = k + 1;
        for (const auto& s : cliques_of_order(g, k)) {
            if (!is_orbit_restrictor(an, s)) continue;
            for (Vertex v : s) {
                auto f = max_fixed_subset(an, v);
                if (f.empty()) continue;
                auto res = detail::search_incoming_restrictions(
                    an, v, f, opt.iso_enumeration_cap,
                    [&](std::size_t d) { return d > 1 && host % d == 0; });
                if (res == detail::SearchResult::cap_exceeded) {
                    out.cap_hit = true;
                    continue;
                }
                if (res == detail::SearchResult::found) continue;
                out.outcome = Outcome::eliminated;
                out.witness.clique = s;
                out.witness.vertex = v;
                out.witness.fixed_subset = f;
                for (std::uint64_t d = 2; d <= host; ++d)
                    if (host % d == 0) out.witness.admissible_orders.push_back(d);
                out.explanation = "orbit-restrictor " + detail::set_names(g, s) + ": no isomorphism into the "
                                  "neighbourhood of " + g.name(v) + " acts on F = " +
                                  detail::set_names(g, f) + " with uniform cycle length dividing " +
                                  std::to_string(host);
                return out;
            }
        }
    }
    out.explanation = "every orbit-restrictor of order <= " + std::to_string(cap) +
                      " admits a compatible semiregular restriction";
    if (out.cap_hit) out.explanation += " (enumeration cap reached on some restrictor)";
    return out;
}

inline Verdict rule_fixed_subset(const Analysis& an, const EliminationOptions& opt = {}) {
    const auto& g = an.graph();
    Verdict out{RuleId::fixed_subset, Outcome::not_applicable, detail::precondition_scope(an), {}, {},
                false};
    bool tested = false;
    for (const auto& cls : an.classes().classes) {
        Vertex v = cls[0];
        auto f = max_fixed_subset(an, v);
        if (f.empty()) continue;
        tested = true;
        auto res = detail::search_class_restrictions(an, v, f, opt.iso_enumeration_cap,
                                                     [](std::size_t d) { return d > 1; });
        if (res == detail::SearchResult::cap_exceeded) {
            out.cap_hit = true;
            continue;
        }
        if (res == detail::SearchResult::found) continue;
        out.outcome = Outcome::eliminated;
        out.witness.class_members = cls;
        out.witness.vertex = v;
        out.witness.fixed_subset = f;
        out.explanation = "no isomorphism between neighbourhoods of class " + detail::set_names(g, cls) +
                          " restricts to a fixed-point-free semiregular permutation of F = " +
                          detail::set_names(g, f);
        return out;
    }
    if (tested) {
        out.outcome = Outcome::inconclusive;
        out.explanation = "every nonempty maximal fixed subset admits a fixed-point-free semiregular "
                          "restriction";
        if (out.cap_hit) out.explanation += " (enumeration cap reached on some class)";
    } else {
        out.explanation = "every class has an empty maximal fixed subset";
    }
    return out;
}

inline Verdict run_rule(RuleId id, const Analysis& an, const EliminationOptions& opt = {}) {
    switch (id) {
        case RuleId::edge_bound: return rule_edge_bound(an);
        case RuleId::complete_valency: return rule_complete_valency(an);
        case RuleId::odd_class_involution: return rule_odd_class_involution(an, opt);
        case RuleId::unique_clique: return rule_unique_clique(an, opt);
        case RuleId::prime_clique: return rule_prime_clique(an, opt);
        case RuleId::orbit_restrictor_order: return rule_orbit_restrictor_order(an, opt);
        case RuleId::fixed_subset: return rule_fixed_subset(an, opt);
    }
    throw InvalidArgument("unknown rule");
}

inline bool counts_toward_overall(const Verdict& v, ScopeFilter filter) {
    if (v.outcome != Outcome::eliminated) return false;
    return filter == ScopeFilter::cayley || v.scope == Scope::vertex_transitive;
}

/// Runs the rules in cost order and assembles the report.
inline EliminationReport run_all(const Analysis& an, const EliminationOptions& opt = {}) {
    EliminationReport rep;
    rep.input = canonical_form(an.graph());
    rep.stats = graph_stats(an.graph());
    rep.asymmetric = an.asymmetric();
    rep.limits = opt;
    for (RuleId id : kAllRules) {
        auto v = run_rule(id, an, opt);
        if (v.cap_hit) rep.caps_hit.push_back(id);
        bool counts = counts_toward_overall(v, opt.scope_filter);
        if (counts) {
            if (rep.overall != Outcome::eliminated) {
                rep.overall = Outcome::eliminated;
                rep.overall_rule = id;
                rep.overall_scope = v.scope;
            } else if (v.scope == Scope::vertex_transitive &&
                       rep.overall_scope == Scope::cayley_only) {
                rep.overall_rule = id;
                rep.overall_scope = v.scope;
            }
        }
        rep.verdicts.push_back(std::move(v));
        if (counts && !opt.all_rules) break;
    }
    return rep;
}

inline EliminationReport run_all(const Graph& g, const EliminationOptions& opt = {}) {
    return run_all(Analysis(g), opt);
}

}  // namespace nbhd

#endif  // NBHD_ELIMINATE_HPP

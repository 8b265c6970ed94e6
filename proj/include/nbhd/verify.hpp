#ifndef NBHD_VERIFY_HPP
#define NBHD_VERIFY_HPP

#include <map>
#include <string>

#include "nbhd/automorphism.hpp"
#include "nbhd/eliminate.hpp"
#include "nbhd/graph.hpp"
#include "nbhd/structure.hpp"

namespace nbhd {

namespace detail {

/// Members of the ~ class of v recomputed by pairwise isomorphism tests, without the cached
/// canonical keys of Analysis.
inline VertexSet recompute_class(const Graph& g, Vertex v) {
    auto nv = induced_neighbourhood(g, v).graph;
    std::vector<Vertex> members;
    for (Vertex w = 0; w < g.order(); ++w)
        if (w == v || all_isomorphisms(induced_neighbourhood(g, w).graph, nv)) members.push_back(w);
    return VertexSet(std::move(members));
}

inline bool unique_among_cliques(const Graph& g, const VertexSet& s, UniquenessMode mode) {
    if (!is_clique(g, s) || s.empty()) return false;
    auto mine = induced_subgraph(g, common_neighbourhood(g, s)).graph;
    for (const auto& t : cliques_of_order(g, s.size())) {
        if (t == s) continue;
        auto other = induced_subgraph(g, common_neighbourhood(g, t)).graph;
        bool same = mode == UniquenessMode::count ? other.order() == mine.order()
                                                  : all_isomorphisms(other, mine).has_value();
        if (same) return false;
    }
    return true;
}

}  // namespace detail

/// Re-derives an eliminated verdict from its witness. Returns false when the witness does not
/// support the elimination. Verdicts with any other outcome verify trivially.
inline bool verify_verdict(const Graph& g, const Verdict& v, const EliminationOptions& opt = {}) {
    if (v.outcome != Outcome::eliminated) return true;
    const auto st = graph_stats(g);
    if (v.scope == Scope::vertex_transitive && v.rule != RuleId::edge_bound &&
        v.rule != RuleId::complete_valency && !is_asymmetric(g))
        return false;
    const auto& w = v.witness;
    auto fpf = [&](const Graph& h) { return has_fpf_involution_automorphism(h, opt.involution_reading); };

    switch (v.rule) {
        case RuleId::edge_bound:
            return !st.is_clique && 2 * st.m + 2 * st.n > st.n * st.n;
        case RuleId::complete_valency: {
            std::size_t c = 0;
            for (Vertex x = 0; x < st.n; ++x)
                if (g.valency(x) + 1 == st.n) ++c;
            return !st.is_clique && 3 * c + 2 > st.n;
        }
        case RuleId::odd_class_involution: {
            if (!w.vertex || !w.class_members) return false;
            auto cls = detail::recompute_class(g, *w.vertex);
            return cls == *w.class_members && cls.size() % 2 == 1 &&
                   !fpf(induced_neighbourhood(g, *w.vertex).graph);
        }
        case RuleId::unique_clique: {
            if (!w.vertex || !w.clique || !w.class_members) return false;
            const auto& s = *w.clique;
            if (!s.contains(*w.vertex) || !detail::unique_among_cliques(g, s, UniquenessMode::iso))
                return false;
            auto hits = s.intersect(detail::recompute_class(g, *w.vertex));
            if (hits != *w.class_members || hits.size() % 2 == 0) return false;
            if (w.branch == "even-clique-odd-class") return s.size() % 2 == 0;
            if (w.branch == "neighbourhood-without-involution")
                return !fpf(induced_neighbourhood(g, *w.vertex).graph);
            if (w.branch == "common-neighbourhood-without-involution")
                return !fpf(induced_subgraph(g, common_neighbourhood(g, s)).graph);
            return false;
        }
        case RuleId::prime_clique: {
            if (!w.prime || !w.clique) return false;
            const auto p = *w.prime;
            const auto& s = *w.clique;
            if (!detail::is_prime(p) || s.size() + 1 != p) return false;
            if (!detail::unique_among_cliques(g, s, UniquenessMode::count)) return false;
            auto c = common_neighbourhood(g, s).size();
            return c > 0 && c % p != 0;
        }
        case RuleId::orbit_restrictor_order: {
            if (!w.vertex || !w.clique || !w.fixed_subset) return false;
            Analysis an(g);
            const auto& s = *w.clique;
            if (!s.contains(*w.vertex) || !is_clique(g, s) || !is_orbit_restrictor(an, s)) return false;
            if (!is_fixed_subset(an, *w.vertex, *w.fixed_subset) || w.fixed_subset->empty()) return false;
            // Enumerate every isomorphism into N(v) explicitly and test its restriction.
            const std::uint64_t host = s.size() + 1;
            auto target = induced_neighbourhood(g, *w.vertex);
            for (Vertex src : an.class_of(*w.vertex)) {
                auto source = induced_neighbourhood(g, src);
                auto fam = all_isomorphisms(source.graph, target.graph);
                if (!fam) return false;
                auto members = fam->members(opt.iso_enumeration_cap);
                if (members.empty()) return false;
                for (const auto& phi : members) {
                    VertexMap m(g.order());
                    for (Vertex x = 0; x < source.back_map.size(); ++x)
                        m.set(source.back_map[x], target.back_map[phi(x)]);
                    auto d = uniform_cycle_length(m.restrict_to(*w.fixed_subset));
                    if (d > 1 && host % d == 0) return false;
                }
            }
            return true;
        }
        case RuleId::fixed_subset: {
            if (!w.vertex || !w.fixed_subset || w.fixed_subset->empty()) return false;
            Analysis an(g);
            if (!is_fixed_subset(an, *w.vertex, *w.fixed_subset)) return false;
            const auto& cls = an.class_of(*w.vertex);
            for (Vertex a : cls) {
                auto va = induced_neighbourhood(g, a);
                for (Vertex b : cls) {
                    auto vb = induced_neighbourhood(g, b);
                    auto fam = all_isomorphisms(va.graph, vb.graph);
                    if (!fam) return false;
                    auto members = fam->members(opt.iso_enumeration_cap);
                    if (members.empty()) return false;
                    for (const auto& phi : members) {
                        VertexMap m(g.order());
                        for (Vertex x = 0; x < va.back_map.size(); ++x)
                            m.set(va.back_map[x], vb.back_map[phi(x)]);
                        if (uniform_cycle_length(m.restrict_to(*w.fixed_subset)) > 1) return false;
                    }
                }
            }
            return true;
        }
    }
    return false;
}

}  // namespace nbhd

#endif  // NBHD_VERIFY_HPP

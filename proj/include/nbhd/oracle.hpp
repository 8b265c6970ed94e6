#ifndef NBHD_ORACLE_HPP
#define NBHD_ORACLE_HPP

// Brute-force reference routines. They share no code with the refinement search and exist to
// cross-check it in tests and in `nbhd selftest`.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "nbhd/automorphism.hpp"
#include "nbhd/graph.hpp"
#include "nbhd/permutation.hpp"
#include "nbhd/structure.hpp"

namespace nbhd::oracle {

/// Every automorphism, by filtering all n! permutations.
inline std::vector<Permutation> brute_automorphisms(const Graph& g) {
    std::vector<Vertex> img(g.order());
    std::iota(img.begin(), img.end(), Vertex{0});
    std::vector<Permutation> out;
    const auto edges = g.edges();
    do {
        bool ok = true;
        for (auto [u, v] : edges)
            if (!g.adjacent(img[u], img[v])) {
                ok = false;
                break;
            }
        if (ok) out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

/// Every isomorphism a -> b, by filtering all n! bijections.
inline std::vector<Permutation> brute_isomorphisms(const Graph& a, const Graph& b) {
    std::vector<Permutation> out;
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return out;
    std::vector<Vertex> img(a.order());
    std::iota(img.begin(), img.end(), Vertex{0});
    const auto edges = a.edges();
    do {
        bool ok = true;
        for (auto [u, v] : edges)
            if (!b.adjacent(img[u], img[v])) {
                ok = false;
                break;
            }
        if (ok) out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

/// Smallest upper-triangle adjacency code over all relabellings; equal iff isomorphic.
inline std::uint64_t brute_code(const Graph& g) {
    const std::size_t n = g.order();
    std::vector<Vertex> img(n);
    std::iota(img.begin(), img.end(), Vertex{0});
    std::uint64_t best = UINT64_MAX;
    do {
        std::uint64_t code = 0;
        for (std::size_t j = 1; j < n; ++j)
            for (std::size_t i = 0; i < j; ++i) code = (code << 1) | (g.adjacent(img[i], img[j]) ? 1 : 0);
        best = std::min(best, code);
    } while (std::next_permutation(img.begin(), img.end()));
    return best;
}

/// Graph with edges given by the bits of mask over pairs (i<j) in column order.
inline Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
    Graph g(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++k)
            if ((mask >> k) & 1U) g.add_edge(i, j);
    return g;
}

/// One representative per isomorphism class of graphs on n vertices, deduplicated by brute_code.
/// Exhaustive over all 2^(n(n-1)/2) labelled graphs; intended for n <= 6.
inline std::vector<Graph> brute_iso_classes(std::size_t n) {
    const std::size_t pairs = n * (n == 0 ? 0 : n - 1) / 2;
    std::set<std::uint64_t> seen;
    std::vector<Graph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
        auto g = graph_from_mask(n, mask);
        if (seen.insert(brute_code(g)).second) out.push_back(std::move(g));
    }
    return out;
}

/// Representatives on n vertices from representatives on n-1 vertices: every graph is some
/// smaller graph plus one vertex with an arbitrary neighbour set.
inline std::vector<Graph> extend_iso_classes(const std::vector<Graph>& smaller) {
    std::set<std::string> seen;
    std::vector<Graph> out;
    for (const auto& h : smaller) {
        const std::size_t m = h.order();
        for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << m); ++nb) {
            Graph g(m + 1);
            for (auto [u, v] : h.edges()) g.add_edge(u, v);
            for (Vertex u = 0; u < m; ++u)
                if ((nb >> u) & 1U) g.add_edge(u, static_cast<Vertex>(m));
            if (seen.insert(canonical_form(g)).second) out.push_back(std::move(g));
        }
    }
    return out;
}

/// Representatives indexed by order 0..max_n: brute-force dedup up to order 6, extension beyond.
inline std::vector<std::vector<Graph>> iso_classes_up_to(std::size_t max_n) {
    std::vector<std::vector<Graph>> out;
    for (std::size_t n = 0; n <= max_n; ++n)
        out.push_back(n <= 6 ? brute_iso_classes(n) : extend_iso_classes(out.back()));
    return out;
}

/// Whether the refinement search reproduces the brute-force automorphism set exactly.
inline bool automorphisms_match(const Graph& g) {
    auto fast = automorphism_group(g).elements();
    auto slow = brute_automorphisms(g);
    std::sort(fast.begin(), fast.end());
    std::sort(slow.begin(), slow.end());
    return fast == slow;
}

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i)
            if (coin(rng)) g.add_edge(i, j);
    return g;
}

inline Permutation random_permutation(std::size_t n, std::mt19937_64& rng) {
    std::vector<Vertex> img(n);
    std::iota(img.begin(), img.end(), Vertex{0});
    std::shuffle(img.begin(), img.end(), rng);
    return Permutation(std::move(img));
}

/// Every subset of the common neighbourhood of [v] that passes is_fixed_subset.
inline std::vector<VertexSet> exhaustive_fixed_subsets(const Analysis& an, Vertex v) {
    auto base = an.class_common_neighbourhood(v);
    std::vector<VertexSet> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << base.size()); ++mask) {
        std::vector<Vertex> z;
        for (std::size_t i = 0; i < base.size(); ++i)
            if ((mask >> i) & 1U) z.push_back(base[i]);
        VertexSet zs(std::move(z));
        if (is_fixed_subset(an, v, zs)) out.push_back(std::move(zs));
    }
    return out;
}

/// F(X,v) is itself fixed and contains every fixed subset found exhaustively. Past
/// max_exhaustive common neighbours only the first property is checked.
inline bool fixed_subsets_consistent(const Analysis& an, Vertex v, std::size_t max_exhaustive = 14) {
    auto f = max_fixed_subset(an, v);
    if (!is_fixed_subset(an, v, f)) return false;
    if (an.class_common_neighbourhood(v).size() > max_exhaustive) return true;
    for (const auto& z : exhaustive_fixed_subsets(an, v))
        if (!z.is_subset_of(f)) return false;
    return true;
}

/// Whether some automorphism found by brute force is a fixed-point-free involution.
inline bool brute_has_fpf_involution(const Graph& g) {
    if (g.order() == 0) return true;
    for (const auto& p : brute_automorphisms(g)) {
        auto prof = perm_profile(p);
        if (prof.is_fpf_involution) return true;
    }
    return false;
}

}  // namespace nbhd::oracle

#endif  // NBHD_ORACLE_HPP

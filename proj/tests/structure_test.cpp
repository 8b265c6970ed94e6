#include <gtest/gtest.h>

#include <random>

#include "fixtures.hpp"
#include "nbhd/error.hpp"
#include "nbhd/oracle.hpp"
#include "nbhd/structure.hpp"

using namespace nbhd;
using namespace fixtures;

namespace {

// Class partition from pairwise brute-force isomorphism of neighbourhoods.
std::vector<VertexSet> brute_classes(const Graph& g) {
    std::vector<VertexSet> out;
    std::vector<bool> done(g.order(), false);
    for (Vertex v = 0; v < g.order(); ++v) {
        if (done[v]) continue;
        auto nv = induced_neighbourhood(g, v).graph;
        std::vector<Vertex> members;
        for (Vertex w = v; w < g.order(); ++w) {
            auto nw = induced_neighbourhood(g, w).graph;
            if (!oracle::brute_isomorphisms(nv, nw).empty()) {
                members.push_back(w);
                done[w] = true;
            }
        }
        out.emplace_back(std::move(members));
    }
    return out;
}

}  // namespace

TEST(ClassifyVertices, Examples) {
    auto c5 = classify_vertices(cycle(5));
    ASSERT_EQ(c5.classes.size(), 1u);
    EXPECT_EQ(c5.classes[0].size(), 5u);

    auto k13 = classify_vertices(star(3));
    ASSERT_EQ(k13.classes.size(), 2u);
    EXPECT_EQ(k13.classes[0], (VertexSet{0}));
    EXPECT_EQ(k13.classes[1], (VertexSet{1, 2, 3}));
}

TEST(ClassifyVertices, SemidihedralLinkMatchesBruteForce) {
    auto g = sd16_link();
    auto parts = classify_vertices(g);
    EXPECT_EQ(parts.classes, brute_classes(g));
    // The two leaves both see a single vertex.
    EXPECT_EQ(parts.class_containing(id(g, "d")), ids(g, {"d", "f"}));
}

TEST(ClassifyVertices, RandomGraphsMatchBruteForce) {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 60; ++i) {
        auto g = oracle::random_graph(7, 0.45, rng);
        EXPECT_EQ(classify_vertices(g).classes, brute_classes(g)) << emit_graph6(g);
    }
}

TEST(CliquesOfOrder, Examples) {
    EXPECT_EQ(cliques_of_order(complete(4), 3).size(), 4u);
    EXPECT_TRUE(cliques_of_order(cycle(5), 3).empty());
    auto rx = restrictor_example();
    EXPECT_EQ(cliques_of_order(rx, 2).size(), rx.edge_count());
    EXPECT_EQ(cliques_of_order(rx, 1).size(), rx.order());
    EXPECT_THROW(cliques_of_order(cycle(5), 0), InvalidArgument);
    EXPECT_THROW(cliques_of_order(cycle(5), 6), InvalidArgument);
}

TEST(UniqueNeighbourhoodCliques, RestrictorExampleHasExactlyUV) {
    auto g = restrictor_example();
    auto found = unique_neighbourhood_cliques(g, 2, UniquenessMode::iso);
    ASSERT_EQ(found.size(), 1u);
    EXPECT_EQ(found[0].members, ids(g, {"u", "v"}));
    EXPECT_EQ(canonical_form(induced_subgraph(g, found[0].common).graph), canonical_form(path(4)));
}

TEST(UniqueNeighbourhoodCliques, Examples) {
    EXPECT_TRUE(unique_neighbourhood_cliques(complete(4), 2, UniquenessMode::iso).empty());
    auto p3 = parse_edge_list("a b\nb c");
    auto found = unique_neighbourhood_cliques(p3, 1, UniquenessMode::count);
    ASSERT_EQ(found.size(), 1u);
    EXPECT_EQ(found[0].members, ids(p3, {"b"}));
}

TEST(UniqueNeighbourhoodCliques, CountUniqueImpliesIsoUnique) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 80; ++i) {
        auto g = oracle::random_graph(8, 0.5, rng);
        for (std::size_t k = 1; k <= 3; ++k) {
            auto iso = unique_neighbourhood_cliques(g, k, UniquenessMode::iso);
            for (const auto& c : unique_neighbourhood_cliques(g, k, UniquenessMode::count))
                EXPECT_TRUE(std::any_of(iso.begin(), iso.end(), [&](auto& w) { return w.members == c.members; }));
        }
    }
}

TEST(OrbitRestrictor, Examples) {
    auto rx = restrictor_example();
    EXPECT_TRUE(is_orbit_restrictor(rx, ids(rx, {"u", "v"})));
    EXPECT_FALSE(is_orbit_restrictor(complete(4), {0, 1}));
    EXPECT_THROW(is_orbit_restrictor(cycle(5), {0, 2}), InvalidArgument);
    EXPECT_THROW(is_orbit_restrictor(cycle(5), {}), InvalidArgument);
}

TEST(OrbitRestrictor, RestrictorExampleOnlyOrderTwoRestrictorIsUV) {
    auto g = restrictor_example();
    Analysis an(g);
    std::vector<VertexSet> found;
    for (const auto& s : cliques_of_order(g, 2))
        if (is_orbit_restrictor(an, s)) found.push_back(s);
    ASSERT_EQ(found.size(), 1u);
    EXPECT_EQ(found[0], ids(g, {"u", "v"}));
}

TEST(OrbitRestrictor, UniqueCliquesAreRestrictors) {
    std::mt19937_64 rng(9);
    for (int i = 0; i < 100; ++i) {
        std::uniform_int_distribution<std::size_t> order(2, 9);
        Analysis an(oracle::random_graph(order(rng), 0.5, rng));
        for (std::size_t k = 1; k <= std::min<std::size_t>(4, an.graph().order()); ++k)
            for (const auto& w : unique_neighbourhood_cliques(an.graph(), k, UniquenessMode::iso))
                EXPECT_TRUE(is_orbit_restrictor(an, w.members)) << emit_graph6(an.graph());
    }
}

TEST(FixedSubset, Examples) {
    EXPECT_TRUE(is_fixed_subset(cycle(5), 0, {}));
    EXPECT_FALSE(is_fixed_subset(complete(4), 0, {1}));
    auto rx = restrictor_example();
    EXPECT_TRUE(is_fixed_subset(rx, id(rx, "u"), ids(rx, {"T", "U", "V", "W"})));
    EXPECT_FALSE(is_fixed_subset(rx, id(rx, "u"), ids(rx, {"T", "U", "u"})));
}

TEST(MaxFixedSubset, Examples) {
    EXPECT_TRUE(max_fixed_subset(cycle(5), 0).empty());
    auto rx = restrictor_example();
    EXPECT_EQ(max_fixed_subset(rx, id(rx, "u")), ids(rx, {"T", "U", "V", "W"}));
    EXPECT_EQ(max_fixed_subset(rx, id(rx, "v")), ids(rx, {"T", "U", "V", "W"}));
}

TEST(MaxFixedSubset, StarCentreByExhaustion) {
    Analysis an(star(3));
    auto fixed = oracle::exhaustive_fixed_subsets(an, 0);
    VertexSet biggest;
    for (const auto& z : fixed)
        if (z.size() > biggest.size()) biggest = z;
    EXPECT_EQ(biggest, (VertexSet{1, 2, 3}));
    EXPECT_EQ(max_fixed_subset(an, 0), biggest);
}

TEST(MaxFixedSubset, ContainsEveryFixedSubset) {
    std::mt19937_64 rng(13);
    for (int i = 0; i < 150; ++i) {
        std::uniform_int_distribution<std::size_t> order(1, 9);
        Analysis an(oracle::random_graph(order(rng), 0.55, rng));
        for (const auto& c : an.classes().classes)
            EXPECT_TRUE(oracle::fixed_subsets_consistent(an, c[0])) << emit_graph6(an.graph());
    }
}

TEST(FixedSubset, AgreesWithBruteForceIsomorphisms) {
    // is_fixed_subset quantifies over generators; check against every isomorphism explicitly.
    std::mt19937_64 rng(17);
    for (int i = 0; i < 80; ++i) {
        Analysis an(oracle::random_graph(7, 0.5, rng));
        const auto& g = an.graph();
        for (const auto& cls : an.classes().classes) {
            Vertex v = cls[0];
            auto base = an.class_common_neighbourhood(v);
            std::vector<VertexMap> maps;
            for (Vertex a : cls)
                for (Vertex b : cls) {
                    auto va = induced_neighbourhood(g, a), vb = induced_neighbourhood(g, b);
                    for (const auto& phi : oracle::brute_isomorphisms(va.graph, vb.graph)) {
                        VertexMap m(g.order());
                        for (Vertex x = 0; x < va.back_map.size(); ++x) m.set(va.back_map[x], vb.back_map[phi(x)]);
                        maps.push_back(std::move(m));
                    }
                }
            for (std::uint64_t mask = 0; mask < (1u << base.size()); ++mask) {
                std::vector<Vertex> zv;
                for (std::size_t b = 0; b < base.size(); ++b)
                    if ((mask >> b) & 1U) zv.push_back(base[b]);
                VertexSet z(zv);
                bool fixed = std::all_of(maps.begin(), maps.end(), [&](const auto& m) { return m.maps_onto(z, z); });
                EXPECT_EQ(is_fixed_subset(an, v, z), fixed) << emit_graph6(g);
            }
        }
    }
}

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fixtures.hpp"
#include "nbhd/automorphism.hpp"
#include "nbhd/error.hpp"
#include "nbhd/oracle.hpp"
#include "nbhd/permutation.hpp"

using namespace nbhd;
using namespace fixtures;

namespace {

std::vector<Permutation> cyclic_action(std::size_t n) {
    std::vector<Permutation> out;
    for (std::size_t k = 0; k < n; ++k) {
        std::vector<Vertex> img(n);
        for (Vertex x = 0; x < n; ++x) img[x] = static_cast<Vertex>((x + k) % n);
        out.emplace_back(img);
    }
    return out;
}

// Left-regular action of a group given as a table.
std::vector<Permutation> left_regular(const std::vector<std::vector<Vertex>>& table) {
    std::vector<Permutation> out;
    for (const auto& row : table) out.emplace_back(row);
    return out;
}

std::vector<Permutation> symmetric_group(std::size_t n) {
    std::vector<Vertex> img(n);
    std::iota(img.begin(), img.end(), Vertex{0});
    std::vector<Permutation> out;
    do out.emplace_back(img);
    while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace

TEST(PermProfile, Examples) {
    auto id = perm_profile(Permutation::identity(4));
    EXPECT_EQ(id.order, 1u);
    EXPECT_EQ(id.cycle_lengths, (std::vector<std::size_t>{1, 1, 1, 1}));
    EXPECT_TRUE(id.is_semiregular);
    EXPECT_FALSE(id.is_fpf_involution);

    auto dbl = perm_profile(Permutation::from_cycles(4, {{0, 1}, {2, 3}}));
    EXPECT_EQ(dbl.order, 2u);
    EXPECT_TRUE(dbl.is_semiregular);
    EXPECT_TRUE(dbl.is_fpf_involution);

    auto part = perm_profile(Permutation::from_cycles(3, {{0, 1}}));
    EXPECT_EQ(part.order, 2u);
    EXPECT_FALSE(part.is_semiregular);
    EXPECT_FALSE(part.is_fpf_involution);
}

TEST(Permutation, CompositionAndInverse) {
    auto a = Permutation::from_cycles(4, {{0, 1, 2}});
    auto b = Permutation::from_cycles(4, {{2, 3}});
    EXPECT_EQ((a * b)(2), a(b(2)));
    EXPECT_TRUE((a * a.inverse()).is_identity());
    EXPECT_EQ(a.to_cycle_string(), "(0 1 2)");
    EXPECT_EQ(Permutation::identity(3).to_cycle_string(), "()");
    EXPECT_THROW(Permutation(std::vector<Vertex>{0, 0}), InvalidArgument);
    EXPECT_EQ(uniform_cycle_length(Permutation::from_cycles(4, {{0, 1}, {2, 3}})), 2u);
    EXPECT_EQ(uniform_cycle_length(Permutation::from_cycles(3, {{0, 1}})), 0u);
}

TEST(RegularAction, RegularExamples) {
    auto c4 = cyclic_action(4);
    auto r = is_regular_action(c4, 4);
    EXPECT_TRUE(r.stabilisers_trivial && r.order_equals_degree && r.unique_transporter && r.all_semiregular);
    EXPECT_TRUE(r.agree);

    auto klein = left_regular({{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}});
    auto k = is_regular_action(klein, 4);
    EXPECT_TRUE(k.stabilisers_trivial && k.order_equals_degree && k.unique_transporter && k.all_semiregular);
    EXPECT_TRUE(k.agree);
}

TEST(RegularAction, SymmetricGroupOnThreePoints) {
    auto s3 = symmetric_group(3);
    auto r = is_regular_action(s3, 3);
    EXPECT_FALSE(r.stabilisers_trivial);
    EXPECT_FALSE(r.order_equals_degree);
    EXPECT_FALSE(r.unique_transporter);
    EXPECT_FALSE(r.all_semiregular);
    EXPECT_TRUE(r.agree);
}

TEST(RegularAction, RejectsIntransitiveSets) {
    std::vector<Permutation> trivial{Permutation::identity(3)};
    EXPECT_THROW(is_regular_action(trivial, 3), InvalidArgument);
    std::vector<Permutation> not_closed{Permutation::identity(3), Permutation::from_cycles(3, {{0, 1, 2}})};
    EXPECT_THROW(is_regular_action(not_closed, 3), InvalidArgument);
}

TEST(AutomorphismGroup, Examples) {
    EXPECT_EQ(automorphism_group(path(4)).group_order, 2u);
    EXPECT_EQ(automorphism_group(cycle(5)).group_order, 10u);
    EXPECT_EQ(automorphism_group(sd16_link()).group_order, 1u);
    EXPECT_EQ(automorphism_group(Graph(0)).group_order, 1u);
    EXPECT_EQ(automorphism_group(petersen()).group_order, 120u);
    EXPECT_EQ(automorphism_group(complete(14)).group_order, 87178291200u);
}

TEST(AutomorphismGroup, MatchesBruteForceOnExamples) {
    for (const auto& g : {path(4), cycle(5), sd16_link(), star(3), complete(4), cycle(6)})
        EXPECT_TRUE(oracle::automorphisms_match(g)) << emit_graph6(g);
    EXPECT_EQ(oracle::brute_automorphisms(sd16_link()).size(), 1u);
}

TEST(AutomorphismGroup, GeneratorsAreAutomorphisms) {
    auto g = petersen();
    for (const auto& p : automorphism_group(g).generators) EXPECT_TRUE(is_automorphism(g, p));
}

TEST(IsAsymmetric, Examples) {
    EXPECT_TRUE(is_asymmetric(Graph(1)));
    EXPECT_FALSE(is_asymmetric(complete(2)));
    EXPECT_TRUE(is_asymmetric(sd16_link()));
    EXPECT_TRUE(is_asymmetric(restrictor_example()));
}

TEST(CanonicalForm, InvariantUnderRelabelling) {
    std::mt19937_64 rng(7);
    auto c5 = cycle(5);
    auto form = canonical_form(c5);
    for (int i = 0; i < 20; ++i) {
        auto p = oracle::random_permutation(5, rng);
        EXPECT_EQ(canonical_form(relabel(c5, p.image())), form);
    }
}

TEST(CanonicalForm, SeparatesPathFromStar) {
    EXPECT_NE(canonical_form(path(4)), canonical_form(star(3)));
    EXPECT_TRUE(oracle::brute_isomorphisms(path(4), star(3)).empty());
}

TEST(CanonicalForm, ParsesBackToSameGraph) {
    EXPECT_EQ(parse_graph6(canonical_form(complete(3))), complete(3));
}

TEST(AllIsomorphisms, Examples) {
    auto k3 = all_isomorphisms(complete(3), complete(3));
    ASSERT_TRUE(k3);
    EXPECT_EQ(k3->size(), 6u);

    EXPECT_FALSE(all_isomorphisms(path(4), star(3)));

    std::mt19937_64 rng(11);
    auto c5 = cycle(5);
    auto moved = relabel(c5, oracle::random_permutation(5, rng).image());
    auto fam = all_isomorphisms(c5, moved);
    ASSERT_TRUE(fam);
    EXPECT_EQ(fam->size(), 10u);
    auto members = fam->members();
    auto brute = oracle::brute_isomorphisms(c5, moved);
    std::sort(members.begin(), members.end());
    std::sort(brute.begin(), brute.end());
    EXPECT_EQ(members, brute);
}

TEST(FpfInvolution, Examples) {
    EXPECT_TRUE(has_fpf_involution_automorphism(cycle(4)));
    EXPECT_FALSE(has_fpf_involution_automorphism(cycle(5)));
    EXPECT_TRUE(has_fpf_involution_automorphism(path(4)));
    EXPECT_FALSE(has_fpf_involution_automorphism(path(3)));
    EXPECT_TRUE(has_fpf_involution_automorphism(path(3), InvolutionReading::any_involution));
    EXPECT_TRUE(has_fpf_involution_automorphism(Graph(0)));
}

TEST(FpfInvolution, MatchesBruteForceOnSmallGraphs) {
    for (std::size_t n = 0; n <= 5; ++n)
        for (const auto& g : oracle::brute_iso_classes(n))
            EXPECT_EQ(has_fpf_involution_automorphism(g), oracle::brute_has_fpf_involution(g)) << emit_graph6(g);
}

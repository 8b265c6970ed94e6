#ifndef NBHD_STRUCTURE_HPP
#define NBHD_STRUCTURE_HPP

#include <algorithm>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "nbhd/automorphism.hpp"
#include "nbhd/error.hpp"
#include "nbhd/graph.hpp"

namespace nbhd {

/// Vertices grouped by isomorphism type of their induced neighbourhood.
struct ClassPartition {
    std::vector<VertexSet> classes;
    std::vector<std::string> class_key;
    std::vector<std::size_t> class_of;

    const VertexSet& class_containing(Vertex v) const { return classes[class_of[v]]; }
};

/// A map defined on a subset of parent vertex ids.
class VertexMap {
public:
    static constexpr Vertex kNone = UINT32_MAX;

    VertexMap() = default;
    explicit VertexMap(std::size_t n) : img_(n, kNone) {}

    void set(Vertex x, Vertex y) { img_[x] = y; }
    Vertex operator()(Vertex x) const { return img_[x]; }
    bool defined(Vertex x) const { return img_[x] != kNone; }

    /// True when every member of s is mapped, and the image is exactly t.
    bool maps_onto(const VertexSet& s, const VertexSet& t) const {
        if (s.size() != t.size()) return false;
        std::vector<Vertex> image;
        image.reserve(s.size());
        for (Vertex x : s) {
            if (!defined(x)) return false;
            image.push_back(img_[x]);
        }
        return VertexSet(std::move(image)) == t;
    }

    VertexMap inverse() const {
        VertexMap inv(img_.size());
        for (Vertex x = 0; x < img_.size(); ++x)
            if (defined(x)) inv.set(img_[x], x);
        return inv;
    }

    /// The restriction to s as a permutation of positions 0..|s|-1; s must map onto itself.
    Permutation restrict_to(const VertexSet& s) const {
        std::vector<Vertex> img(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) {
            auto it = std::lower_bound(s.begin(), s.end(), img_[s[i]]);
            if (!defined(s[i]) || it == s.end() || *it != img_[s[i]])
                throw InvariantViolation("restriction target is not invariant");
            img[i] = static_cast<Vertex>(it - s.begin());
        }
        return Permutation(std::move(img));
    }

private:
    std::vector<Vertex> img_;
};

/// Per-graph cache of induced neighbourhoods, their canonical labelings and the ~ classes.
class Analysis {
public:
    explicit Analysis(Graph g) : g_(std::move(g)) {
        const std::size_t n = g_.order();
        local_.reserve(n);
        std::map<std::string, std::size_t> key_index;
        parts_.class_of.assign(n, 0);
        for (Vertex v = 0; v < n; ++v) {
            auto view = induced_neighbourhood(g_, v);
            auto canon = canonical_labeling(view.graph);
            auto [it, fresh] = key_index.emplace(canon.form, parts_.classes.size());
            if (fresh) {
                parts_.classes.emplace_back();
                parts_.class_key.push_back(canon.form);
            }
            parts_.class_of[v] = it->second;
            local_.push_back({std::move(view), std::move(canon)});
        }
        std::vector<std::vector<Vertex>> members(parts_.classes.size());
        for (Vertex v = 0; v < n; ++v) members[parts_.class_of[v]].push_back(v);
        for (std::size_t c = 0; c < members.size(); ++c) parts_.classes[c] = VertexSet(members[c]);
        asymmetric_ = is_asymmetric(g_);
    }

    const Graph& graph() const noexcept { return g_; }
    const ClassPartition& classes() const noexcept { return parts_; }
    const VertexSet& class_of(Vertex v) const { return parts_.class_containing(v); }

    const SubgraphView& neighbourhood_view(Vertex v) const { return local_[v].view; }
    const CanonicalLabeling& neighbourhood_labeling(Vertex v) const { return local_[v].canon; }

    bool asymmetric() const noexcept { return asymmetric_; }

    /// One isomorphism <N(v1)> -> <N(v2)> in parent ids; v1 and v2 must share a class.
    VertexMap base_isomorphism(Vertex v1, Vertex v2) const {
        if (parts_.class_of[v1] != parts_.class_of[v2])
            throw InvalidArgument("neighbourhoods of the two vertices are not isomorphic");
        const auto& a = local_[v1];
        const auto& b = local_[v2];
        VertexMap m(g_.order());
        for (std::size_t x = 0; x < a.view.back_map.size(); ++x) {
            Vertex pos = a.canon.position[x];
            m.set(a.view.back_map[x], b.view.back_map[b.canon.order[pos]]);
        }
        return m;
    }

    /// Generators of Aut(<N(v)>) as maps on parent ids.
    std::vector<VertexMap> neighbourhood_automorphisms(Vertex v) const {
        const auto& loc = local_[v];
        std::vector<VertexMap> out;
        for (const auto& p : loc.canon.aut.generators) {
            VertexMap m(g_.order());
            for (std::size_t x = 0; x < loc.view.back_map.size(); ++x)
                m.set(loc.view.back_map[x], loc.view.back_map[p(static_cast<Vertex>(x))]);
            out.push_back(std::move(m));
        }
        return out;
    }

    /// Maps whose compositions give every isomorphism between neighbourhoods of members of [v]:
    /// star maps from the class representative and back, plus each member's automorphism
    /// generators.
    std::vector<VertexMap> class_isomorphism_generators(Vertex v) const {
        const auto& cls = class_of(v);
        Vertex rep = cls[0];
        std::vector<VertexMap> out;
        for (Vertex w : cls) {
            if (w != rep) {
                auto m = base_isomorphism(rep, w);
                out.push_back(m.inverse());
                out.push_back(std::move(m));
            }
            auto gens = neighbourhood_automorphisms(w);
            out.insert(out.end(), gens.begin(), gens.end());
        }
        return out;
    }

    /// Intersection of N(w) over all w in [v].
    VertexSet class_common_neighbourhood(Vertex v) const {
        return common_neighbourhood(g_, class_of(v));
    }

private:
    struct Local {
        SubgraphView view;
        CanonicalLabeling canon;
    };

    Graph g_;
    std::vector<Local> local_;
    ClassPartition parts_;
    bool asymmetric_ = false;
};

inline ClassPartition classify_vertices(const Graph& g) { return Analysis(g).classes(); }

/// All k-subsets inducing a complete subgraph, in lexicographic order.
inline std::vector<VertexSet> cliques_of_order(const Graph& g, std::size_t k) {
    if (k < 1 || k > g.order())
        throw InvalidArgument("clique order " + std::to_string(k) + " out of range 1.." +
                              std::to_string(g.order()));
    std::vector<VertexSet> out;
    std::vector<Vertex> current;
    auto extend = [&](auto&& self, const Bitset& candidates) -> void {
        if (current.size() == k) {
            out.emplace_back(current);
            return;
        }
        candidates.for_each([&](Vertex v) {
            Bitset next = candidates;
            next &= g.row(v);
            // keep only vertices after v so each clique is produced once
            for (Vertex w = 0; w <= v; ++w) next.reset(w);
            if (current.size() + 1 + next.count() < k) return;
            current.push_back(v);
            self(self, next);
            current.pop_back();
        });
    };
    Bitset all(g.order());
    for (Vertex v = 0; v < g.order(); ++v) all.set(v);
    extend(extend, all);
    return out;
}

enum class Uniqueness { iso_unique, count_unique, none };

inline const char* to_string(Uniqueness u) {
    switch (u) {
        case Uniqueness::iso_unique: return "iso-unique";
        case Uniqueness::count_unique: return "count-unique";
        case Uniqueness::none: return "none";
    }
    return "none";
}

struct CliqueWitness {
    VertexSet members;
    VertexSet common;
    Uniqueness uniqueness = Uniqueness::none;
};

enum class UniquenessMode { iso, count };

/// Cliques of order k whose common neighbourhood is unlike that of every other order-k clique,
/// up to isomorphism (iso) or by cardinality (count).
inline std::vector<CliqueWitness> unique_neighbourhood_cliques(const Graph& g, std::size_t k,
                                                               UniquenessMode mode) {
    std::vector<CliqueWitness> all;
    std::vector<std::string> keys;
    std::map<std::string, std::size_t> freq;
    for (auto& s : cliques_of_order(g, k)) {
        auto common = common_neighbourhood(g, s);
        std::string key = mode == UniquenessMode::count
                              ? std::to_string(common.size())
                              : canonical_form(induced_subgraph(g, common).graph);
        ++freq[key];
        keys.push_back(key);
        all.push_back({std::move(s), std::move(common), Uniqueness::none});
    }
    std::vector<CliqueWitness> out;
    for (std::size_t i = 0; i < all.size(); ++i) {
        if (freq[keys[i]] != 1) continue;
        all[i].uniqueness =
            mode == UniquenessMode::count ? Uniqueness::count_unique : Uniqueness::iso_unique;
        out.push_back(std::move(all[i]));
    }
    return out;
}

/// Whether clique s confines the orbit of a transporting automorphism: every class meeting s lies
/// inside s, and every isomorphism between neighbourhoods of class members carries s-v1 onto s-v2.
inline bool is_orbit_restrictor(const Analysis& an, const VertexSet& s) {
    const auto& g = an.graph();
    for (Vertex v : s) g.check_vertex(v);
    if (s.empty()) throw InvalidArgument("orbit-restrictor candidate is empty");
    if (!is_clique(g, s)) throw InvalidArgument("orbit-restrictor candidate is not a clique");
    for (Vertex v : s)
        if (!an.class_of(v).is_subset_of(s)) return false;
    for (Vertex v2 : s) {
        auto rest2 = s.without(v2);
        for (const auto& sigma : an.neighbourhood_automorphisms(v2))
            if (!sigma.maps_onto(rest2, rest2)) return false;
        for (Vertex v1 : an.class_of(v2))
            if (!an.base_isomorphism(v1, v2).maps_onto(s.without(v1), rest2)) return false;
    }
    return true;
}

inline bool is_orbit_restrictor(const Graph& g, const VertexSet& s) {
    return is_orbit_restrictor(Analysis(g), s);
}

/// Whether z lies in the common neighbourhood of [v] and is carried onto itself by every
/// isomorphism between neighbourhoods of members of [v].
inline bool is_fixed_subset(const Analysis& an, Vertex v, const VertexSet& z) {
    an.graph().check_vertex(v);
    if (!z.is_subset_of(an.class_common_neighbourhood(v))) return false;
    for (const auto& m : an.class_isomorphism_generators(v))
        if (!m.maps_onto(z, z)) return false;
    return true;
}

inline bool is_fixed_subset(const Graph& g, Vertex v, const VertexSet& z) {
    return is_fixed_subset(Analysis(g), v, z);
}

/// The largest [v]-fixed subset F(X,v), by deleting members whose image leaves the candidate.
inline VertexSet max_fixed_subset(const Analysis& an, Vertex v) {
    an.graph().check_vertex(v);
    auto maps = an.class_isomorphism_generators(v);
    Bitset keep(an.graph().order());
    for (Vertex x : an.class_common_neighbourhood(v)) keep.set(x);
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& m : maps) {
            keep.for_each([&](Vertex x) {
                if (!m.defined(x) || !keep.test(m(x))) {
                    keep.reset(x);
                    changed = true;
                }
            });
        }
    }
    return VertexSet::from_bitset(keep);
}

inline VertexSet max_fixed_subset(const Graph& g, Vertex v) {
    return max_fixed_subset(Analysis(g), v);
}

}  // namespace nbhd

#endif  // NBHD_STRUCTURE_HPP

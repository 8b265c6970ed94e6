#ifndef NBHD_AUTOMORPHISM_HPP
#define NBHD_AUTOMORPHISM_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "nbhd/graph.hpp"
#include "nbhd/graph_io.hpp"
#include "nbhd/permutation.hpp"

namespace nbhd {

/// Ordered partition of the vertex set; each inner vector is one cell.
using Cells = std::vector<std::vector<Vertex>>;

namespace detail {

/// Refines cells until equitable: every vertex of a cell has the same number of neighbours in
/// every other cell. Splits are ordered by neighbour count, so the result depends only on the
/// input ordering of cells and not on vertex names.
inline void refine(const Graph& g, Cells& cells) {
    const std::size_t n = g.order();
    bool changed = true;
    std::vector<std::size_t> counts(n, 0);
    while (changed) {
        changed = false;
        for (std::size_t s = 0; s < cells.size() && !changed; ++s) {
            Bitset mask(n);
            for (Vertex v : cells[s]) mask.set(v);
            for (std::size_t x = 0; x < cells.size(); ++x) {
                auto& cell = cells[x];
                if (cell.size() < 2) continue;
                bool uniform = true;
                for (Vertex v : cell) {
                    counts[v] = g.row(v).count_and(mask);
                    uniform = uniform && counts[v] == counts[cell.front()];
                }
                if (uniform) continue;
                std::map<std::size_t, std::vector<Vertex>> groups;
                for (Vertex v : cell) groups[counts[v]].push_back(v);
                Cells pieces;
                for (auto& [count, members] : groups) pieces.push_back(std::move(members));
                cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
                cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x),
                             std::make_move_iterator(pieces.begin()),
                             std::make_move_iterator(pieces.end()));
                changed = true;
                break;
            }
        }
    }
}

/// Label-free summary of an equitable partition: cell sizes and the quotient matrix.
inline std::vector<std::uint32_t> trace(const Graph& g, const Cells& cells) {
    std::vector<std::uint32_t> t;
    t.reserve(cells.size() * (cells.size() + 1));
    std::vector<std::uint32_t> cell_of(g.order());
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (Vertex v : cells[i]) cell_of[v] = static_cast<std::uint32_t>(i);
    for (const auto& cell : cells) {
        t.push_back(static_cast<std::uint32_t>(cell.size()));
        std::vector<std::uint32_t> row(cells.size(), 0);
        g.row(cell.front()).for_each([&](Vertex w) { ++row[cell_of[w]]; });
        t.insert(t.end(), row.begin(), row.end());
    }
    return t;
}

/// First smallest non-singleton cell, or -1 when the partition is discrete.
inline long target_cell(const Cells& cells) {
    long best = -1;
    for (std::size_t i = 0; i < cells.size(); ++i)
        if (cells[i].size() > 1 &&
            (best < 0 || cells[i].size() < cells[static_cast<std::size_t>(best)].size()))
            best = static_cast<long>(i);
    return best;
}

inline Cells individualize(const Graph& g, const Cells& cells, std::size_t cell, Vertex v) {
    Cells out = cells;
    auto& target = out[cell];
    target.erase(std::find(target.begin(), target.end(), v));
    out.insert(out.begin() + static_cast<std::ptrdiff_t>(cell), std::vector<Vertex>{v});
    refine(g, out);
    return out;
}

inline std::vector<Vertex> flatten(const Cells& cells) {
    std::vector<Vertex> out;
    for (const auto& c : cells) out.insert(out.end(), c.begin(), c.end());
    return out;
}

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

private:
    std::vector<std::size_t> parent_;
};

inline std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b, bool& saturated) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) {
        saturated = true;
        return UINT64_MAX;
    }
    return r;
}

/// One root-to-leaf path of the search tree with the pointwise stabiliser chain along it.
/// generators_from(j) generates the stabiliser of the node at depth j.
struct StabiliserChain {
    std::vector<Cells> path;
    std::vector<std::vector<std::uint32_t>> traces;
    std::vector<std::size_t> target;
    std::vector<Vertex> base;
    std::vector<std::vector<Permutation>> level_gens;
    std::vector<std::size_t> orbit_sizes;
    std::vector<Vertex> leaf;

    std::vector<Permutation> generators_from(std::size_t level) const {
        std::vector<Permutation> out;
        for (std::size_t j = level; j < level_gens.size(); ++j)
            out.insert(out.end(), level_gens[j].begin(), level_gens[j].end());
        return out;
    }
};

class ChainBuilder {
public:
    explicit ChainBuilder(const Graph& g) : g_(g) {}

    StabiliserChain build(Cells root) const {
        StabiliserChain ch;
        ch.path.push_back(std::move(root));
        ch.traces.push_back(trace(g_, ch.path.back()));
        for (long t = target_cell(ch.path.back()); t >= 0; t = target_cell(ch.path.back())) {
            auto tc = static_cast<std::size_t>(t);
            Vertex v = ch.path.back()[tc].front();
            ch.target.push_back(tc);
            ch.base.push_back(v);
            ch.path.push_back(individualize(g_, ch.path.back(), tc, v));
            ch.traces.push_back(trace(g_, ch.path.back()));
        }
        ch.leaf = flatten(ch.path.back());

        const std::size_t depth = ch.base.size();
        ch.level_gens.assign(depth, {});
        ch.orbit_sizes.assign(depth, 1);
        UnionFind orbits(g_.order());
        for (std::size_t j = depth; j-- > 0;) {
            const auto& cell = ch.path[j][ch.target[j]];
            for (Vertex w : cell) {
                if (orbits.find(w) == orbits.find(ch.base[j])) continue;
                auto child = individualize(g_, ch.path[j], ch.target[j], w);
                if (trace(g_, child) != ch.traces[j + 1]) continue;
                if (auto gamma = find_automorphism(ch, child, j + 1)) {
                    for (Vertex x = 0; x < g_.order(); ++x) orbits.unite(x, (*gamma)(x));
                    ch.level_gens[j].push_back(std::move(*gamma));
                }
            }
            std::size_t size = 0;
            for (Vertex w : cell)
                if (orbits.find(w) == orbits.find(ch.base[j])) ++size;
            ch.orbit_sizes[j] = size;
        }
        return ch;
    }

private:
    std::optional<Permutation> find_automorphism(const StabiliserChain& ch, const Cells& node,
                                                 std::size_t level) const {
        long t = target_cell(node);
        if (t < 0) {
            auto leaf = flatten(node);
            std::vector<Vertex> img(g_.order());
            for (std::size_t k = 0; k < leaf.size(); ++k) img[ch.leaf[k]] = leaf[k];
            Permutation p(std::move(img));
            if (is_automorphism(g_, p)) return p;
            return std::nullopt;
        }
        auto tc = static_cast<std::size_t>(t);
        for (Vertex x : node[tc]) {
            auto child = individualize(g_, node, tc, x);
            if (trace(g_, child) != ch.traces[level + 1]) continue;
            if (auto p = find_automorphism(ch, child, level + 1)) return p;
        }
        return std::nullopt;
    }

    const Graph& g_;
};

inline Cells unit_partition(const Graph& g) {
    Cells cells;
    if (g.order() > 0) {
        cells.emplace_back(g.order());
        std::iota(cells.front().begin(), cells.front().end(), Vertex{0});
    }
    refine(g, cells);
    return cells;
}

/// Upper-triangle adjacency bits of g under the ordering `order`, packed column-wise.
inline std::vector<std::uint64_t> certificate(const Graph& g, const std::vector<Vertex>& order) {
    const std::size_t n = order.size();
    std::vector<std::uint64_t> bits((n * (n == 0 ? 0 : n - 1) / 2 + 63) / 64 + 1, 0);
    std::size_t k = 0;
    for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 0; i < j; ++i, ++k)
            if (g.adjacent(order[i], order[j])) bits[k / 64] |= std::uint64_t{1} << (63 - k % 64);
    return bits;
}

}  // namespace detail

/// Automorphism group as generators plus exact order.
struct AutGroup {
    std::size_t degree = 0;
    std::vector<Permutation> generators;
    std::uint64_t group_order = 1;
    /// True when the order overflowed 64 bits; group_order then holds UINT64_MAX.
    bool order_saturated = false;

    /// All elements by closure; empty when more than cap would be produced.
    std::vector<Permutation> elements(std::size_t cap = 1'000'000) const {
        return group_elements(generators, degree, cap);
    }
};

namespace detail {

inline AutGroup group_of(const StabiliserChain& ch, std::size_t degree) {
    AutGroup grp;
    grp.degree = degree;
    grp.generators = ch.generators_from(0);
    for (auto s : ch.orbit_sizes) grp.group_order = saturating_mul(grp.group_order, s, grp.order_saturated);
    return grp;
}

}  // namespace detail

inline AutGroup automorphism_group(const Graph& g) {
    detail::ChainBuilder builder(g);
    return detail::group_of(builder.build(detail::unit_partition(g)), g.order());
}

inline bool is_asymmetric(const Graph& g) { return automorphism_group(g).group_order == 1; }

struct CanonicalLabeling {
    /// order[i] is the input vertex placed at canonical position i.
    std::vector<Vertex> order;
    /// position[v] is the canonical position of input vertex v.
    std::vector<Vertex> position;
    Graph graph;
    std::string form;
    AutGroup aut;
};

/// Canonical relabelling: the search-tree leaf with the largest adjacency certificate, with
/// subtrees pruned by orbits of the node stabiliser.
inline CanonicalLabeling canonical_labeling(const Graph& g) {
    detail::ChainBuilder builder(g);
    auto root = builder.build(detail::unit_partition(g));

    std::vector<std::uint64_t> best_cert;
    std::vector<Vertex> best_leaf;
    bool have_best = false;

    auto consider = [&](const std::vector<Vertex>& leaf) {
        auto cert = detail::certificate(g, leaf);
        if (!have_best || cert > best_cert) {
            best_cert = std::move(cert);
            best_leaf = leaf;
            have_best = true;
        }
    };

    auto explore = [&](auto&& self, const detail::StabiliserChain& ch) -> void {
        consider(ch.leaf);
        for (std::size_t j = 0; j < ch.base.size(); ++j) {
            auto gens = ch.generators_from(j);
            detail::UnionFind orbits(g.order());
            for (const auto& p : gens)
                for (Vertex x = 0; x < g.order(); ++x) orbits.unite(x, p(x));
            std::vector<std::size_t> done{orbits.find(ch.base[j])};
            for (Vertex w : ch.path[j][ch.target[j]]) {
                auto rep = orbits.find(w);
                if (std::find(done.begin(), done.end(), rep) != done.end()) continue;
                done.push_back(rep);
                auto child = detail::individualize(g, ch.path[j], ch.target[j], w);
                self(self, builder.build(std::move(child)));
            }
        }
    };
    explore(explore, root);

    CanonicalLabeling out;
    out.order = best_leaf;
    out.position.assign(g.order(), 0);
    for (std::size_t i = 0; i < best_leaf.size(); ++i) out.position[best_leaf[i]] = static_cast<Vertex>(i);
    out.graph = relabel(g, out.position);
    out.form = emit_graph6(out.graph);
    out.aut = detail::group_of(root, g.order());
    return out;
}

inline std::string canonical_form(const Graph& g) { return canonical_labeling(g).form; }

/// Every isomorphism a -> b, denoted as {sigma * base : sigma in Aut(b)}.
struct IsoFamily {
    Permutation base;
    AutGroup target_aut;

    std::uint64_t size() const noexcept { return target_aut.group_order; }

    /// Explicit members; empty when the family exceeds cap.
    std::vector<Permutation> members(std::size_t cap = 1'000'000) const {
        std::vector<Permutation> out;
        for (const auto& s : target_aut.elements(cap)) out.push_back(s * base);
        return out;
    }
};

inline std::optional<IsoFamily> all_isomorphisms(const CanonicalLabeling& a,
                                                 const CanonicalLabeling& b) {
    if (a.order.size() != b.order.size() || a.form != b.form) return std::nullopt;
    std::vector<Vertex> img(a.order.size());
    for (std::size_t i = 0; i < img.size(); ++i) img[a.order[i]] = b.order[i];
    return IsoFamily{Permutation(std::move(img)), b.aut};
}

inline std::optional<IsoFamily> all_isomorphisms(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return std::nullopt;
    return all_isomorphisms(canonical_labeling(a), canonical_labeling(b));
}

/// Which automorphisms count as a "product of transpositions".
enum class InvolutionReading {
    /// Every cycle has length exactly 2 (no fixed points). The default.
    fixed_point_free,
    /// Any automorphism of order 2; fixed points allowed. Experimental.
    any_involution,
};

/// Searches for an automorphism that is an involution in the chosen reading. The empty graph
/// carries the empty permutation, which counts vacuously.
inline bool has_fpf_involution_automorphism(
    const Graph& g, InvolutionReading reading = InvolutionReading::fixed_point_free) {
    const std::size_t n = g.order();
    const bool fpf = reading == InvolutionReading::fixed_point_free;
    if (n == 0) return true;
    if (fpf && n % 2 == 1) return false;

    std::vector<std::uint32_t> cell_of(n);
    auto cells = detail::unit_partition(g);
    for (std::size_t i = 0; i < cells.size(); ++i)
        for (Vertex v : cells[i]) cell_of[v] = static_cast<std::uint32_t>(i);

    constexpr Vertex kUnset = UINT32_MAX;
    std::vector<Vertex> sigma(n, kUnset);
    std::vector<Vertex> assigned;
    assigned.reserve(n);

    auto consistent = [&](Vertex x, Vertex y) {
        for (Vertex z : assigned) {
            if (g.adjacent(x, z) != g.adjacent(y, sigma[z])) return false;
            if (g.adjacent(y, z) != g.adjacent(x, sigma[z])) return false;
        }
        return true;
    };

    auto search = [&](auto&& self, Vertex from, bool moved) -> bool {
        Vertex x = from;
        while (x < n && sigma[x] != kUnset) ++x;
        if (x == n) return moved;
        for (Vertex y = x; y < n; ++y) {
            if (sigma[y] != kUnset || cell_of[y] != cell_of[x]) continue;
            if (y == x && fpf) continue;
            if (!consistent(x, y)) continue;
            sigma[x] = y;
            sigma[y] = x;
            assigned.push_back(x);
            if (y != x) assigned.push_back(y);
            if (self(self, x + 1, moved || y != x)) return true;
            assigned.pop_back();
            if (y != x) assigned.pop_back();
            sigma[x] = sigma[y] = kUnset;
        }
        return false;
    };
    return search(search, 0, false);
}

}  // namespace nbhd

#endif  // NBHD_AUTOMORPHISM_HPP

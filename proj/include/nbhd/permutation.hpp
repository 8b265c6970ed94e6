#ifndef NBHD_PERMUTATION_HPP
#define NBHD_PERMUTATION_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "nbhd/error.hpp"
#include "nbhd/graph.hpp"

namespace nbhd {

/// A bijection of 0..degree-1; image()[i] is where i goes.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
        std::vector<bool> hit(image_.size(), false);
        for (Vertex x : image_) {
            if (x >= image_.size() || hit[x]) throw InvalidArgument("image is not a bijection");
            hit[x] = true;
        }
    }

    static Permutation identity(std::size_t degree) {
        std::vector<Vertex> img(degree);
        std::iota(img.begin(), img.end(), Vertex{0});
        return Permutation(std::move(img), Unchecked{});
    }

    /// Builds from disjoint cycles; points not mentioned are fixed.
    static Permutation from_cycles(std::size_t degree,
                                   const std::vector<std::vector<Vertex>>& cycles) {
        auto p = identity(degree);
        for (const auto& c : cycles)
            for (std::size_t i = 0; i < c.size(); ++i) p.image_.at(c[i]) = c[(i + 1) % c.size()];
        return Permutation(std::move(p.image_));
    }

    std::size_t degree() const noexcept { return image_.size(); }
    Vertex operator()(Vertex x) const { return image_[x]; }
    const std::vector<Vertex>& image() const noexcept { return image_; }

    bool is_identity() const noexcept {
        for (std::size_t i = 0; i < image_.size(); ++i)
            if (image_[i] != i) return false;
        return true;
    }

    Permutation inverse() const {
        std::vector<Vertex> inv(image_.size());
        for (std::size_t i = 0; i < image_.size(); ++i) inv[image_[i]] = static_cast<Vertex>(i);
        return Permutation(std::move(inv), Unchecked{});
    }

    /// (a * b)(x) = a(b(x)): apply b first.
    friend Permutation operator*(const Permutation& a, const Permutation& b) {
        std::vector<Vertex> img(b.degree());
        for (std::size_t i = 0; i < img.size(); ++i) img[i] = a.image_[b.image_[i]];
        return Permutation(std::move(img), Unchecked{});
    }

    std::vector<std::vector<Vertex>> cycles() const {
        std::vector<std::vector<Vertex>> out;
        std::vector<bool> seen(image_.size(), false);
        for (Vertex s = 0; s < image_.size(); ++s) {
            if (seen[s]) continue;
            std::vector<Vertex> c;
            for (Vertex x = s; !seen[x]; x = image_[x]) {
                seen[x] = true;
                c.push_back(x);
            }
            out.push_back(std::move(c));
        }
        return out;
    }

    /// Cycle notation, fixed points omitted; the identity prints as "()".
    std::string to_cycle_string() const {
        std::string out;
        for (const auto& c : cycles()) {
            if (c.size() < 2) continue;
            out += '(';
            for (std::size_t i = 0; i < c.size(); ++i) {
                if (i) out += ' ';
                out += std::to_string(c[i]);
            }
            out += ')';
        }
        return out.empty() ? "()" : out;
    }

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    struct Unchecked {};
    Permutation(std::vector<Vertex> image, Unchecked) : image_(std::move(image)) {}

    std::vector<Vertex> image_;
};

struct PermProfile {
    std::uint64_t order = 1;
    std::vector<std::size_t> cycle_lengths;  // sorted ascending
    bool is_semiregular = true;
    bool is_fpf_involution = false;
};

inline PermProfile perm_profile(const Permutation& p) {
    PermProfile prof;
    for (const auto& c : p.cycles()) {
        prof.cycle_lengths.push_back(c.size());
        prof.order = std::lcm(prof.order, static_cast<std::uint64_t>(c.size()));
    }
    std::sort(prof.cycle_lengths.begin(), prof.cycle_lengths.end());
    const auto& lens = prof.cycle_lengths;
    prof.is_semiregular = lens.empty() || lens.front() == lens.back();
    // Vacuously true on zero points: the empty map has no fixed points and no long cycles.
    prof.is_fpf_involution = lens.empty() || (lens.front() == 2 && lens.back() == 2);
    return prof;
}

/// Length of the common cycle length when p is semiregular, 0 otherwise (or when degree is 0).
inline std::size_t uniform_cycle_length(const Permutation& p) {
    std::size_t len = 0;
    std::vector<bool> seen(p.degree(), false);
    for (Vertex s = 0; s < p.degree(); ++s) {
        if (seen[s]) continue;
        std::size_t l = 0;
        for (Vertex x = s; !seen[x]; x = p(x)) {
            seen[x] = true;
            ++l;
        }
        if (len == 0) len = l;
        else if (len != l) return 0;
    }
    return len;
}

inline bool is_automorphism(const Graph& g, const Permutation& p) {
    if (p.degree() != g.order()) return false;
    for (auto [u, v] : g.edges())
        if (!g.adjacent(p(u), p(v))) return false;
    return true;
}

struct RegularityReport {
    bool stabilisers_trivial = false;
    bool order_equals_degree = false;
    bool unique_transporter = false;
    bool all_semiregular = false;
    bool agree = false;
};

/// Evaluates the four equivalent characterisations of a regular transitive action independently.
inline RegularityReport is_regular_action(std::span<const Permutation> perms, std::size_t degree) {
    std::set<Permutation> group(perms.begin(), perms.end());
    if (group.empty()) throw InvalidArgument("empty permutation set");
    for (const auto& p : group)
        if (p.degree() != degree) throw InvalidArgument("permutation degree mismatch");
    for (const auto& a : group) {
        if (!group.count(a.inverse())) throw InvalidArgument("set is not closed under inverse");
        for (const auto& b : group)
            if (!group.count(a * b)) throw InvalidArgument("set is not closed under composition");
    }
    for (Vertex y = 0; y < degree; ++y) {
        bool reached = std::any_of(group.begin(), group.end(), [&](const auto& p) { return p(0) == y; });
        if (!reached) throw InvalidArgument("action is not transitive");
    }

    RegularityReport r;
    r.stabilisers_trivial = true;
    for (Vertex x = 0; x < degree; ++x)
        for (const auto& p : group)
            if (p(x) == x && !p.is_identity()) r.stabilisers_trivial = false;

    r.order_equals_degree = group.size() == degree;

    r.unique_transporter = true;
    for (Vertex x = 0; x < degree; ++x) {
        std::map<Vertex, std::size_t> hits;
        for (const auto& p : group) ++hits[p(x)];
        for (const auto& [y, count] : hits)
            if (count != 1) r.unique_transporter = false;
    }

    r.all_semiregular = std::all_of(group.begin(), group.end(),
                                    [](const auto& p) { return perm_profile(p).is_semiregular; });

    r.agree = r.stabilisers_trivial == r.order_equals_degree &&
              r.order_equals_degree == r.unique_transporter &&
              r.unique_transporter == r.all_semiregular;
    return r;
}

/// Closure of a generating set under composition, stopping once more than cap elements exist.
/// Returns an empty vector when the cap is exceeded.
inline std::vector<Permutation> group_elements(std::span<const Permutation> gens, std::size_t degree,
                                               std::size_t cap) {
    std::set<Permutation> seen{Permutation::identity(degree)};
    std::vector<Permutation> frontier{Permutation::identity(degree)};
    while (!frontier.empty()) {
        std::vector<Permutation> next;
        for (const auto& e : frontier)
            for (const auto& g : gens) {
                auto prod = g * e;
                if (seen.insert(prod).second) {
                    if (seen.size() > cap) return {};
                    next.push_back(std::move(prod));
                }
            }
        frontier = std::move(next);
    }
    return {seen.begin(), seen.end()};
}

}  // namespace nbhd

#endif  // NBHD_PERMUTATION_HPP

#ifndef NBHD_GRAPH_HPP
#define NBHD_GRAPH_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <queue>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nbhd/error.hpp"

namespace nbhd {

using Vertex = std::uint32_t;

/// Fixed-size dynamic bitset; one word per 64 vertices.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    std::size_t count() const noexcept {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    std::size_t count_and(const Bitset& other) const noexcept {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }

    bool none() const noexcept {
        return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
    }

    Bitset& operator&=(const Bitset& other) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& other) noexcept {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            auto w = words_[i];
            while (w != 0) {
                f(static_cast<Vertex>(i * 64 + static_cast<std::size_t>(std::countr_zero(w))));
                w &= w - 1;
            }
        }
    }

    friend bool operator==(const Bitset&, const Bitset&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Sorted, duplicate-free set of vertex ids of one graph.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<Vertex> vs) : VertexSet(std::vector<Vertex>(vs)) {}
    explicit VertexSet(std::vector<Vertex> vs) : members_(std::move(vs)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }

    static VertexSet from_bitset(const Bitset& b) {
        VertexSet s;
        b.for_each([&](Vertex v) { s.members_.push_back(v); });
        return s;
    }

    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(Vertex v) const noexcept {
        return std::binary_search(members_.begin(), members_.end(), v);
    }
    bool is_subset_of(const VertexSet& other) const {
        return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                             members_.end());
    }
    VertexSet without(Vertex v) const {
        VertexSet s = *this;
        s.members_.erase(std::remove(s.members_.begin(), s.members_.end(), v), s.members_.end());
        return s;
    }
    VertexSet intersect(const VertexSet& other) const {
        VertexSet s;
        std::set_intersection(members_.begin(), members_.end(), other.members_.begin(),
                              other.members_.end(), std::back_inserter(s.members_));
        return s;
    }

    Vertex operator[](std::size_t i) const { return members_[i]; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }
    std::span<const Vertex> span() const noexcept { return members_; }
    const std::vector<Vertex>& vector() const noexcept { return members_; }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;
    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
    std::vector<Vertex> members_;
};

/// Finite simple graph on dense vertex ids 0..order-1, adjacency held as bit rows.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t order) : order_(order), rows_(order, Bitset(order)) {}

    Graph(std::size_t order, std::span<const std::pair<Vertex, Vertex>> edges) : Graph(order) {
        for (auto [u, v] : edges) add_edge(u, v);
    }
    Graph(std::size_t order, std::initializer_list<std::pair<Vertex, Vertex>> edges)
        : Graph(order, std::span<const std::pair<Vertex, Vertex>>(edges.begin(), edges.size())) {}

    std::size_t order() const noexcept { return order_; }

    void add_edge(Vertex u, Vertex v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw InvalidArgument("self-loop on vertex " + std::to_string(u));
        rows_[u].set(v);
        rows_[v].set(u);
    }

    bool adjacent(Vertex u, Vertex v) const noexcept { return rows_[u].test(v); }
    const Bitset& row(Vertex v) const noexcept { return rows_[v]; }
    std::size_t valency(Vertex v) const noexcept { return rows_[v].count(); }

    std::size_t edge_count() const noexcept {
        std::size_t twice = 0;
        for (const auto& r : rows_) twice += r.count();
        return twice / 2;
    }

    std::vector<std::pair<Vertex, Vertex>> edges() const {
        std::vector<std::pair<Vertex, Vertex>> out;
        for (Vertex u = 0; u < order_; ++u)
            rows_[u].for_each([&](Vertex v) {
                if (u < v) out.emplace_back(u, v);
            });
        return out;
    }

    bool has_labels() const noexcept { return !labels_.empty(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }
    void set_labels(std::vector<std::string> labels) {
        if (!labels.empty() && labels.size() != order_)
            throw InvalidArgument("label count does not match graph order");
        labels_ = std::move(labels);
    }
    /// Display name of a vertex: its input label if any, else its id.
    std::string name(Vertex v) const {
        return has_labels() ? labels_[v] : std::to_string(v);
    }

    void check_vertex(Vertex v) const {
        if (v >= order_)
            throw InvalidArgument("vertex " + std::to_string(v) + " out of range for order " +
                                  std::to_string(order_));
    }

    /// Adjacency equality; labels are not compared.
    friend bool operator==(const Graph& a, const Graph& b) {
        return a.order_ == b.order_ && a.rows_ == b.rows_;
    }

private:
    std::size_t order_ = 0;
    std::vector<Bitset> rows_;
    std::vector<std::string> labels_;
};

/// An induced subgraph re-indexed 0..k-1 together with the map back to the parent.
struct SubgraphView {
    Graph graph;
    std::vector<Vertex> back_map;

    /// Local id of a parent vertex, or -1 when absent.
    long local_of(Vertex parent) const {
        auto it = std::lower_bound(back_map.begin(), back_map.end(), parent);
        if (it == back_map.end() || *it != parent) return -1;
        return static_cast<long>(it - back_map.begin());
    }
};

inline VertexSet neighbourhood(const Graph& g, Vertex v) {
    g.check_vertex(v);
    return VertexSet::from_bitset(g.row(v));
}

inline SubgraphView induced_subgraph(const Graph& g, const VertexSet& s) {
    for (Vertex v : s) g.check_vertex(v);
    SubgraphView view{Graph(s.size()), s.vector()};
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (g.adjacent(s[i], s[j]))
                view.graph.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    if (g.has_labels()) {
        std::vector<std::string> labels;
        labels.reserve(s.size());
        for (Vertex v : s) labels.push_back(g.labels()[v]);
        view.graph.set_labels(std::move(labels));
    }
    return view;
}

inline SubgraphView induced_neighbourhood(const Graph& g, Vertex v) {
    return induced_subgraph(g, neighbourhood(g, v));
}

inline Bitset common_neighbourhood_bits(const Graph& g, const VertexSet& s) {
    if (s.empty()) throw InvalidArgument("common neighbourhood of an empty set");
    Bitset acc = g.row(s[0]);
    for (std::size_t i = 1; i < s.size(); ++i) acc &= g.row(s[i]);
    return acc;
}

/// Vertices adjacent to every member of s.
inline VertexSet common_neighbourhood(const Graph& g, const VertexSet& s) {
    for (Vertex v : s) g.check_vertex(v);
    return VertexSet::from_bitset(common_neighbourhood_bits(g, s));
}

inline bool is_clique(const Graph& g, const VertexSet& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        for (std::size_t j = i + 1; j < s.size(); ++j)
            if (!g.adjacent(s[i], s[j])) return false;
    return true;
}

inline bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    Bitset seen(g.order());
    std::queue<Vertex> todo;
    seen.set(0);
    todo.push(0);
    std::size_t reached = 1;
    while (!todo.empty()) {
        Vertex u = todo.front();
        todo.pop();
        g.row(u).for_each([&](Vertex w) {
            if (!seen.test(w)) {
                seen.set(w);
                ++reached;
                todo.push(w);
            }
        });
    }
    return reached == g.order();
}

struct GraphStats {
    std::size_t n = 0;
    std::size_t m = 0;
    std::vector<std::size_t> valencies;
    VertexSet complete_valency;
    bool is_clique = false;
    bool is_connected = false;
};

inline GraphStats graph_stats(const Graph& g) {
    GraphStats st;
    st.n = g.order();
    st.m = g.edge_count();
    std::vector<Vertex> complete;
    for (Vertex v = 0; v < st.n; ++v) {
        st.valencies.push_back(g.valency(v));
        if (st.valencies.back() + 1 == st.n) complete.push_back(v);
    }
    st.complete_valency = VertexSet(std::move(complete));
    st.is_clique = 2 * st.m == st.n * (st.n == 0 ? 0 : st.n - 1);
    st.is_connected = is_connected(g);
    return st;
}

/// The graph with vertex v renamed perm[v].
inline Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    Graph out(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(perm[u], perm[v]);
    return out;
}

}  // namespace nbhd

#endif  // NBHD_GRAPH_HPP

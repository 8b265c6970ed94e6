#pragma once

#include <fstream>
#include <iterator>
#include <string>

#include "nbhd/graph.hpp"
#include "nbhd/graph_io.hpp"

namespace fixtures {

using nbhd::Graph;
using nbhd::Vertex;

inline std::string read_data(const std::string& name) {
    std::ifstream in(std::string(NBHD_DATA_DIR) + "/" + name, std::ios::binary);
    if (!in) throw std::runtime_error("missing data file " + name);
    return {std::istreambuf_iterator<char>(in), {}};
}

inline Graph restrictor_example() { return nbhd::parse_edge_list(read_data("restrictor_example.edges")); }
inline Graph sd16_link() { return nbhd::parse_edge_list(read_data("sd16_link.edges")); }
inline Graph petersen() { return nbhd::parse_edge_list(read_data("petersen.edges")); }

inline Vertex id(const Graph& g, const std::string& name) {
    for (Vertex v = 0; v < g.order(); ++v)
        if (g.name(v) == name) return v;
    throw std::runtime_error("no vertex named " + name);
}

inline nbhd::VertexSet ids(const Graph& g, std::initializer_list<const char*> names) {
    std::vector<Vertex> out;
    for (const char* n : names) out.push_back(id(g, n));
    return nbhd::VertexSet(std::move(out));
}

inline Graph complete(std::size_t n) {
    Graph g(n);
    for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i) g.add_edge(i, j);
    return g;
}

inline Graph cycle(std::size_t n) {
    Graph g(n);
    for (Vertex i = 0; i < n; ++i) g.add_edge(i, static_cast<Vertex>((i + 1) % n));
    return g;
}

inline Graph path(std::size_t n) {
    Graph g(n);
    for (Vertex i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

inline Graph star(std::size_t leaves) {
    Graph g(leaves + 1);
    for (Vertex i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

inline Graph k5_minus_edge() {
    auto g = complete(5);
    Graph h(5);
    for (auto [u, v] : g.edges())
        if (!(u == 0 && v == 1)) h.add_edge(u, v);
    return h;
}

}  // namespace fixtures

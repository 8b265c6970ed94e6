#ifndef NBHD_GRAPH_IO_HPP
#define NBHD_GRAPH_IO_HPP

#include <cstddef>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "nbhd/error.hpp"
#include "nbhd/graph.hpp"

namespace nbhd {

namespace detail {

inline constexpr std::string_view kGraph6Header = ">>graph6<<";
inline constexpr std::size_t kMaxGraph6Order = 258047;

inline std::string_view trim_line_end(std::string_view s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline std::string_view trim(std::string_view s) {
    const auto ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

}  // namespace detail

/// Decodes one graph6 record. Accepts the optional ">>graph6<<" prefix and a trailing newline.
inline Graph parse_graph6(std::string_view text) {
    text = detail::trim_line_end(text);
    std::size_t pos = 0;
    if (text.starts_with(detail::kGraph6Header)) pos = detail::kGraph6Header.size();

    auto byte_at = [&](std::size_t i) -> unsigned {
        if (i >= text.size()) throw ParseError("graph6 record truncated", i);
        auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw ParseError("graph6 character " + std::to_string(c) + " outside 63..126", i);
        return c - 63U;
    };

    if (pos >= text.size()) throw ParseError("empty graph6 record", pos);
    std::size_t n = 0;
    unsigned first = byte_at(pos);
    if (first < 63) {
        n = first;
        pos += 1;
    } else {
        // 126 prefix: three 6-bit groups, or 126 126 followed by six.
        unsigned second = byte_at(pos + 1);
        std::size_t groups = 3;
        std::size_t start = pos + 1;
        if (second == 63) {
            groups = 6;
            start = pos + 2;
        }
        for (std::size_t i = 0; i < groups; ++i) n = (n << 6) | byte_at(start + i);
        if (n <= 62 || n > detail::kMaxGraph6Order)
            throw ParseError("graph6 length field " + std::to_string(n) + " not supported", pos);
        pos = start + groups;
    }

    const std::size_t bits = n * (n == 0 ? 0 : n - 1) / 2;
    const std::size_t payload = (bits + 5) / 6;
    if (text.size() - pos < payload) throw ParseError("graph6 bit payload truncated", text.size());
    if (text.size() - pos > payload)
        throw ParseError("trailing bytes after graph6 payload", pos + payload);

    Graph g(n);
    std::size_t k = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i, ++k) {
            unsigned group = byte_at(pos + k / 6);
            if ((group >> (5 - k % 6)) & 1U) g.add_edge(i, j);
        }
    }
    // Validate padding characters even when they carry no bits.
    for (std::size_t i = k / 6; i < payload; ++i) byte_at(pos + i);
    return g;
}

inline std::string emit_graph6(const Graph& g) {
    const std::size_t n = g.order();
    if (n > detail::kMaxGraph6Order)
        throw InvalidArgument("graph order " + std::to_string(n) + " too large for graph6");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
        for (int shift = 12; shift >= 0; shift -= 6)
            out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
    }
    unsigned group = 0;
    int filled = 0;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            group = (group << 1) | (g.adjacent(i, j) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

/// Parses "u v" lines over arbitrary vertex tokens. Ids follow first appearance.
inline Graph parse_edge_list(std::string_view text) {
    std::unordered_map<std::string, Vertex> ids;
    std::vector<std::string> labels;
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::size_t declared = 0;
    bool seen_content = false;

    auto intern = [&](const std::string& tok) {
        auto [it, inserted] = ids.emplace(tok, static_cast<Vertex>(labels.size()));
        if (inserted) labels.push_back(tok);
        return it->second;
    };

    std::size_t line_start = 0;
    while (line_start <= text.size()) {
        auto line_end = text.find('\n', line_start);
        if (line_end == std::string_view::npos) line_end = text.size();
        auto line = text.substr(line_start, line_end - line_start);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        line = detail::trim(line);

        if (!line.empty()) {
            if (!seen_content && line.starts_with("n=")) {
                auto count = line.substr(2);
                try {
                    std::size_t used = 0;
                    declared = std::stoul(std::string(count), &used);
                    if (used != count.size()) throw std::invalid_argument("junk");
                } catch (const std::exception&) {
                    throw ParseError("malformed vertex count declaration", line_start);
                }
            } else {
                std::istringstream in{std::string(line)};
                std::string a, b, extra;
                if (!(in >> a >> b) || (in >> extra))
                    throw ParseError("edge line must contain exactly two vertex names", line_start);
                if (a == b) throw ParseError("self-loop on vertex '" + a + "'", line_start);
                Vertex u = intern(a);
                Vertex v = intern(b);
                edges.emplace_back(u, v);
            }
            seen_content = true;
        }
        if (line_end == text.size()) break;
        line_start = line_end + 1;
    }

    if (declared < labels.size() && declared != 0)
        throw ParseError("declared vertex count " + std::to_string(declared) +
                             " is below the number of named vertices",
                         0);
    while (labels.size() < declared) {
        std::string name = std::to_string(labels.size());
        if (ids.count(name)) name = "_" + name;
        intern(name);
    }

    Graph g(labels.size(), edges);
    g.set_labels(std::move(labels));
    return g;
}

/// Writes an "n=<order>" header followed by one "u v" line per edge, using vertex names.
inline std::string emit_edge_list(const Graph& g) {
    std::string out = "n=" + std::to_string(g.order()) + "\n";
    for (auto [u, v] : g.edges()) out += g.name(u) + " " + g.name(v) + "\n";
    return out;
}

}  // namespace nbhd

#endif  // NBHD_GRAPH_IO_HPP

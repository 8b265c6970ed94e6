#ifndef NBHD_CAYLEY_HPP
#define NBHD_CAYLEY_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "nbhd/automorphism.hpp"
#include "nbhd/eliminate.hpp"
#include "nbhd/error.hpp"
#include "nbhd/graph.hpp"
#include "nbhd/graph_io.hpp"
#include "nbhd/structure.hpp"

namespace nbhd {

using Element = std::uint32_t;

/// A finite group as an explicit multiplication table.
struct GroupTable {
    std::string name;
    std::size_t order = 0;
    std::vector<Element> mul;  // row-major: mul[a * order + b] = a*b
    Element identity = 0;
    std::vector<Element> inv;
    std::vector<std::string> names;

    Element operator()(Element a, Element b) const { return mul[a * order + b]; }

    Element power(Element a, std::size_t k) const {
        Element r = identity;
        for (std::size_t i = 0; i < k; ++i) r = (*this)(r, a);
        return r;
    }
};

namespace detail {

/// Checks closure, identity, inverses and associativity, then fills identity and inv.
inline void complete_group(GroupTable& g) {
    const std::size_t n = g.order;
    if (n == 0) throw InvalidArgument(g.name + ": group must be nonempty");
    if (g.mul.size() != n * n) throw InvalidArgument(g.name + ": table has wrong size");
    for (std::size_t i = 0; i < n * n; ++i)
        if (g.mul[i] >= n)
            throw InvalidArgument(g.name + ": closure fails at (" + std::to_string(i / n) + "," +
                                  std::to_string(i % n) + ")");
    bool found = false;
    for (Element e = 0; e < n && !found; ++e) {
        bool ok = true;
        for (Element a = 0; a < n && ok; ++a) ok = g(e, a) == a && g(a, e) == a;
        if (ok) {
            g.identity = e;
            found = true;
        }
    }
    if (!found) throw InvalidArgument(g.name + ": identity law fails (no two-sided identity)");
    g.inv.assign(n, 0);
    for (Element a = 0; a < n; ++a) {
        bool has = false;
        for (Element b = 0; b < n && !has; ++b)
            if (g(a, b) == g.identity && g(b, a) == g.identity) {
                g.inv[a] = b;
                has = true;
            }
        if (!has) throw InvalidArgument(g.name + ": inverse law fails for element " + std::to_string(a));
    }
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b)
            for (Element c = 0; c < n; ++c)
                if (g(g(a, b), c) != g(a, g(b, c)))
                    throw InvalidArgument(g.name + ": associativity fails at (" + std::to_string(a) +
                                          "," + std::to_string(b) + "," + std::to_string(c) + ")");
    if (g.names.size() != n) {
        g.names.clear();
        for (std::size_t i = 0; i < n; ++i) g.names.push_back(std::to_string(i));
    }
}

template <typename Mul>
GroupTable tabulate(std::string name, std::size_t order, std::vector<std::string> names, Mul mul) {
    GroupTable g;
    g.name = std::move(name);
    g.order = order;
    g.names = std::move(names);
    g.mul.resize(order * order);
    for (Element a = 0; a < order; ++a)
        for (Element b = 0; b < order; ++b) g.mul[a * order + b] = mul(a, b);
    complete_group(g);
    return g;
}

}  // namespace detail

inline GroupTable cyclic(std::size_t n) {
    if (n == 0) throw InvalidArgument("cyclic group order must be positive");
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
    return detail::tabulate("cyclic(" + std::to_string(n) + ")", n, names,
                            [n](Element a, Element b) { return static_cast<Element>((a + b) % n); });
}

/// Dihedral group of the given order 2n; elements r^i s^j stored as i + n*j.
inline GroupTable dihedral(std::size_t order) {
    if (order < 2 || order % 2) throw InvalidArgument("dihedral group order must be even and >= 2");
    const std::size_t n = order / 2;
    std::vector<std::string> names;
    for (std::size_t j = 0; j < 2; ++j)
        for (std::size_t i = 0; i < n; ++i)
            names.push_back("r^" + std::to_string(i) + (j ? " s" : ""));
    return detail::tabulate("dihedral(" + std::to_string(order) + ")", order, names,
                            [n](Element a, Element b) {
                                std::size_t i = a % n, j = a / n, k = b % n, l = b / n;
                                std::size_t r = j ? (i + n - k) % n : (i + k) % n;
                                return static_cast<Element>(r + n * ((j + l) % 2));
                            });
}

/// Quaternion group {±1, ±i, ±j, ±k}; id = unit + 4*sign with units ordered 1, i, j, k.
inline GroupTable quaternion8() {
    // unit_mul[a][b] = (sign, unit) of a*b for a, b in {1, i, j, k}
    static constexpr int kSign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
    static constexpr int kUnit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    std::vector<std::string> names = {"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
    return detail::tabulate("quaternion8", 8, names, [](Element a, Element b) {
        int ua = static_cast<int>(a % 4), ub = static_cast<int>(b % 4);
        int sign = (static_cast<int>(a / 4) + static_cast<int>(b / 4) + kSign[ua][ub]) % 2;
        return static_cast<Element>(kUnit[ua][ub] + 4 * sign);
    });
}

/// Semidihedral group of order 16, <y, x | y^8 = x^2 = e, xyx = y^3>. Element y^i x^j is stored
/// as i + 8j and named "(i,j)"; (i,j)(k,l) = (i + 3^j k mod 8, j + l mod 2).
inline GroupTable semidihedral16() {
    std::vector<std::string> names;
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < 8; ++i) names.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    return detail::tabulate("semidihedral16", 16, names, [](Element a, Element b) {
        Element i = a % 8, j = a / 8, k = b % 8, l = b / 8;
        Element twist = j ? 3 : 1;
        return static_cast<Element>((i + twist * k) % 8 + 8 * ((j + l) % 2));
    });
}

inline GroupTable direct_product(const GroupTable& a, const GroupTable& b) {
    std::vector<std::string> names;
    for (Element x = 0; x < a.order; ++x)
        for (Element y = 0; y < b.order; ++y) names.push_back("(" + a.names[x] + "," + b.names[y] + ")");
    const std::size_t nb = b.order;
    return detail::tabulate("direct_product(" + a.name + "," + b.name + ")", a.order * nb, names,
                            [&](Element p, Element q) {
                                return static_cast<Element>(a(p / nb, q / nb) * nb + b(p % nb, q % nb));
                            });
}

/// Reads "order=<n>" followed by n*n whitespace-separated element ids in row-major order.
inline GroupTable from_table(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string header;
    if (!(in >> header) || !header.starts_with("order="))
        throw ParseError("group table must start with order=<n>", 0);
    std::size_t n = 0;
    try {
        n = std::stoul(header.substr(6));
    } catch (const std::exception&) {
        throw ParseError("malformed group order", 6);
    }
    GroupTable g;
    g.name = "from_table(" + std::to_string(n) + ")";
    g.order = n;
    for (std::size_t i = 0; i < n * n; ++i) {
        long long x = 0;
        if (!(in >> x)) throw ParseError("group table has fewer than n*n entries", static_cast<std::size_t>(in.tellg()));
        if (x < 0) throw InvalidArgument(g.name + ": closure fails, negative entry");
        g.mul.push_back(static_cast<Element>(x));
    }
    std::string extra;
    if (in >> extra) throw ParseError("trailing data after group table", static_cast<std::size_t>(in.tellg()));
    detail::complete_group(g);
    return g;
}

/// Parses a group description such as "cyclic(5)", "dihedral(8)", "quaternion8",
/// "semidihedral16" or "direct_product(cyclic(2),cyclic(4))".
inline GroupTable make_group(std::string_view spec) {
    auto trimmed = detail::trim(spec);
    auto open = trimmed.find('(');
    auto head = trimmed.substr(0, open);
    if (open == std::string_view::npos) {
        if (head == "quaternion8") return quaternion8();
        if (head == "semidihedral16") return semidihedral16();
        throw ParseError("unknown group '" + std::string(head) + "'", 0);
    }
    if (!trimmed.ends_with(')')) throw ParseError("unbalanced parentheses in group spec", trimmed.size());
    auto inner = trimmed.substr(open + 1, trimmed.size() - open - 2);
    if (head == "direct_product") {
        int depth = 0;
        for (std::size_t i = 0; i < inner.size(); ++i) {
            if (inner[i] == '(') ++depth;
            if (inner[i] == ')') --depth;
            if (inner[i] == ',' && depth == 0)
                return direct_product(make_group(inner.substr(0, i)), make_group(inner.substr(i + 1)));
        }
        throw ParseError("direct_product needs two factors", open);
    }
    std::size_t k = 0;
    try {
        k = std::stoul(std::string(inner));
    } catch (const std::exception&) {
        throw ParseError("group parameter is not a number", open + 1);
    }
    if (head == "cyclic") return cyclic(k);
    if (head == "dihedral") return dihedral(k);
    throw ParseError("unknown group '" + std::string(head) + "'", 0);
}

/// Identity-free, inverse-closed subset of a group.
class ConnectionSet {
public:
    ConnectionSet() = default;
    ConnectionSet(const GroupTable& g, std::vector<Element> elements) {
        std::sort(elements.begin(), elements.end());
        elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
        for (Element s : elements) {
            if (s >= g.order) throw InvalidArgument("connection set element out of range");
            if (s == g.identity) throw InvalidArgument("connection set contains the identity");
            if (!std::binary_search(elements.begin(), elements.end(), g.inv[s]))
                throw InvalidArgument("connection set is not closed under inverses (" + g.names[s] + ")");
        }
        elements_ = std::move(elements);
    }

    const std::vector<Element>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool contains(Element e) const { return std::binary_search(elements_.begin(), elements_.end(), e); }

private:
    std::vector<Element> elements_;
};

/// Vertices are group elements; a ~ b iff a^-1 b lies in s.
inline Graph cayley_graph(const GroupTable& g, const ConnectionSet& s) {
    Graph out(g.order);
    for (Element a = 0; a < g.order; ++a)
        for (Element b = a + 1; b < g.order; ++b)
            if (s.contains(g(g.inv[a], b))) out.add_edge(a, b);
    out.set_labels(g.names);
    return out;
}

/// Size of the subgroup generated by s (order of G iff the Cayley graph is connected).
inline std::size_t generated_subgroup_order(const GroupTable& g, const ConnectionSet& s) {
    std::vector<bool> in(g.order, false);
    std::vector<Element> todo{g.identity};
    in[g.identity] = true;
    std::size_t count = 1;
    while (!todo.empty()) {
        Element a = todo.back();
        todo.pop_back();
        for (Element x : s.elements()) {
            Element b = g(a, x);
            if (!in[b]) {
                in[b] = true;
                ++count;
                todo.push_back(b);
            }
        }
    }
    return count;
}

/// The induced neighbourhood of the identity in Cay(g, s), built without the whole graph.
inline Graph identity_neighbourhood(const GroupTable& g, const ConnectionSet& s) {
    const auto& el = s.elements();
    Graph out(el.size());
    for (std::size_t i = 0; i < el.size(); ++i)
        for (std::size_t j = i + 1; j < el.size(); ++j)
            if (s.contains(g(g.inv[el[i]], el[j])))
                out.add_edge(static_cast<Vertex>(i), static_cast<Vertex>(j));
    std::vector<std::string> labels;
    for (Element e : el) labels.push_back(g.names[e]);
    out.set_labels(std::move(labels));
    return out;
}

/// Calls visit on every connection set of at most max_size elements, built from any choice of
/// involutions and inverse pairs.
inline void for_each_connection_set(const GroupTable& g, std::size_t max_size,
                                    const std::function<void(const ConnectionSet&)>& visit) {
    std::vector<std::vector<Element>> atoms;
    for (Element a = 0; a < g.order; ++a) {
        if (a == g.identity) continue;
        if (g.inv[a] == a) atoms.push_back({a});
        else if (a < g.inv[a]) atoms.push_back({a, g.inv[a]});
    }
    std::vector<Element> chosen;
    auto rec = [&](auto&& self, std::size_t next) -> void {
        if (next == atoms.size()) {
            visit(ConnectionSet(g, chosen));
            return;
        }
        self(self, next + 1);
        if (chosen.size() + atoms[next].size() <= max_size) {
            chosen.insert(chosen.end(), atoms[next].begin(), atoms[next].end());
            self(self, next + 1);
            chosen.resize(chosen.size() - atoms[next].size());
        }
    };
    rec(rec, 0);
}

inline std::vector<ConnectionSet> connection_sets(const GroupTable& g,
                                                  std::size_t max_size = SIZE_MAX) {
    std::vector<ConnectionSet> out;
    for_each_connection_set(g, max_size, [&](const ConnectionSet& s) { out.push_back(s); });
    return out;
}

struct CensusOptions {
    bool connected_only = true;
    /// Largest connection set enumerated for groups of order >= capped_from_order.
    std::size_t max_size = 8;
    std::size_t capped_from_order = 16;
};

struct Census {
    std::set<std::string> forms;
    std::vector<std::string> catalog;
    CensusOptions options;
    std::size_t connection_sets_examined = 0;
    std::size_t connected_graphs = 0;
};

/// The documented census catalog, restricted to groups of order <= max_order.
inline std::vector<GroupTable> default_catalog(std::size_t max_order = 16) {
    std::vector<std::string> specs;
    for (int n = 1; n <= 16; ++n) specs.push_back("cyclic(" + std::to_string(n) + ")");
    for (int n = 2; n <= 8; ++n) specs.push_back("dihedral(" + std::to_string(2 * n) + ")");
    specs.insert(specs.end(), {
                                  "direct_product(cyclic(2),cyclic(2))",
                                  "direct_product(cyclic(3),cyclic(3))",
                                  "direct_product(cyclic(2),cyclic(4))",
                                  "direct_product(cyclic(2),direct_product(cyclic(2),cyclic(2)))",
                                  "direct_product(cyclic(2),cyclic(6))",
                                  "direct_product(cyclic(2),cyclic(8))",
                                  "direct_product(cyclic(4),cyclic(4))",
                                  "direct_product(cyclic(2),direct_product(cyclic(2),cyclic(4)))",
                                  "direct_product(direct_product(cyclic(2),cyclic(2)),"
                                  "direct_product(cyclic(2),cyclic(2)))",
                                  "quaternion8",
                                  "semidihedral16",
                              });
    std::vector<GroupTable> out;
    for (const auto& s : specs) {
        auto g = make_group(s);
        if (g.order <= max_order) out.push_back(std::move(g));
    }
    return out;
}

inline Census neighbourhood_census(const std::vector<GroupTable>& groups, const CensusOptions& opt = {}) {
    Census c;
    c.options = opt;
    for (const auto& g : groups) {
        c.catalog.push_back(g.name);
        std::size_t cap = g.order >= opt.capped_from_order ? opt.max_size : SIZE_MAX;
        for_each_connection_set(g, cap, [&](const ConnectionSet& s) {
            ++c.connection_sets_examined;
            if (opt.connected_only && generated_subgroup_order(g, s) != g.order) return;
            ++c.connected_graphs;
            c.forms.insert(canonical_form(identity_neighbourhood(g, s)));
        });
    }
    return c;
}

/// Sorted graph6 lines after a "# meta:" header.
inline std::string serialize_census(const Census& c) {
    std::string out = "# meta: catalog=";
    for (std::size_t i = 0; i < c.catalog.size(); ++i) out += (i ? ";" : "") + c.catalog[i];
    out += " connected_only=" + std::string(c.options.connected_only ? "true" : "false");
    out += " max_size=" + std::to_string(c.options.max_size);
    out += " capped_from_order=" + std::to_string(c.options.capped_from_order);
    out += " members=" + std::to_string(c.forms.size()) + "\n";
    for (const auto& f : c.forms) out += f + "\n";
    return out;
}

inline Census parse_census(std::string_view text) {
    Census c;
    std::size_t pos = 0;
    while (pos < text.size()) {
        auto end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        auto line = detail::trim(text.substr(pos, end - pos));
        if (line.starts_with("# meta:")) {
            std::istringstream in{std::string(line.substr(7))};
            std::string field;
            while (in >> field) {
                auto eq = field.find('=');
                if (eq == std::string::npos) continue;
                auto key = field.substr(0, eq), val = field.substr(eq + 1);
                if (key == "catalog") {
                    std::string item;
                    std::istringstream items(val);
                    while (std::getline(items, item, ';')) c.catalog.push_back(item);
                } else if (key == "connected_only") {
                    c.options.connected_only = val == "true";
                } else if (key == "max_size") {
                    c.options.max_size = std::stoul(val);
                } else if (key == "capped_from_order") {
                    c.options.capped_from_order = std::stoul(val);
                }
            }
        } else if (!line.empty() && !line.starts_with("#")) {
            parse_graph6(line);  // validates
            c.forms.insert(std::string(line));
        }
        pos = end + 1;
    }
    return c;
}

struct Violation {
    std::string form;
    std::string reason;
};

/// Runs every rule on every census member. A real Cayley neighbourhood must never be
/// eliminated; asymmetric members must also satisfy F(X,v) = common neighbourhood of S for every
/// orbit-restrictor S of prime-minus-one order and v in S.
inline std::vector<Violation> soundness_check(const std::set<std::string>& members,
                                              EliminationOptions opt = {}) {
    opt.all_rules = true;
    std::vector<Violation> out;
    for (const auto& form : members) {
        Analysis an(parse_graph6(form));
        auto rep = run_all(an, opt);
        for (const auto& v : rep.verdicts)
            if (v.outcome == Outcome::eliminated)
                out.push_back({form, std::string("eliminated by ") + to_string(v.rule) + " (" +
                                         to_string(v.scope) + ")"});
        if (!an.asymmetric()) continue;
        const auto& g = an.graph();
        for (std::size_t p = 2; p - 1 <= std::min(opt.max_clique_order, g.order()); ++p) {
            if (!detail::is_prime(p)) continue;
            for (const auto& s : cliques_of_order(g, p - 1)) {
                if (!is_orbit_restrictor(an, s)) continue;
                auto common = common_neighbourhood(g, s);
                for (Vertex v : s)
                    if (max_fixed_subset(an, v) != common)
                        out.push_back({form, "maximal fixed subset differs from the common "
                                             "neighbourhood of orbit-restrictor " +
                                                 detail::set_names(g, s)});
            }
        }
    }
    return out;
}

/// Triangle a-b-c with a pendant vertex on c and a pendant path of length two on b.
inline Graph semidihedral_neighbourhood_shape() {
    return parse_edge_list("a b\nb c\nc a\nc d\nb e\ne f\n");
}

inline ConnectionSet semidihedral_connection_set(const GroupTable& sd) {
    const Element y = 1, x = 8;
    auto& g = sd;
    return ConnectionSet(sd, {y, g.inv[y], g(y, x), g(x, g.inv[y]), x, g.power(y, 4)});
}

struct DemoReport {
    Graph cayley;
    Graph neighbourhood;
    EliminationReport report;
};

/// Builds Cay(SD16, {y, y^-1, yx, xy^-1, x, y^4}), extracts the identity's neighbourhood and
/// checks the expected properties, throwing InvariantViolation on any mismatch.
inline DemoReport semidihedral_demo() {
    auto sd = semidihedral16();
    auto s = semidihedral_connection_set(sd);
    DemoReport d;
    d.cayley = cayley_graph(sd, s);
    auto check = [](bool ok, const char* what) {
        if (!ok) throw InvariantViolation(std::string("semidihedral demo: ") + what);
    };
    auto st = graph_stats(d.cayley);
    check(st.n == 16, "Cayley graph must have 16 vertices");
    check(std::all_of(st.valencies.begin(), st.valencies.end(), [](auto k) { return k == 6; }),
          "Cayley graph must be 6-regular");
    check(st.is_connected, "Cayley graph must be connected");

    auto view = induced_neighbourhood(d.cayley, sd.identity);
    d.neighbourhood = view.graph;
    auto nst = graph_stats(d.neighbourhood);
    auto vals = nst.valencies;
    std::sort(vals.begin(), vals.end());
    check(nst.n == 6 && nst.m == 6, "neighbourhood must have 6 vertices and 6 edges");
    check(vals == std::vector<std::size_t>{1, 1, 2, 2, 3, 3}, "neighbourhood valencies must be 1,1,2,2,3,3");
    check(canonical_form(d.neighbourhood) == canonical_form(semidihedral_neighbourhood_shape()),
          "neighbourhood must match the expected shape");
    check(is_asymmetric(d.neighbourhood), "neighbourhood must be asymmetric");
    d.report = run_all(d.neighbourhood, EliminationOptions{.all_rules = true});
    check(d.report.overall != Outcome::eliminated, "a real Cayley neighbourhood must not be eliminated");
    return d;
}

}  // namespace nbhd

#endif  // NBHD_CAYLEY_HPP

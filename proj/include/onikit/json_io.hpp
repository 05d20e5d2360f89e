#pragma once

// JSON encodings of families, ideals, complexes, graphs and certificates,
// plus the plain-text edge list format for graphs. Output is canonically
// ordered, so serializing the same value always yields the same bytes.

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "onikit/complex.hpp"
#include "onikit/graph.hpp"
#include "onikit/gvd.hpp"
#include "onikit/ideal.hpp"
#include "onikit/universe.hpp"

namespace onikit::io {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::vector<std::string> string_list(const Json& j, const char* what)
{
    if (!j.is_array())
        throw InputError(std::string(what) + " must be an array of strings");
    std::vector<std::string> out;
    for (const auto& e : j) {
        if (!e.is_string())
            throw InputError(std::string(what) + " must contain strings only");
        out.push_back(e.get<std::string>());
    }
    return out;
}

inline std::vector<std::vector<std::string>> set_list(const Json& j, const char* what)
{
    if (!j.is_array())
        throw InputError(std::string(what) + " must be an array of label arrays");
    std::vector<std::vector<std::string>> out;
    for (const auto& e : j)
        out.push_back(string_list(e, what));
    return out;
}

inline const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key))
        throw InputError(std::string("missing field \"") + key + "\"");
    return j.at(key);
}

/// The explicit universe if given, otherwise the labels used by the sets.
inline Universe universe_for(const Json& j, const std::vector<std::vector<std::string>>& sets)
{
    if (j.contains("universe"))
        return Universe(string_list(j.at("universe"), "universe"));
    std::vector<std::string> labels;
    for (const auto& s : sets)
        labels.insert(labels.end(), s.begin(), s.end());
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    return Universe(std::move(labels));
}

inline std::vector<VertexSet> to_sets(const Universe& u, const std::vector<std::vector<std::string>>& sets)
{
    std::vector<VertexSet> out;
    for (const auto& s : sets)
        out.push_back(u.set_of(s));
    return out;
}

inline Json sets_json(const SpernerFamily& f)
{
    Json out = Json::array();
    for (const auto& s : f.labeled())
        out.push_back(s);
    return out;
}

}  // namespace detail

// Families: {"universe": [...], "sets": [[...], ...]}

inline Json to_json(const SpernerFamily& f)
{
    return Json{{"universe", f.universe().labels()}, {"sets", detail::sets_json(f)}};
}

/// Rejects non-antichains.
inline SpernerFamily family_from_json(const Json& j)
{
    auto sets = detail::set_list(detail::field(j, "sets"), "sets");
    auto u = detail::universe_for(j, sets);
    return SpernerFamily(u, detail::to_sets(u, sets));
}

// Ideals: {"universe": [...], "generators": [[...], ...], "zero": b, "unit": b}

inline Json to_json(const SquareFreeIdeal& i)
{
    return Json{{"universe", i.universe().labels()},
                {"generators", detail::sets_json(i.generators())},
                {"zero", i.is_zero()},
                {"unit", i.is_unit()}};
}

/// Generators are minimized; "unit": true adds the empty generator.
inline SquareFreeIdeal ideal_from_json(const Json& j)
{
    if (!j.is_object())
        throw InputError("ideal must be a JSON object");
    std::vector<std::vector<std::string>> gens;
    if (j.contains("generators"))
        gens = detail::set_list(j.at("generators"), "generators");
    else if (!j.contains("zero") && !j.contains("unit"))
        throw InputError("missing field \"generators\"");
    auto u = detail::universe_for(j, gens);
    auto sets = detail::to_sets(u, gens);
    if (j.value("unit", false))
        sets.push_back(VertexSet{});
    auto ideal = SquareFreeIdeal(u, std::move(sets));
    if (j.value("zero", false) && !ideal.is_zero())
        throw InputError("ideal marked zero has generators");
    return ideal;
}

// Complexes: {"universe": [...], "facets": [[...], ...], "kind": "void|empty|ordinary"}

inline Json to_json(const SimplicialComplex& c)
{
    return Json{{"universe", c.universe().labels()}, {"facets", detail::sets_json(c.facets())}, {"kind", to_string(c.kind())}};
}

/// Facets are maximized. "kind": "empty" with no facets means the complex {∅}.
inline SimplicialComplex complex_from_json(const Json& j)
{
    if (!j.is_object())
        throw InputError("complex must be a JSON object");
    std::vector<std::vector<std::string>> facets;
    if (j.contains("facets"))
        facets = detail::set_list(j.at("facets"), "facets");
    else if (!j.contains("kind"))
        throw InputError("missing field \"facets\"");
    auto u = detail::universe_for(j, facets);
    auto sets = detail::to_sets(u, facets);
    auto kind = j.value("kind", std::string{});
    if (kind == "empty")
        sets.push_back(VertexSet{});
    auto c = SimplicialComplex(u, std::move(sets));
    if (!kind.empty() && kind != to_string(c.kind()))
        throw InputError("complex kind \"" + kind + "\" does not match its facets");
    return c;
}

// Graphs: {"vertices": [...], "edges": [["a","b"], ...]}

inline Json to_json(const Graph& g)
{
    Json edges = Json::array();
    for (const auto& [a, b] : g.labeled_edges())
        edges.push_back({a, b});
    return Json{{"vertices", g.universe().labels()}, {"edges", edges}};
}

/// Vertices default to the edge endpoints.
inline Graph graph_from_json(const Json& j)
{
    auto pairs = detail::set_list(detail::field(j, "edges"), "edges");
    std::vector<Edge> edges;
    std::vector<std::string> vertices;
    for (const auto& p : pairs) {
        if (p.size() != 2)
            throw InputError("every edge must have exactly two endpoints");
        edges.emplace_back(p[0], p[1]);
    }
    if (j.contains("vertices")) {
        vertices = detail::string_list(j.at("vertices"), "vertices");
    } else {
        for (const auto& [a, b] : edges) {
            vertices.push_back(a);
            vertices.push_back(b);
        }
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    }
    return Graph(std::move(vertices), edges);
}

/// One edge "a b" per line; "# vertex c" declares a vertex; other lines
/// starting with '#' and blank lines are ignored.
inline Graph graph_from_text(const std::string& text)
{
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> vertices;
    std::vector<Edge> edges;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a))
            continue;
        if (a[0] == '#') {
            std::string word = a.size() > 1 ? a.substr(1) : std::string{};
            if (word.empty())
                ls >> word;
            if (word == "vertex") {
                std::string v;
                if (!(ls >> v))
                    throw InputError("line " + std::to_string(lineno) + ": vertex declaration without a label");
                vertices.push_back(v);
            }
            continue;
        }
        if (!(ls >> b) || (ls >> extra))
            throw InputError("line " + std::to_string(lineno) + ": expected two endpoints");
        vertices.push_back(a);
        vertices.push_back(b);
        edges.emplace_back(a, b);
    }
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    return Graph(std::move(vertices), edges);
}

inline std::string graph_to_text(const Graph& g)
{
    std::string out;
    for (std::size_t v = 0; v < g.order(); ++v)
        if (g.degree(v) == 0)
            out += "# vertex " + g.label(v) + "\n";
    for (const auto& [a, b] : g.labeled_edges())
        out += a + " " + b + "\n";
    return out;
}

// Shedding certificates: {"shed": v, "del": ..., "lk": ...} or {"leaf": "simplex|empty"}

inline Json to_json(const SheddingCertificate& c)
{
    using Kind = SheddingCertificate::Kind;
    switch (c.kind) {
    case Kind::Simplex: return Json{{"leaf", "simplex"}};
    case Kind::Empty: return Json{{"leaf", "empty"}};
    case Kind::Shed: break;
    }
    return Json{{"shed", c.vertex}, {"del", to_json(*c.del)}, {"lk", to_json(*c.link)}};
}

inline SheddingCertificatePtr shedding_certificate_from_json(const Json& j)
{
    using Kind = SheddingCertificate::Kind;
    if (j.is_object() && j.contains("leaf")) {
        auto leaf = j.at("leaf");
        if (leaf == "simplex")
            return SheddingCertificate::leaf(Kind::Simplex);
        if (leaf == "empty")
            return SheddingCertificate::leaf(Kind::Empty);
        throw InputError("unknown leaf kind in shedding certificate");
    }
    const auto& v = detail::field(j, "shed");
    if (!v.is_string())
        throw InputError("shedding vertex must be a string");
    return SheddingCertificate::shed(v.get<std::string>(), shedding_certificate_from_json(detail::field(j, "del")),
                                     shedding_certificate_from_json(detail::field(j, "lk")));
}

// GVD certificates: {"base": "unit|zero|vars"} or {"split": {"y": v, "C": ..., "N": ...}}

inline Json to_json(const GvdCertificate& c)
{
    using Kind = GvdCertificate::Kind;
    switch (c.kind) {
    case Kind::Unit: return Json{{"base", "unit"}};
    case Kind::Zero: return Json{{"base", "zero"}};
    case Kind::Variables: return Json{{"base", "vars"}};
    case Kind::Split: break;
    }
    return Json{{"split", Json{{"y", c.variable}, {"C", to_json(*c.c)}, {"N", to_json(*c.n)}}}};
}

inline GvdCertificatePtr gvd_certificate_from_json(const Json& j)
{
    using Kind = GvdCertificate::Kind;
    if (j.is_object() && j.contains("base")) {
        auto b = j.at("base");
        if (b == "unit")
            return GvdCertificate::base(Kind::Unit);
        if (b == "zero")
            return GvdCertificate::base(Kind::Zero);
        if (b == "vars")
            return GvdCertificate::base(Kind::Variables);
        throw InputError("unknown base kind in GVD certificate");
    }
    const auto& s = detail::field(j, "split");
    const auto& y = detail::field(s, "y");
    if (!y.is_string())
        throw InputError("split variable must be a string");
    return GvdCertificate::split(y.get<std::string>(), gvd_certificate_from_json(detail::field(s, "C")),
                                 gvd_certificate_from_json(detail::field(s, "N")));
}

}  // namespace onikit::io

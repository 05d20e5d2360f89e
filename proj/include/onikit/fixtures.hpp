#pragma once

// Reference objects shared by the tests, the acceptance suite and the CLI.

#include <string>
#include <vector>

#include "onikit/graph.hpp"
#include "onikit/universe.hpp"

namespace onikit::fixtures {

/// The path 0-1-2-3-4-5-6.
inline Graph p6() { return path_graph(6); }

/// Balanced TD-unmixed tree of height 3 with leaves l1..l4, height-1
/// vertices s1..s3, height-2 vertices u1..u3 and height-3 vertices r1, r2.
inline Graph t_a()
{
    return Graph({"l1", "l2", "l3", "l4", "s1", "s2", "s3", "u1", "u2", "u3", "r1", "r2"},
                 {{"l1", "s1"},
                  {"l2", "s2"},
                  {"l3", "s3"},
                  {"l4", "s3"},
                  {"s1", "u1"},
                  {"s2", "u2"},
                  {"s3", "u3"},
                  {"u1", "r1"},
                  {"u2", "r1"},
                  {"u2", "r2"},
                  {"u3", "r2"}});
}

/// Sperner family on v1..v5 used for the chordal realization example. Its
/// minimal transversals are v1v3, v1v5, v2v3, v2v4, v3v4.
inline SpernerFamily beg_a()
{
    Universe u({"v1", "v2", "v3", "v4", "v5"});
    return SpernerFamily(u, {u.set({"v1", "v2", "v3"}), u.set({"v1", "v2", "v4"}), u.set({"v1", "v3", "v4"}),
                             u.set({"v2", "v3", "v5"}), u.set({"v3", "v4", "v5"})});
}

/// Same family with {v1,v4} in place of {v1,v2,v4} and {v1,v3,v4}. It has
/// only four minimal transversals: v2v3 misses {v1,v4}.
inline SpernerFamily beg_a_four()
{
    Universe u({"v1", "v2", "v3", "v4", "v5"});
    return SpernerFamily(u, {u.set({"v1", "v2", "v3"}), u.set({"v1", "v4"}), u.set({"v2", "v3", "v5"}),
                             u.set({"v3", "v4", "v5"})});
}

/// Height-3 tree with a single height-3 vertex r of degree 2: two copies of
/// a star with two leaves, each joined to r through a height-2 vertex.
inline Graph base_case()
{
    return Graph({"l1", "l2", "s", "u", "r", "u'", "s'", "l1'", "l2'"},
                 {{"l1", "s"}, {"l2", "s"}, {"s", "u"}, {"u", "r"}, {"r", "u'"}, {"u'", "s'"}, {"s'", "l1'"}, {"s'", "l2'"}});
}

/// The cycle x0-x1-...-x6-x0.
inline Graph c7()
{
    std::vector<std::string> vs;
    std::vector<Edge> es;
    for (int i = 0; i < 7; ++i) {
        vs.push_back("x" + std::to_string(i));
        es.emplace_back("x" + std::to_string(i), "x" + std::to_string((i + 1) % 7));
    }
    return Graph(vs, es);
}

/// Edge ideal: one generator per edge.
inline SquareFreeIdeal edge_ideal(const Graph& g)
{
    std::vector<VertexSet> gens;
    for (auto [a, b] : g.edges())
        gens.push_back(VertexSet{a, b});
    return SquareFreeIdeal(g.universe(), std::move(gens));
}

inline const std::vector<std::string>& names()
{
    static const std::vector<std::string> n{"base_case", "beg_A", "c7", "p6", "t_a"};
    return n;
}

}  // namespace onikit::fixtures

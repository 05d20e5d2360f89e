#pragma once

// Finite simple graphs and trees: neighbourhoods, heights, (odd) open
// neighbourhood ideals, total dominating sets, stable complexes, the builders
// for unmixed balanced trees, tree decompositions, chordality and the
// realization of Sperner families as minimal total dominating sets.

#include <algorithm>
#include <charconv>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "onikit/complex.hpp"
#include "onikit/ideal.hpp"
#include "onikit/universe.hpp"

namespace onikit {

using Edge = std::pair<std::string, std::string>;

class Graph {
public:
    Graph() = default;

    /// Loops, duplicate edges and unknown endpoints are input errors.
    Graph(Universe universe, const std::vector<Edge>& edges) : universe_(std::move(universe)), adj_(universe_.size())
    {
        for (const auto& [a, b] : edges) {
            auto x = universe_.position(a), y = universe_.position(b);
            if (x == y)
                throw InputError("loop at vertex '" + a + "'");
            if (adj_[x].contains(y))
                throw InputError("duplicate edge '" + a + "' '" + b + "'");
            adj_[x].insert(y);
            adj_[y].insert(x);
        }
    }

    Graph(std::vector<std::string> vertices, const std::vector<Edge>& edges) : Graph(Universe(std::move(vertices)), edges) {}

    /// Trusted constructor from a symmetric adjacency list.
    static Graph from_adjacency(Universe universe, std::vector<VertexSet> adj)
    {
        Graph g;
        g.universe_ = std::move(universe);
        g.adj_ = std::move(adj);
        return g;
    }

    const Universe& universe() const { return universe_; }
    std::size_t order() const { return universe_.size(); }
    const VertexSet& neighbors(std::size_t v) const { return adj_.at(v); }
    std::size_t degree(std::size_t v) const { return adj_.at(v).size(); }
    bool adjacent(std::size_t a, std::size_t b) const { return adj_.at(a).contains(b); }
    std::size_t position(std::string_view label) const { return universe_.position(label); }
    const std::string& label(std::size_t v) const { return universe_.label(v); }

    /// Edges (a, b) with a < b in lexicographic order.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const
    {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t a = 0; a < adj_.size(); ++a)
            adj_[a].for_each([&](std::size_t b) {
                if (a < b)
                    out.emplace_back(a, b);
            });
        return out;
    }

    std::vector<Edge> labeled_edges() const
    {
        std::vector<Edge> out;
        for (auto [a, b] : edges())
            out.emplace_back(label(a), label(b));
        return out;
    }

    std::size_t edge_count() const { return edges().size(); }

    friend bool operator==(const Graph& a, const Graph& b) { return a.universe_ == b.universe_ && a.adj_ == b.adj_; }

private:
    Universe universe_;
    std::vector<VertexSet> adj_;
};

// ---------------------------------------------------------------------------
// Neighbourhoods and structure

inline VertexSet open_neighborhood(const Graph& g, std::size_t v) { return g.neighbors(v); }

inline VertexSet closed_neighborhood(const Graph& g, std::size_t v)
{
    auto n = g.neighbors(v);
    n.insert(v);
    return n;
}

inline VertexSet open_neighborhood(const Graph& g, const VertexSet& s)
{
    VertexSet n;
    s.for_each([&](std::size_t v) { n |= g.neighbors(v); });
    return n;
}

inline VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) { return open_neighborhood(g, s) | s; }

struct Neighborhoods {
    std::vector<VertexSet> open;
    std::vector<VertexSet> closed;
};

inline Neighborhoods neighborhoods(const Graph& g)
{
    Neighborhoods out;
    for (std::size_t v = 0; v < g.order(); ++v) {
        out.open.push_back(open_neighborhood(g, v));
        out.closed.push_back(closed_neighborhood(g, v));
    }
    return out;
}

/// Components ordered by their first vertex.
inline std::vector<VertexSet> connected_components(const Graph& g)
{
    std::vector<VertexSet> out;
    VertexSet seen;
    for (std::size_t s = 0; s < g.order(); ++s) {
        if (seen.contains(s))
            continue;
        VertexSet comp{s};
        std::vector<std::size_t> stack{s};
        while (!stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            g.neighbors(v).for_each([&](std::size_t w) {
                if (!comp.contains(w)) {
                    comp.insert(w);
                    stack.push_back(w);
                }
            });
        }
        seen |= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

inline bool is_forest(const Graph& g) { return g.edge_count() + connected_components(g).size() == g.order(); }
inline bool is_tree(const Graph& g) { return g.order() > 0 && is_forest(g) && connected_components(g).size() == 1; }

inline Graph induced_subgraph(const Graph& g, const VertexSet& keep)
{
    auto kept = keep & g.universe().all();
    auto u = g.universe().restricted(kept);
    std::vector<VertexSet> adj(u.size());
    kept.for_each([&](std::size_t v) {
        adj[u.position(g.label(v))] = remap(g.neighbors(v) & kept, g.universe(), u);
    });
    return Graph::from_adjacency(std::move(u), std::move(adj));
}

/// Subgraph induced on V \ S.
inline Graph delete_vertices(const Graph& g, const VertexSet& s) { return induced_subgraph(g, g.universe().all() - s); }

/// Vertex labels and edges of `sub` all occur in `g`.
inline bool is_subgraph(const Graph& sub, const Graph& g)
{
    for (const auto& l : sub.universe().labels())
        if (!g.universe().contains(l))
            return false;
    for (const auto& [a, b] : sub.labeled_edges())
        if (!g.adjacent(g.position(a), g.position(b)))
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Heights

inline constexpr int kNoHeight = -1;

struct HeightProfile {
    /// Distance to the nearest leaf; 0 for isolated vertices; kNoHeight for
    /// vertices in components without leaves.
    std::vector<int> height;
    std::vector<VertexSet> strata;  // strata[k] = V_k
    VertexSet odd;
    VertexSet even;
    int graph_height = 0;
    bool forest = false;
    bool tree = false;
    bool balanced = false;

    const VertexSet& stratum(std::size_t k) const
    {
        static const VertexSet none;
        return k < strata.size() ? strata[k] : none;
    }
};

/// Multi-source BFS from the leaves.
inline HeightProfile heights(const Graph& g)
{
    HeightProfile hp;
    const auto n = g.order();
    hp.height.assign(n, kNoHeight);
    std::deque<std::size_t> queue;
    for (std::size_t v = 0; v < n; ++v)
        if (g.degree(v) <= 1) {
            hp.height[v] = 0;
            if (g.degree(v) == 1)
                queue.push_back(v);
        }
    while (!queue.empty()) {
        auto v = queue.front();
        queue.pop_front();
        g.neighbors(v).for_each([&](std::size_t w) {
            if (hp.height[w] == kNoHeight) {
                hp.height[w] = hp.height[v] + 1;
                queue.push_back(w);
            }
        });
    }
    bool all_defined = true;
    for (std::size_t v = 0; v < n; ++v) {
        auto h = hp.height[v];
        if (h == kNoHeight) {
            all_defined = false;
            continue;
        }
        if (static_cast<std::size_t>(h) >= hp.strata.size())
            hp.strata.resize(static_cast<std::size_t>(h) + 1);
        hp.strata[static_cast<std::size_t>(h)].insert(v);
        (h % 2 == 1 ? hp.odd : hp.even).insert(v);
        hp.graph_height = std::max(hp.graph_height, h);
    }
    hp.forest = is_forest(g);
    hp.tree = hp.forest && is_tree(g);
    hp.balanced = hp.forest && all_defined;
    for (auto [a, b] : g.edges())
        if (hp.height[a] == hp.height[b])
            hp.balanced = false;
    return hp;
}

namespace detail {

inline HeightProfile require_balanced_forest(const Graph& g, const char* op)
{
    auto hp = heights(g);
    if (!hp.balanced)
        throw PreconditionError(std::string(op) + " needs a balanced forest");
    return hp;
}

inline std::vector<VertexSet> neighborhoods_of(const Graph& g, const VertexSet& vertices)
{
    std::vector<VertexSet> out;
    vertices.for_each([&](std::size_t v) { out.push_back(g.neighbors(v)); });
    return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Neighbourhood ideals

/// Generated by all open neighbourhoods; an isolated vertex makes it the unit ideal.
inline SquareFreeIdeal oni(const Graph& g) { return SquareFreeIdeal(g.universe(), detail::neighborhoods_of(g, g.universe().all())); }

/// Odd-height neighbourhoods of a balanced forest, as an ideal over V_even.
inline SquareFreeIdeal odd_oni(const Graph& t)
{
    auto hp = detail::require_balanced_forest(t, "odd open neighbourhood ideal");
    auto even = t.universe().restricted(hp.even);
    std::vector<VertexSet> gens;
    for (const auto& n : detail::neighborhoods_of(t, hp.odd))
        gens.push_back(remap(n, t.universe(), even));
    return SquareFreeIdeal(even, std::move(gens));
}

/// Neighbourhoods in `sub` of the vertices of `sub` that have odd height in
/// `t`. Over V(sub) ∩ V_even(t) when `t` is balanced, over V(sub) otherwise.
inline SquareFreeIdeal induced_odd_oni(const Graph& sub, const Graph& t)
{
    if (!is_subgraph(sub, t))
        throw InputError("induced odd open neighbourhood ideal: not a subgraph");
    auto hp = heights(t);
    bool has_leaf = false;
    for (std::size_t v = 0; v < t.order(); ++v)
        if (t.degree(v) == 1)
            has_leaf = true;
    if (!has_leaf)
        throw PreconditionError("induced odd open neighbourhood ideal: graph has no leaf");

    VertexSet odd_in_sub, even_in_sub;
    for (std::size_t v = 0; v < sub.order(); ++v) {
        auto h = hp.height[t.position(sub.label(v))];
        if (h != kNoHeight && h % 2 == 1)
            odd_in_sub.insert(v);
        else if (h != kNoHeight)
            even_in_sub.insert(v);
    }
    auto target = hp.balanced ? sub.universe().restricted(even_in_sub) : sub.universe();
    std::vector<VertexSet> gens;
    for (const auto& n : detail::neighborhoods_of(sub, odd_in_sub))
        gens.push_back(remap(n, sub.universe(), target));
    return SquareFreeIdeal(target, std::move(gens));
}

// ---------------------------------------------------------------------------
// Total dominating sets

/// Minimal S with N(S) = V. Empty when some vertex is isolated.
inline SpernerFamily minimal_td_sets(const Graph& g)
{
    return minimal_transversals(minimize_family(g.universe(), detail::neighborhoods_of(g, g.universe().all())));
}

/// Minimal S with N(S) = V_odd in a balanced forest.
inline SpernerFamily minimal_odd_td_sets(const Graph& t)
{
    auto hp = detail::require_balanced_forest(t, "odd total domination");
    return minimal_transversals(minimize_family(t.universe(), detail::neighborhoods_of(t, hp.odd)));
}

namespace detail {
inline bool all_same_size(const SpernerFamily& f)
{
    return std::all_of(f.begin(), f.end(), [&](const VertexSet& s) { return s.size() == f[0].size(); });
}
}  // namespace detail

/// Enumerative test: every minimal TD-set has the same size (vacuous when
/// there are none).
inline bool is_td_unmixed(const Graph& g) { return detail::all_same_size(minimal_td_sets(g)); }

inline bool is_odd_td_unmixed(const Graph& t) { return detail::all_same_size(minimal_odd_td_sets(t)); }

namespace detail {

/// The three structural conditions on one component of a balanced forest.
inline bool structural_unmixed_component(const Graph& g, const HeightProfile& hp, const VertexSet& comp)
{
    int top = 0;
    comp.for_each([&](std::size_t v) { top = std::max(top, hp.height[v]); });
    if (top > 3)
        return false;
    bool ok = true;
    comp.for_each([&](std::size_t v) {
        if (hp.height[v] == 2 && (g.neighbors(v) & hp.stratum(1)).size() != 1)
            ok = false;
        if (hp.height[v] == 1) {
            auto up = (g.neighbors(v) & hp.stratum(2)).size();
            if (up > 1 || (top == 3 && up != 1))
                ok = false;
        }
    });
    return ok;
}

}  // namespace detail

/// Structural characterization for balanced trees: height at most 3, every
/// height-2 vertex has exactly one height-1 neighbour, every height-1 vertex
/// at most one height-2 neighbour (exactly one when the height is 3).
inline bool is_td_unmixed_structural(const Graph& t)
{
    auto hp = heights(t);
    if (!hp.tree || !hp.balanced)
        throw PreconditionError("structural unmixedness test needs a balanced tree");
    return detail::structural_unmixed_component(t, hp, t.universe().all());
}

/// Balanced forest whose every component passes the structural test.
inline bool is_td_unmixed_balanced_forest(const Graph& f)
{
    auto hp = heights(f);
    if (!hp.balanced)
        return false;
    for (const auto& comp : connected_components(f))
        if (!detail::structural_unmixed_component(f, hp, comp))
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Stable complexes

/// Complements of the minimal TD-sets; VOID when there are none.
inline SimplicialComplex stable_complex(const Graph& g)
{
    std::vector<VertexSet> facets;
    for (const auto& d : minimal_td_sets(g))
        facets.push_back(g.universe().all() - d);
    return SimplicialComplex(g.universe(), std::move(facets));
}

/// Complements in V_even of the minimal odd-TD-sets, on V_even.
inline SimplicialComplex even_stable_complex(const Graph& t)
{
    auto hp = detail::require_balanced_forest(t, "even-stable complex");
    auto even = t.universe().restricted(hp.even);
    std::vector<VertexSet> facets;
    for (const auto& d : minimal_odd_td_sets(t))
        facets.push_back(remap(hp.even - d, t.universe(), even));
    return SimplicialComplex(even, std::move(facets));
}

// ---------------------------------------------------------------------------
// Builders

/// Path on vertices "0".."n".
inline Graph path_graph(std::size_t n)
{
    std::vector<std::string> vs;
    std::vector<Edge> es;
    for (std::size_t i = 0; i <= n; ++i) {
        vs.push_back(std::to_string(i));
        if (i > 0)
            es.emplace_back(std::to_string(i - 1), std::to_string(i));
    }
    return Graph(vs, es);
}

/// Disjoint union plus the edge {a, b}, a in `g1` and b in `g2`.
inline Graph edge_join(const Graph& g1, const Graph& g2, std::string_view a, std::string_view b)
{
    for (const auto& l : g2.universe().labels())
        if (g1.universe().contains(l))
            throw InputError("edge join: label '" + l + "' occurs in both graphs");
    if (!g1.universe().contains(a))
        throw InputError("edge join: '" + std::string(a) + "' is not a vertex of the first graph");
    if (!g2.universe().contains(b))
        throw InputError("edge join: '" + std::string(b) + "' is not a vertex of the second graph");
    auto vs = g1.universe().labels();
    vs.insert(vs.end(), g2.universe().labels().begin(), g2.universe().labels().end());
    auto es = g1.labeled_edges();
    auto es2 = g2.labeled_edges();
    es.insert(es.end(), es2.begin(), es2.end());
    es.emplace_back(std::string(a), std::string(b));
    return Graph(std::move(vs), es);
}

namespace detail {

/// Next free k for fresh labels "p{k}_{i}".
inline std::size_t next_fresh_block(const Universe& u)
{
    std::size_t next = 1;
    for (const auto& l : u.labels()) {
        if (l.size() < 4 || l[0] != 'p')
            continue;
        auto us = l.find('_');
        if (us == std::string::npos || us == 1)
            continue;
        std::size_t k = 0;
        auto [ptr, ec] = std::from_chars(l.data() + 1, l.data() + us, k);
        if (ec == std::errc{} && ptr == l.data() + us)
            next = std::max(next, k + 1);
    }
    return next;
}

}  // namespace detail

/// Grows a balanced tree of height 3 at a vertex of positive height: a new
/// leaf at height 1, a pendant P_3 hung from its end vertex 3 at height 2,
/// a pendant P_2 hung from its end vertex 2 at height 3. New vertices are
/// labelled "p{k}_{i}" with k fresh for the graph.
inline Graph o_extend(const Graph& t, std::string_view v)
{
    auto pos = t.universe().find(v);
    if (!pos)
        throw InputError("'" + std::string(v) + "' is not a vertex of the tree");
    auto hp = heights(t);
    if (!hp.tree || !hp.balanced || hp.graph_height != 3)
        throw PreconditionError("extension needs a balanced tree of height 3");
    auto h = hp.height[*pos];
    if (h <= 0)
        throw InputError("cannot extend at '" + std::string(v) + "': it has height 0");

    const std::size_t length = h == 1 ? 0 : (h == 2 ? 3 : 2);
    const auto block = "p" + std::to_string(detail::next_fresh_block(t.universe())) + "_";
    std::vector<std::string> fresh;
    std::vector<Edge> path_edges;
    for (std::size_t i = 0; i <= length; ++i) {
        fresh.push_back(block + std::to_string(i));
        if (i > 0)
            path_edges.emplace_back(fresh[i - 1], fresh[i]);
    }
    return edge_join(t, Graph(fresh, path_edges), v, fresh.back());
}

/// Folds o_extend over `vertices`, starting from the path P_6.
inline Graph o_sequence(const std::vector<std::string>& vertices)
{
    auto t = path_graph(6);
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        try {
            t = o_extend(t, vertices[i]);
        } catch (const InputError& e) {
            throw InputError("step " + std::to_string(i + 1) + ": " + e.what());
        } catch (const PreconditionError& e) {
            throw PreconditionError("step " + std::to_string(i + 1) + ": " + e.what());
        }
    }
    return t;
}

/// Canonically first height-2 vertex of degree 2 in a TD-unmixed balanced
/// tree of height 3.
inline std::size_t find_split_vertex(const Graph& t)
{
    auto hp = heights(t);
    if (!hp.tree || !hp.balanced || hp.graph_height != 3 || !is_td_unmixed_structural(t))
        throw PreconditionError("split vertex needs a TD-unmixed balanced tree of height 3");
    std::optional<std::size_t> found;
    hp.stratum(2).for_each([&](std::size_t u) {
        if (!found && t.degree(u) == 2)
            found = u;
    });
    if (!found)
        throw PreconditionError("no height-2 vertex of degree 2");
    return *found;
}

// ---------------------------------------------------------------------------
// Decompositions of trees into two balanced forests

struct TreeDecomposition {
    Graph first;
    Graph second;
};

struct DecompositionCheck {
    bool balanced = false;   // both pieces are balanced forests
    bool partition = false;  // V = V_even(T') ⊔ V_even(T'') ⊔ V_1(T)
    bool ideal_sum = false;  // N(T) = N_odd(T') + N_odd(T'') + <V_1(T)>
    bool ok() const { return balanced && partition && ideal_sum; }
};

inline DecompositionCheck check_decomposition(const Graph& t, const Graph& first, const Graph& second)
{
    if (!is_tree(t))
        throw PreconditionError("decomposition needs a tree");
    if (!is_subgraph(first, t) || !is_subgraph(second, t))
        throw InputError("decomposition pieces must be subgraphs of the tree");
    DecompositionCheck out;
    auto h1 = heights(first), h2 = heights(second), ht = heights(t);
    out.balanced = h1.balanced && h2.balanced;
    if (!out.balanced)
        return out;

    const auto& u = t.universe();
    auto e1 = remap(h1.even, first.universe(), u);
    auto e2 = remap(h2.even, second.universe(), u);
    const auto& v1 = ht.stratum(1);
    out.partition = !e1.intersects(e2) && !e1.intersects(v1) && !e2.intersects(v1) && (e1 | e2 | v1) == u.all();

    auto total = sum(sum(odd_oni(first).extended_to(u), odd_oni(second).extended_to(u)), SquareFreeIdeal::variables(u, v1));
    out.ideal_sum = total == oni(t);
    return out;
}

inline bool verify_decomposition(const Graph& t, const Graph& first, const Graph& second)
{
    return check_decomposition(t, first, second).ok();
}

namespace detail {

/// Pieces determined by a choice of V_even(T'): T' is induced on those
/// vertices plus every vertex whose neighbourhood avoids V_1 and lies inside
/// them; T'' likewise for the remaining non-V_1 vertices.
inline TreeDecomposition decomposition_from_side(const Graph& t, const VertexSet& v1, const VertexSet& side)
{
    auto rest = t.universe().all() - v1 - side;
    auto piece = [&](const VertexSet& even) {
        auto keep = even;
        for (std::size_t v = 0; v < t.order(); ++v)
            if (!even.contains(v) && !t.neighbors(v).intersects(v1) && !t.neighbors(v).empty()
                && t.neighbors(v).is_subset_of(even))
                keep.insert(v);
        return induced_subgraph(t, keep);
    };
    return {piece(side), piece(rest)};
}

}  // namespace detail

inline constexpr std::size_t kDefaultDecompositionCap = 18;

/// Tries the colour-class split first (the even side of T' is one bipartition
/// class minus V_1); falls back to enumerating all choices of V_even(T'),
/// which is capped. Only verifier-approved pieces are returned.
inline std::optional<TreeDecomposition> search_decomposition(const Graph& t, std::size_t cap = kDefaultDecompositionCap)
{
    if (!is_tree(t))
        throw PreconditionError("decomposition needs a tree");
    auto hp = heights(t);
    const auto& v1 = hp.stratum(1);

    VertexSet colour;
    std::vector<int> side(t.order(), -1);
    side[0] = 0;
    std::vector<std::size_t> stack{0};
    while (!stack.empty()) {
        auto v = stack.back();
        stack.pop_back();
        if (side[v] == 0)
            colour.insert(v);
        t.neighbors(v).for_each([&](std::size_t w) {
            if (side[w] < 0) {
                side[w] = 1 - side[v];
                stack.push_back(w);
            }
        });
    }
    // Prefer the class containing the canonically first leaf.
    auto leaves = hp.stratum(0);
    if (auto l = leaves.first(); l && !colour.contains(*l))
        colour = t.universe().all() - colour;
    for (const auto& candidate : {colour - v1, t.universe().all() - colour - v1}) {
        auto d = detail::decomposition_from_side(t, v1, candidate);
        if (verify_decomposition(t, d.first, d.second))
            return d;
    }

    if (t.order() > cap)
        throw ResourceError("decomposition search cap exceeded: tree has " + std::to_string(t.order())
                            + " vertices, cap is " + std::to_string(cap));
    auto free = (t.universe().all() - v1).members();
    const std::uint64_t limit = std::uint64_t{1} << free.size();
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        VertexSet chosen;
        for (std::size_t i = 0; i < free.size(); ++i)
            if ((mask >> i) & 1U)
                chosen.insert(free[i]);
        auto d = detail::decomposition_from_side(t, v1, chosen);
        if (verify_decomposition(t, d.first, d.second))
            return d;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Chordal graphs and realization

/// Maximum cardinality search followed by the perfect elimination ordering check.
inline bool is_chordal(const Graph& g)
{
    const auto n = g.order();
    std::vector<int> weight(n, 0);
    std::vector<int> visit_index(n, -1);
    std::vector<std::size_t> order;
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t best = n;
        for (std::size_t v = 0; v < n; ++v)
            if (visit_index[v] < 0 && (best == n || weight[v] > weight[best]))
                best = v;
        visit_index[best] = static_cast<int>(step);
        order.push_back(best);
        g.neighbors(best).for_each([&](std::size_t w) {
            if (visit_index[w] < 0)
                ++weight[w];
        });
    }
    // Each vertex's earlier-visited neighbours, minus the latest of them, must
    // be adjacent to that latest one.
    for (auto v : order) {
        VertexSet earlier;
        std::optional<std::size_t> latest;
        g.neighbors(v).for_each([&](std::size_t w) {
            if (visit_index[w] < visit_index[v]) {
                earlier.insert(w);
                if (!latest || visit_index[w] > visit_index[*latest])
                    latest = w;
            }
        });
        if (latest) {
            earlier.erase(*latest);
            if (!earlier.is_subset_of(g.neighbors(*latest)))
                return false;
        }
    }
    return true;
}

/// Complete graph on the ground set plus one vertex t_i per minimal
/// transversal T_i with N(t_i) = T_i. Its minimal TD-sets are exactly the
/// family, and its open neighbourhood ideal is minimally generated by the
/// transversals.
inline Graph realize_as_oni(const SpernerFamily& family)
{
    const auto& u = family.universe();
    if (family.empty())
        throw InputError("realization needs a nonempty family");
    for (const auto& a : family)
        if (a.size() <= 1)
            throw InputError("realization: member " + u.format(a) + " has fewer than two elements");
    if (family.support() != u.all())
        throw InputError("realization: the members do not cover the ground set");

    auto transversals = minimal_transversals(family);
    std::vector<std::string> vs = u.labels();
    std::vector<Edge> es;
    for (std::size_t a = 0; a < u.size(); ++a)
        for (std::size_t b = a + 1; b < u.size(); ++b)
            es.emplace_back(u.label(a), u.label(b));
    for (std::size_t i = 0; i < transversals.size(); ++i) {
        auto t = "t" + std::to_string(i + 1);
        if (u.contains(t))
            throw InputError("realization: label '" + t + "' is already used by the ground set");
        vs.push_back(t);
        for (const auto& m : u.labels_of(transversals[i]))
            es.emplace_back(t, m);
    }
    return Graph(std::move(vs), es);
}

}  // namespace onikit

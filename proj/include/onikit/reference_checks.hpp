#pragma once

// Golden checks on the worked examples (the realization family, P_6, T_A,
// the height-3 base case, the 7-cycle). The transversal kernel is injectable
// so that a broken kernel can be shown to be caught.

#include <functional>
#include <string>
#include <vector>

#include "onikit/complex.hpp"
#include "onikit/fixtures.hpp"
#include "onikit/graph.hpp"
#include "onikit/gvd.hpp"

namespace onikit {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

using Dualizer = std::function<SpernerFamily(const SpernerFamily&)>;

namespace detail {

inline SpernerFamily labeled_family(const Universe& u, const std::vector<std::vector<std::string>>& sets)
{
    std::vector<VertexSet> out;
    for (const auto& s : sets)
        out.push_back(u.set_of(s));
    return SpernerFamily(u, std::move(out));
}

inline SquareFreeIdeal labeled_ideal(const Universe& u, const std::vector<std::vector<std::string>>& sets)
{
    std::vector<VertexSet> out;
    for (const auto& s : sets)
        out.push_back(u.set_of(s));
    return SquareFreeIdeal(u, std::move(out));
}

class CheckList {
public:
    void expect(std::string name, bool ok, std::string detail = {})
    {
        results_.push_back({std::move(name), ok, ok ? std::string{} : std::move(detail)});
    }

    template <class T>
    void expect_format(std::string name, const T& got, const T& want)
    {
        expect(std::move(name), got == want, "got " + got.format() + ", expected " + want.format());
    }

    /// Runs `body`, recording a failure instead of propagating errors.
    template <class F>
    void guarded(const std::string& name, F&& body)
    {
        try {
            body();
        } catch (const std::exception& e) {
            expect(name, false, std::string("threw: ") + e.what());
        }
    }

    std::vector<CheckResult> take() { return std::move(results_); }

private:
    std::vector<CheckResult> results_;
};

}  // namespace detail

inline std::vector<CheckResult> run_reference_checks(const Dualizer& dual = minimal_transversals)
{
    detail::CheckList checks;
    using detail::labeled_family;
    using detail::labeled_ideal;

    checks.guarded("realization family", [&] {
        auto a = fixtures::beg_a();
        const auto& u = a.universe();
        auto tau = dual(a);
        auto printed = labeled_family(u, {{"v1", "v3"}, {"v1", "v5"}, {"v2", "v3"}, {"v2", "v4"}, {"v3", "v4"}});
        checks.expect_format("realization family: minimal transversals", tau, printed);
        checks.expect("realization family: double dual", dual(tau) == a);

        auto g = realize_as_oni(a);
        checks.expect("realization graph: 10 vertices", g.order() == 10, "got " + std::to_string(g.order()));
        auto td = dual(minimize_family(g.universe(), [&] {
            std::vector<VertexSet> n;
            for (std::size_t v = 0; v < g.order(); ++v)
                n.push_back(g.neighbors(v));
            return n;
        }()));
        checks.expect_format("realization graph: minimal TD-sets", td, a.over(g.universe()));
        checks.expect_format("realization graph: neighbourhood ideal",
                             oni(g),
                             labeled_ideal(g.universe(), {{"v1", "v3"}, {"v1", "v5"}, {"v2", "v3"}, {"v2", "v4"}, {"v3", "v4"}}));
        checks.expect("realization graph: chordal", is_chordal(g));
    });

    checks.guarded("path P6", [&] {
        auto p = fixtures::p6();
        const auto& u = p.universe();
        auto hp = heights(p);
        checks.expect("P6: heights 0,1,2,3,2,1,0", hp.height == std::vector<int>{0, 1, 2, 3, 2, 1, 0} && hp.balanced);
        checks.expect_format("P6: minimal TD-sets", minimal_td_sets(p),
                             labeled_family(u, {{"0", "1", "4", "5"}, {"1", "2", "4", "5"}, {"1", "2", "5", "6"}}));
        checks.expect_format("P6: minimal odd TD-sets", minimal_odd_td_sets(p),
                             labeled_family(u, {{"0", "4"}, {"2", "4"}, {"2", "6"}}));
        checks.expect_format("P6: neighbourhood ideal", oni(p),
                             labeled_ideal(u, {{"1"}, {"5"}, {"0", "2"}, {"2", "4"}, {"4", "6"}}));
        auto odd = odd_oni(p);
        checks.expect_format("P6: odd neighbourhood ideal", odd,
                             labeled_ideal(odd.universe(), {{"0", "2"}, {"2", "4"}, {"4", "6"}}));
        checks.expect_format("P6: stable complex", stable_complex(p).facets(),
                             labeled_family(u, {{"0", "3", "6"}, {"2", "3", "6"}, {"0", "3", "4"}}));
        auto se = even_stable_complex(p);
        checks.expect_format("P6: even-stable complex", se.facets(),
                             labeled_family(se.universe(), {{"0", "4"}, {"0", "6"}, {"2", "6"}}));
        checks.expect("P6: TD-unmixed", is_td_unmixed(p) && is_td_unmixed_structural(p));
        checks.expect("P6: split vertex", p.label(find_split_vertex(p)) == "2");
        auto [c, n] = split(odd, "4");
        checks.expect_format("P6: C at 4", c, labeled_ideal(c.universe(), {{"2"}, {"6"}}));
        checks.expect_format("P6: N at 4", n, labeled_ideal(n.universe(), {{"0", "2"}}));
        checks.expect("P6: odd neighbourhood ideal is GVD", is_gvd(odd).gvd);
        checks.expect("P6: tree certificate validates", validate_certificate(odd, *certify_tree_gvd(p)));
        checks.expect("P6: even-stable complex is vertex decomposable", is_vertex_decomposable(se).decomposable);
        auto iso = induced_subgraph(p, u.set({"3"}));
        checks.expect("P6: decomposition with isolated 3", verify_decomposition(p, p, iso));
        checks.expect("P6: decomposition needs vertex 3",
                      !verify_decomposition(p, p, Graph(std::vector<std::string>{}, {})));
    });

    checks.guarded("tree T_A", [&] {
        auto t = fixtures::t_a();
        const auto& u = t.universe();
        auto hp = heights(t);
        checks.expect("T_A: neighbourhoods",
                      t.neighbors(u.position("l1")) == u.set({"s1"}) && t.neighbors(u.position("s1")) == u.set({"l1", "u1"})
                          && t.neighbors(u.position("u1")) == u.set({"s1", "r1"})
                          && t.neighbors(u.position("r1")) == u.set({"u1", "u2"}));
        checks.expect("T_A: height strata",
                      hp.stratum(0) == u.set({"l1", "l2", "l3", "l4"}) && hp.stratum(1) == u.set({"s1", "s2", "s3"})
                          && hp.stratum(2) == u.set({"u1", "u2", "u3"}) && hp.stratum(3) == u.set({"r1", "r2"}));
        checks.expect_format("T_A: neighbourhood ideal", oni(t),
                             labeled_ideal(u, {{"s1"}, {"s2"}, {"s3"}, {"l1", "u1"}, {"l2", "u2"}, {"l3", "l4", "u3"},
                                               {"u1", "u2"}, {"u2", "u3"}}));
        auto odd = odd_oni(t);
        checks.expect_format("T_A: odd neighbourhood ideal", odd,
                             labeled_ideal(odd.universe(),
                                           {{"l1", "u1"}, {"l2", "u2"}, {"l3", "l4", "u3"}, {"u1", "u2"}, {"u2", "u3"}}));
        checks.expect("T_A: TD-unmixed", is_td_unmixed(t) && is_td_unmixed_structural(t));
        checks.expect("T_A: split vertex", t.label(find_split_vertex(t)) == "u1");
        auto minus_u = delete_vertices(t, u.set({"u1"}));
        auto c = induced_odd_oni(minus_u, t);
        checks.expect_format("T_A: induced ideal without u1", c,
                             labeled_ideal(c.universe(), {{"l1"}, {"u2"}, {"l3", "l4", "u3"}}));
        auto minus_nu = delete_vertices(t, u.set({"u1", "s1", "r1"}));
        auto n = induced_odd_oni(minus_nu, t);
        checks.expect_format("T_A: induced ideal without N[u1]", n,
                             labeled_ideal(n.universe(), {{"l2", "u2"}, {"l3", "l4", "u3"}, {"u2", "u3"}}));
        checks.expect("T_A: tree certificate validates", validate_certificate(odd, *certify_tree_gvd(t)));
        auto iso = induced_subgraph(t, u.set({"r1", "r2"}));
        checks.expect("T_A: decomposition with isolated r1, r2", verify_decomposition(t, t, iso));
    });

    checks.guarded("base case", [&] {
        auto t = fixtures::base_case();
        auto odd = odd_oni(t);
        const auto& u = odd.universe();
        checks.expect_format("base case: odd neighbourhood ideal", odd,
                             labeled_ideal(u, {{"u", "u'"}, {"u'", "l1'", "l2'"}, {"u", "l1", "l2"}}));
        auto [c, n] = split(odd, "u");
        checks.expect_format("base case: C at u", c, labeled_ideal(c.universe(), {{"u'"}, {"l1", "l2"}}));
        checks.expect_format("base case: N at u", n, labeled_ideal(n.universe(), {{"u'", "l1'", "l2'"}}));
    });

    checks.guarded("7-cycle", [&] {
        auto i = fixtures::edge_ideal(fixtures::c7());
        checks.expect("7-cycle: edge ideal unmixed", is_unmixed(i));
        checks.expect("7-cycle: not GVD", !is_gvd(i).gvd);
        checks.expect("7-cycle: complex not vertex decomposable",
                      !is_vertex_decomposable(stanley_reisner_complex(i)).decomposable);
    });

    return checks.take();
}

/// A deliberately wrong kernel: drops the last minimal transversal.
inline SpernerFamily faulty_transversals(const SpernerFamily& f)
{
    auto sets = minimal_transversals(f).sets();
    if (!sets.empty())
        sets.pop_back();
    return SpernerFamily(f.universe(), std::move(sets));
}

}  // namespace onikit

#pragma once

// Geometric vertex decomposition of square-free monomial ideals: the (C, N)
// split, a memoized search for decomposition certificates, certificate
// validation, and a search-free certifier for odd open neighbourhood ideals
// of TD-unmixed balanced forests.

#include <memory>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "onikit/complex.hpp"
#include "onikit/graph.hpp"
#include "onikit/ideal.hpp"

namespace onikit {

struct SplitResult {
    SquareFreeIdeal c;
    SquareFreeIdeal n;
};

/// C = <m/y : y | m> + N and N = <m : y does not divide m>, both over the
/// universe without y.
inline SplitResult split(const SquareFreeIdeal& ideal, std::string_view y)
{
    const auto& u = ideal.universe();
    auto pos = u.find(y);
    if (!pos)
        throw InputError("split variable '" + std::string(y) + "' is not in the universe");
    auto rest = u.without(VertexSet{*pos});
    std::vector<VertexSet> c, n;
    for (const auto& g : ideal.generators()) {
        if (g.contains(*pos)) {
            c.push_back(remap(g - VertexSet{*pos}, u, rest));
        } else {
            auto moved = remap(g, u, rest);
            c.push_back(moved);
            n.push_back(std::move(moved));
        }
    }
    return {SquareFreeIdeal(rest, std::move(c)), SquareFreeIdeal(rest, std::move(n))};
}

/// I = C ∩ (N + <y>) with C and N re-embedded in the full ring.
inline bool is_valid_geometric_decomposition(const SquareFreeIdeal& ideal, std::string_view y)
{
    const auto& u = ideal.universe();
    auto [c, n] = split(ideal, y);
    auto rhs = intersect(c.extended_to(u), sum(n.extended_to(u), SquareFreeIdeal::variables(u, VertexSet{u.position(y)})));
    return rhs == ideal;
}

struct GvdCertificate {
    enum class Kind { Unit, Zero, Variables, Split };
    Kind kind = Kind::Zero;
    std::string variable;
    std::shared_ptr<const GvdCertificate> c;
    std::shared_ptr<const GvdCertificate> n;

    static std::shared_ptr<const GvdCertificate> base(Kind k)
    {
        auto out = std::make_shared<GvdCertificate>();
        out->kind = k;
        return out;
    }

    static std::shared_ptr<const GvdCertificate> split(std::string y, std::shared_ptr<const GvdCertificate> c,
                                                       std::shared_ptr<const GvdCertificate> n)
    {
        auto out = std::make_shared<GvdCertificate>();
        out->kind = Kind::Split;
        out->variable = std::move(y);
        out->c = std::move(c);
        out->n = std::move(n);
        return out;
    }
};

using GvdCertificatePtr = std::shared_ptr<const GvdCertificate>;

inline bool operator==(const GvdCertificate& a, const GvdCertificate& b)
{
    if (a.kind != b.kind || a.variable != b.variable)
        return false;
    if (a.kind != GvdCertificate::Kind::Split)
        return true;
    return a.c && b.c && a.n && b.n && *a.c == *b.c && *a.n == *b.n;
}

struct GvdResult {
    bool gvd = false;
    GvdCertificatePtr certificate;  // null when not GVD
};

namespace detail {

/// Unmixed in the vacuous sense for the unit ideal.
inline bool unmixed_or_unit(const SquareFreeIdeal& ideal) { return ideal.is_unit() || is_unmixed(ideal); }

inline GvdCertificatePtr base_certificate(const SquareFreeIdeal& ideal)
{
    using Kind = GvdCertificate::Kind;
    if (ideal.is_unit())
        return GvdCertificate::base(Kind::Unit);
    if (ideal.is_zero())
        return GvdCertificate::base(Kind::Zero);
    if (ideal.is_variable_generated())
        return GvdCertificate::base(Kind::Variables);
    return nullptr;
}

class GvdSearch {
public:
    GvdCertificatePtr run(const SquareFreeIdeal& ideal)
    {
        if (auto b = base_certificate(ideal))
            return b;
        auto key = family_key(ideal.generators());
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;

        GvdCertificatePtr found;
        if (is_unmixed(ideal)) {
            // Splitting at a variable outside the support gives C = N = I.
            for (auto y : ideal.support().members()) {
                const auto& label = ideal.universe().label(y);
                if (!is_valid_geometric_decomposition(ideal, label))
                    continue;
                auto [c, n] = split(ideal, label);
                auto cc = run(c);
                if (!cc)
                    continue;
                auto nc = run(n);
                if (!nc)
                    continue;
                found = GvdCertificate::split(label, std::move(cc), std::move(nc));
                break;
            }
        }
        memo_.emplace(std::move(key), found);
        return found;
    }

private:
    std::unordered_map<std::string, GvdCertificatePtr> memo_;
};

}  // namespace detail

/// Tries split variables in canonical order; the first witness is reported.
inline GvdResult is_gvd(const SquareFreeIdeal& ideal)
{
    detail::GvdSearch search;
    auto cert = search.run(ideal);
    return {cert != nullptr, cert};
}

/// Replays every base-case and split check recorded in `cert`.
inline bool validate_certificate(const SquareFreeIdeal& ideal, const GvdCertificate& cert)
{
    using Kind = GvdCertificate::Kind;
    switch (cert.kind) {
    case Kind::Unit: return ideal.is_unit();
    case Kind::Zero: return ideal.is_zero();
    case Kind::Variables: return ideal.is_variable_generated();
    case Kind::Split: break;
    }
    if (!cert.c || !cert.n || !ideal.universe().contains(cert.variable))
        return false;
    if (!detail::unmixed_or_unit(ideal) || !is_valid_geometric_decomposition(ideal, cert.variable))
        return false;
    auto [c, n] = split(ideal, cert.variable);
    return validate_certificate(c, *cert.c) && validate_certificate(n, *cert.n);
}

// ---------------------------------------------------------------------------
// Certificates for odd open neighbourhood ideals of trees

namespace detail {

using Kind = GvdCertificate::Kind;

/// Certificate for <vars> + J from a certificate for J, on disjoint variables.
inline GvdCertificatePtr with_variables(const GvdCertificatePtr& cj)
{
    switch (cj->kind) {
    case Kind::Unit: return cj;
    case Kind::Zero:
    case Kind::Variables: return GvdCertificate::base(Kind::Variables);
    case Kind::Split: break;
    }
    return GvdCertificate::split(cj->variable, with_variables(cj->c), with_variables(cj->n));
}

/// Certificate for I + J from certificates for I and J on disjoint variables:
/// run the splits of I first, then those of J below every leaf of I.
inline GvdCertificatePtr graft(const GvdCertificatePtr& ci, const GvdCertificatePtr& cj)
{
    switch (ci->kind) {
    case Kind::Unit: return ci;
    case Kind::Zero: return cj;
    case Kind::Variables: return with_variables(cj);
    case Kind::Split: break;
    }
    return GvdCertificate::split(ci->variable, graft(ci->c, cj), graft(ci->n, cj));
}

/// Chain for a single monomial: split off the last variable until one remains.
inline GvdCertificatePtr monomial_chain(const std::vector<std::string>& vars)
{
    if (vars.empty())
        return GvdCertificate::base(Kind::Unit);
    auto cert = GvdCertificate::base(Kind::Variables);
    for (std::size_t i = 1; i < vars.size(); ++i)
        cert = GvdCertificate::split(vars[i], cert, GvdCertificate::base(Kind::Zero));
    return cert;
}

inline GvdCertificatePtr forest_certificate(const Graph& forest);

/// Component containing `v` after removing `removed` from `t`.
inline Graph component_after_removal(const Graph& t, const VertexSet& removed, std::size_t v)
{
    auto rest = delete_vertices(t, removed);
    auto p = rest.position(t.label(v));
    for (const auto& comp : connected_components(rest))
        if (comp.contains(p))
            return induced_subgraph(rest, comp);
    return rest;
}

inline GvdCertificatePtr tree_certificate(const Graph& t)
{
    auto hp = heights(t);
    if (hp.graph_height == 0)
        return GvdCertificate::base(Kind::Zero);
    if (hp.graph_height == 1) {
        auto center = *hp.stratum(1).first();
        return monomial_chain(t.universe().labels_of(t.neighbors(center)));
    }
    if (hp.graph_height != 3)
        throw PreconditionError("tree certificate: component of height " + std::to_string(hp.graph_height));

    // u has one neighbour s of height 1, whose other neighbours are leaves,
    // and one neighbour r of height 3.
    auto u = find_split_vertex(t);
    std::size_t r = 0, s = 0;
    t.neighbors(u).for_each([&](std::size_t w) { (hp.height[w] == 1 ? s : r) = w; });

    auto leaves = t.neighbors(s);
    leaves.erase(u);
    auto second = monomial_chain(t.universe().labels_of(leaves));

    GvdCertificatePtr first;
    if (t.degree(r) > 2) {
        first = forest_certificate(component_after_removal(t, VertexSet{u}, r));
    } else {
        auto other = t.neighbors(r);
        other.erase(u);
        auto u2 = *other.first();
        auto t1 = component_after_removal(t, VertexSet{r}, u2);
        auto rest = delete_vertices(t1, closed_neighborhood(t1, t1.position(t.label(u2))));
        first = graft(GvdCertificate::base(Kind::Variables), forest_certificate(rest));
    }
    auto c_branch = graft(first, second);
    auto n_branch = forest_certificate(delete_vertices(t, closed_neighborhood(t, u)));
    return GvdCertificate::split(t.label(u), std::move(c_branch), std::move(n_branch));
}

inline GvdCertificatePtr forest_certificate(const Graph& forest)
{
    auto cert = GvdCertificate::base(Kind::Zero);
    for (const auto& comp : connected_components(forest))
        cert = graft(cert, tree_certificate(induced_subgraph(forest, comp)));
    return cert;
}

}  // namespace detail

/// Certificate for odd_oni(T) built by structural recursion, without search
/// or validation. T must be a TD-unmixed balanced forest.
inline GvdCertificatePtr certify_tree_gvd(const Graph& t)
{
    if (!is_td_unmixed_balanced_forest(t))
        throw PreconditionError("tree certificate needs a TD-unmixed balanced forest");
    return detail::forest_certificate(t);
}

}  // namespace onikit

#pragma once

// Simplicial complexes given by their facets, vertex decomposability with
// shedding certificates, the Stanley-Reisner correspondence, facet ideals and
// simplicial trees.

#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "onikit/ideal.hpp"
#include "onikit/universe.hpp"

namespace onikit {

enum class ComplexKind { Void, Empty, Ordinary };

inline const char* to_string(ComplexKind k)
{
    switch (k) {
    case ComplexKind::Void: return "void";
    case ComplexKind::Empty: return "empty";
    case ComplexKind::Ordinary: return "ordinary";
    }
    return "?";
}

/// VOID has no faces, EMPTY has only the empty face, ORDINARY has at least
/// one nonempty facet.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// Complex generated by `faces`; the facets are the maximal ones.
    SimplicialComplex(const Universe& universe, std::vector<VertexSet> faces)
        : facets_(maximize_family(universe, std::move(faces)))
    {
    }

    explicit SimplicialComplex(SpernerFamily facets) : facets_(std::move(facets)) {}

    static SimplicialComplex void_complex(const Universe& u) { return SimplicialComplex(u, {}); }
    static SimplicialComplex empty_complex(const Universe& u) { return SimplicialComplex(u, {VertexSet{}}); }
    static SimplicialComplex simplex(const Universe& u, const VertexSet& face) { return SimplicialComplex(u, {face}); }
    static SimplicialComplex full_simplex(const Universe& u) { return simplex(u, u.all()); }

    const Universe& universe() const { return facets_.universe(); }
    const SpernerFamily& facets() const { return facets_; }

    ComplexKind kind() const
    {
        if (facets_.empty())
            return ComplexKind::Void;
        if (facets_.size() == 1 && facets_[0].empty())
            return ComplexKind::Empty;
        return ComplexKind::Ordinary;
    }

    bool is_face(const VertexSet& s) const
    {
        for (const auto& f : facets_)
            if (s.is_subset_of(f))
                return true;
        return false;
    }

    /// Vertices lying in some facet.
    VertexSet vertices() const { return facets_.support(); }

    SimplicialComplex extended_to(const Universe& target) const { return SimplicialComplex(facets_.over(target)); }

    std::string format() const
    {
        if (kind() == ComplexKind::Void)
            return "void";
        return "<" + facets_.format() + ">";
    }

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) { return a.facets_ == b.facets_; }

private:
    SpernerFamily facets_;
};

inline SimplicialComplex deletion(const SimplicialComplex& complex, const VertexSet& face)
{
    std::vector<VertexSet> faces;
    for (const auto& f : complex.facets())
        faces.push_back(f - face);
    return SimplicialComplex(complex.universe(), std::move(faces));
}

/// VOID when `face` is not a face.
inline SimplicialComplex link(const SimplicialComplex& complex, const VertexSet& face)
{
    std::vector<VertexSet> faces;
    for (const auto& f : complex.facets())
        if (face.is_subset_of(f))
            faces.push_back(f - face);
    return SimplicialComplex(complex.universe(), std::move(faces));
}

struct DimensionProfile {
    int dimension = -1;
    bool pure = true;
};

inline DimensionProfile dimension_profile(const SimplicialComplex& complex)
{
    if (complex.kind() == ComplexKind::Void)
        throw PreconditionError("void complex has no dimension");
    DimensionProfile out;
    const auto first = complex.facets()[0].size();
    std::size_t top = 0;
    for (const auto& f : complex.facets()) {
        top = std::max(top, f.size());
        if (f.size() != first)
            out.pure = false;
    }
    out.dimension = static_cast<int>(top) - 1;
    return out;
}

inline bool is_pure(const SimplicialComplex& complex)
{
    return complex.kind() == ComplexKind::Void || dimension_profile(complex).pure;
}

inline bool is_shedding_vertex(const SimplicialComplex& complex, std::size_t vertex)
{
    if (complex.kind() != ComplexKind::Ordinary)
        throw PreconditionError("shedding test needs an ordinary complex");
    auto del = deletion(complex, VertexSet{vertex});
    for (const auto& f : del.facets())
        if (!complex.facets().contains_set(f))
            return false;
    return true;
}

// ---------------------------------------------------------------------------
// Vertex decomposability

struct SheddingCertificate {
    enum class Kind { Simplex, Empty, Shed };
    Kind kind = Kind::Empty;
    std::string vertex;
    std::shared_ptr<const SheddingCertificate> del;
    std::shared_ptr<const SheddingCertificate> link;

    static std::shared_ptr<const SheddingCertificate> leaf(Kind k)
    {
        auto c = std::make_shared<SheddingCertificate>();
        c->kind = k;
        return c;
    }

    static std::shared_ptr<const SheddingCertificate> shed(std::string v, std::shared_ptr<const SheddingCertificate> d,
                                                           std::shared_ptr<const SheddingCertificate> l)
    {
        auto c = std::make_shared<SheddingCertificate>();
        c->kind = Kind::Shed;
        c->vertex = std::move(v);
        c->del = std::move(d);
        c->link = std::move(l);
        return c;
    }
};

using SheddingCertificatePtr = std::shared_ptr<const SheddingCertificate>;

struct VdResult {
    bool decomposable = false;
    SheddingCertificatePtr certificate;  // null when not decomposable
};

namespace detail {

inline std::string family_key(const SpernerFamily& family)
{
    std::string key;
    for (const auto& s : family) {
        s.for_each([&](std::size_t p) {
            key += family.universe().label(p);
            key += '\x1f';
        });
        key += '\x1e';
    }
    return key;
}

class VdSearch {
public:
    SheddingCertificatePtr run(const SimplicialComplex& complex)
    {
        switch (complex.kind()) {
        case ComplexKind::Void:
        case ComplexKind::Empty: return SheddingCertificate::leaf(SheddingCertificate::Kind::Empty);
        case ComplexKind::Ordinary: break;
        }
        if (complex.facets().size() == 1)
            return SheddingCertificate::leaf(SheddingCertificate::Kind::Simplex);
        if (!dimension_profile(complex).pure)
            return nullptr;

        auto key = family_key(complex.facets());
        if (auto it = memo_.find(key); it != memo_.end())
            return it->second;

        SheddingCertificatePtr found;
        auto candidates = complex.vertices().members();
        for (auto v : candidates) {
            if (!is_shedding_vertex(complex, v))
                continue;
            auto d = run(deletion(complex, VertexSet{v}));
            if (!d)
                continue;
            auto l = run(link(complex, VertexSet{v}));
            if (!l)
                continue;
            found = SheddingCertificate::shed(complex.universe().label(v), std::move(d), std::move(l));
            break;
        }
        memo_.emplace(std::move(key), found);
        return found;
    }

private:
    std::unordered_map<std::string, SheddingCertificatePtr> memo_;
};

}  // namespace detail

/// Searches shedding vertices in canonical order and reports the first
/// witness. The input must be pure (VOID is accepted as a base case).
inline VdResult is_vertex_decomposable(const SimplicialComplex& complex)
{
    if (complex.kind() != ComplexKind::Void && !dimension_profile(complex).pure)
        throw PreconditionError("vertex decomposability is defined for pure complexes; input is impure");
    detail::VdSearch search;
    auto cert = search.run(complex);
    return {cert != nullptr, cert};
}

/// Replays every shedding test and base case recorded in `cert`.
inline bool validate_shedding_certificate(const SimplicialComplex& complex, const SheddingCertificate& cert)
{
    using Kind = SheddingCertificate::Kind;
    switch (cert.kind) {
    case Kind::Empty: return complex.kind() != ComplexKind::Ordinary;
    case Kind::Simplex: return complex.facets().size() == 1;
    case Kind::Shed: break;
    }
    if (complex.kind() != ComplexKind::Ordinary || !cert.del || !cert.link)
        return false;
    if (!dimension_profile(complex).pure)
        return false;
    auto v = complex.universe().find(cert.vertex);
    if (!v || !complex.vertices().contains(*v) || !is_shedding_vertex(complex, *v))
        return false;
    return validate_shedding_certificate(deletion(complex, VertexSet{*v}), *cert.del)
        && validate_shedding_certificate(link(complex, VertexSet{*v}), *cert.link);
}

/// Join of complexes on disjoint vertex sets.
inline SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b)
{
    for (const auto& l : b.universe().labels())
        if (a.universe().contains(l))
            throw InputError("join: universes share the label '" + l + "'");
    auto u = union_of(a.universe(), b.universe());
    std::vector<VertexSet> faces;
    for (const auto& f : a.facets()) {
        auto fa = remap(f, a.universe(), u);
        for (const auto& g : b.facets())
            faces.push_back(fa | remap(g, b.universe(), u));
    }
    return SimplicialComplex(u, std::move(faces));
}

// ---------------------------------------------------------------------------
// Stanley-Reisner correspondence

/// Minimal non-faces: the minimal sets meeting every facet complement.
inline SquareFreeIdeal stanley_reisner_ideal(const SimplicialComplex& complex)
{
    const auto& u = complex.universe();
    std::vector<VertexSet> complements;
    for (const auto& f : complex.facets())
        complements.push_back(u.all() - f);
    return SquareFreeIdeal(minimal_transversals(minimize_family(u, std::move(complements))));
}

/// Facets are the complements of the minimal primes. The unit ideal maps to
/// the void complex, the zero ideal to the full simplex.
inline SimplicialComplex stanley_reisner_complex(const SquareFreeIdeal& ideal)
{
    const auto& u = ideal.universe();
    auto primes = minimal_transversals(ideal.generators());
    std::vector<VertexSet> facets;
    for (const auto& p : primes)
        facets.push_back(u.all() - p);
    return SimplicialComplex(u, std::move(facets));
}

// ---------------------------------------------------------------------------
// Facet ideals, covers, leaves

namespace detail {
inline void require_ordinary(const SimplicialComplex& complex, const char* op)
{
    if (complex.kind() != ComplexKind::Ordinary)
        throw PreconditionError(std::string(op) + " needs an ordinary complex, got a "
                                + to_string(complex.kind()) + " one");
}
}  // namespace detail

inline SquareFreeIdeal facet_ideal(const SimplicialComplex& complex)
{
    detail::require_ordinary(complex, "facet ideal");
    return SquareFreeIdeal(complex.facets());
}

inline SpernerFamily minimal_vertex_covers(const SimplicialComplex& complex)
{
    detail::require_ordinary(complex, "vertex cover enumeration");
    return minimal_transversals(complex.facets());
}

inline bool is_unmixed_complex(const SimplicialComplex& complex)
{
    auto covers = minimal_vertex_covers(complex);
    for (const auto& c : covers)
        if (c.size() != covers[0].size())
            return false;
    return true;
}

struct LeafWitness {
    VertexSet facet;
    std::optional<VertexSet> joint;  // absent when the complex is a single simplex
};

namespace detail {

/// Leaf test on the subcollection `members` (indices into `facets`). L is a
/// leaf with joint G iff L∩G equals the union of L∩F over the other members.
inline std::optional<std::pair<std::size_t, std::optional<std::size_t>>>
first_leaf(const std::vector<VertexSet>& facets, const std::vector<std::size_t>& members)
{
    if (members.size() == 1)
        return std::make_pair(members[0], std::optional<std::size_t>{});
    for (auto l : members) {
        VertexSet covered;
        for (auto f : members)
            if (f != l)
                covered |= facets[l] & facets[f];
        for (auto g : members)
            if (g != l && (facets[l] & facets[g]) == covered)
                return std::make_pair(l, std::optional<std::size_t>{g});
    }
    return std::nullopt;
}

inline std::vector<std::size_t> indices_of_mask(std::uint64_t mask)
{
    std::vector<std::size_t> out;
    for (; mask != 0; mask &= mask - 1)
        out.push_back(static_cast<std::size_t>(std::countr_zero(mask)));
    return out;
}

inline void require_facet_cap(const SimplicialComplex& complex, std::size_t cap)
{
    // Subcollections are enumerated as 64-bit masks.
    cap = std::min<std::size_t>(cap, 62);
    if (complex.facets().size() > cap)
        throw ResourceError("facet cap exceeded: complex has " + std::to_string(complex.facets().size())
                            + " facets, cap is " + std::to_string(cap));
}

}  // namespace detail

/// Canonically first leaf with its canonically first joint.
inline std::optional<LeafWitness> find_leaf(const SimplicialComplex& complex)
{
    detail::require_ordinary(complex, "leaf search");
    const auto& facets = complex.facets().sets();
    std::vector<std::size_t> all(facets.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        all[i] = i;
    auto hit = detail::first_leaf(facets, all);
    if (!hit)
        return std::nullopt;
    LeafWitness w{facets[hit->first], std::nullopt};
    if (hit->second)
        w.joint = facets[*hit->second];
    return w;
}

/// Facets are linked through shared vertices into a single component.
inline bool is_connected(const SimplicialComplex& complex)
{
    const auto& facets = complex.facets().sets();
    if (facets.empty())
        return true;
    std::vector<bool> seen(facets.size(), false);
    std::vector<std::size_t> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        auto i = stack.back();
        stack.pop_back();
        for (std::size_t j = 0; j < facets.size(); ++j)
            if (!seen[j] && facets[i].intersects(facets[j])) {
                seen[j] = true;
                stack.push_back(j);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

inline constexpr std::size_t kDefaultFacetCap = 18;

/// Every nonempty subcollection of facets has a leaf (exhaustive).
inline bool is_simplicial_forest(const SimplicialComplex& complex, std::size_t cap = kDefaultFacetCap)
{
    detail::require_ordinary(complex, "simplicial forest test");
    detail::require_facet_cap(complex, cap);
    const auto& facets = complex.facets().sets();
    const std::uint64_t limit = std::uint64_t{1} << facets.size();
    for (std::uint64_t mask = 1; mask < limit; ++mask)
        if (!detail::first_leaf(facets, detail::indices_of_mask(mask)))
            return false;
    return true;
}

inline bool is_simplicial_tree(const SimplicialComplex& complex, std::size_t cap = kDefaultFacetCap)
{
    return is_simplicial_forest(complex, cap) && is_connected(complex);
}

/// F and G are strong neighbours when every facet H containing F∩G is F or G.
/// The condition F∩H ⊆ G would leave the facets of an n-gon, n ≥ 4, without
/// any strong neighbours.
inline bool are_strong_neighbors(const std::vector<VertexSet>& facets, std::size_t f, std::size_t g)
{
    if (f == g)
        return false;
    auto shared = facets[f] & facets[g];
    for (std::size_t h = 0; h < facets.size(); ++h)
        if (h != f && h != g && shared.is_subset_of(facets[h]))
            return false;
    return true;
}

struct CycleReport {
    bool is_cycle = false;
    /// The facets arranged so consecutive ones (cyclically) are strong
    /// neighbours and no other pair is; empty unless `ring_verified`.
    std::vector<VertexSet> order;
    bool ring_verified = false;
};

inline CycleReport is_cycle(const SimplicialComplex& complex, std::size_t cap = kDefaultFacetCap)
{
    detail::require_ordinary(complex, "cycle test");
    detail::require_facet_cap(complex, cap);
    const auto& facets = complex.facets().sets();
    const auto n = facets.size();
    CycleReport report;
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    if (detail::first_leaf(facets, detail::indices_of_mask(full)))
        return report;
    for (std::uint64_t mask = 1; mask < full; ++mask)
        if (!detail::first_leaf(facets, detail::indices_of_mask(mask)))
            return report;
    report.is_cycle = true;

    std::vector<std::vector<std::size_t>> nbrs(n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (are_strong_neighbors(facets, i, j))
                nbrs[i].push_back(j);
    if (n < 3 || std::any_of(nbrs.begin(), nbrs.end(), [](const auto& v) { return v.size() != 2; }))
        return report;
    std::vector<std::size_t> ring{0};
    std::size_t prev = 0, cur = nbrs[0][0];
    while (cur != 0 && ring.size() <= n) {
        ring.push_back(cur);
        auto next = nbrs[cur][0] == prev ? nbrs[cur][1] : nbrs[cur][0];
        prev = cur;
        cur = next;
    }
    if (cur != 0 || ring.size() != n)
        return report;
    for (auto i : ring)
        report.order.push_back(facets[i]);
    report.ring_verified = true;
    return report;
}

}  // namespace onikit

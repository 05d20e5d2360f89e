#include <gtest/gtest.h>

#include <random>

#include "onikit/complex.hpp"
#include "onikit/fixtures.hpp"
#include "onikit/graph.hpp"
#include "oracle.hpp"

using namespace onikit;

namespace {

using Sets = std::initializer_list<std::initializer_list<std::string_view>>;

SimplicialComplex complex_of(const Universe& u, Sets facets)
{
    std::vector<VertexSet> f;
    for (auto s : facets)
        f.push_back(u.set(s));
    return SimplicialComplex(u, f);
}

Universe abc(std::size_t n)
{
    std::vector<std::string> l;
    for (std::size_t i = 0; i < n; ++i)
        l.push_back(std::string(1, static_cast<char>('a' + i)));
    return Universe(l);
}

const Universe& even_p6()
{
    static const Universe u({"0", "2", "4", "6"});
    return u;
}

SimplicialComplex s_even_p6() { return complex_of(even_p6(), {{"2", "6"}, {"0", "6"}, {"0", "4"}}); }

/// Random pure complex: facets of one size drawn from an n-element universe.
SimplicialComplex random_pure(const Universe& u, std::size_t dim_size, std::mt19937_64& rng)
{
    std::vector<VertexSet> all;
    for (oracle::Mask m = 0; m < (oracle::Mask{1} << u.size()); ++m)
        if (static_cast<std::size_t>(std::popcount(m)) == dim_size)
            all.push_back(oracle::from_mask(m));
    std::shuffle(all.begin(), all.end(), rng);
    auto k = std::uniform_int_distribution<std::size_t>(1, std::min<std::size_t>(all.size(), 6))(rng);
    all.resize(k);
    return SimplicialComplex(u, all);
}

}  // namespace

TEST(Complex, Kinds)
{
    auto u = abc(2);
    EXPECT_EQ(SimplicialComplex::void_complex(u).kind(), ComplexKind::Void);
    EXPECT_EQ(SimplicialComplex::empty_complex(u).kind(), ComplexKind::Empty);
    EXPECT_EQ(SimplicialComplex::full_simplex(u).kind(), ComplexKind::Ordinary);
    EXPECT_FALSE(SimplicialComplex::void_complex(u).is_face(VertexSet{}));
    EXPECT_TRUE(SimplicialComplex::empty_complex(u).is_face(VertexSet{}));
    EXPECT_EQ(complex_of(u, {{"a"}, {"a", "b"}}).facets().size(), 1U);
}

TEST(DeletionAndLink, Examples)
{
    Universe u({"1", "2", "3", "4", "5"});
    auto pentagon = complex_of(u, {{"1", "2"}, {"2", "3"}, {"3", "4"}, {"4", "5"}, {"1", "5"}});
    EXPECT_EQ(deletion(pentagon, u.set({"5"})), complex_of(u, {{"1", "2"}, {"2", "3"}, {"3", "4"}}));

    auto a = abc(3);
    auto small = complex_of(a, {{"a", "b"}});
    EXPECT_EQ(deletion(small, a.set({"c"})), small);
    EXPECT_EQ(deletion(complex_of(a, {{"a"}}), a.set({"a"})).kind(), ComplexKind::Empty);
    EXPECT_EQ(link(complex_of(a, {{"a", "b", "c"}}), a.set({"a"})), complex_of(a, {{"b", "c"}}));
    EXPECT_EQ(link(small, a.set({"a", "b"})).kind(), ComplexKind::Empty);
    EXPECT_EQ(link(small, a.set({"c"})).kind(), ComplexKind::Void);
    EXPECT_EQ(link(s_even_p6(), even_p6().set({"4"})), complex_of(even_p6(), {{"0"}}));
}

TEST(DeletionAndLink, FacePartition)
{
    std::mt19937_64 rng(17);
    for (int it = 0; it < 60; ++it) {
        auto u = abc(3 + it % 6);
        std::vector<VertexSet> facets;
        std::uniform_int_distribution<oracle::Mask> bits(1, (oracle::Mask{1} << u.size()) - 1);
        for (int i = 0; i < 4; ++i)
            facets.push_back(oracle::from_mask(bits(rng)));
        SimplicialComplex c(u, facets);
        for (std::size_t v = 0; v < u.size(); ++v) {
            auto del = deletion(c, VertexSet{v});
            auto lk = link(c, VertexSet{v});
            for (oracle::Mask m = 0; m < (oracle::Mask{1} << u.size()); ++m) {
                auto face = oracle::from_mask(m);
                if (!c.is_face(face))
                    continue;
                if (face.contains(v))
                    EXPECT_TRUE(lk.is_face(face - VertexSet{v}));
                else
                    EXPECT_TRUE(del.is_face(face));
            }
        }
    }
}

TEST(DimensionProfile, Examples)
{
    auto u = abc(3);
    auto p = dimension_profile(complex_of(u, {{"a", "b"}, {"c"}}));
    EXPECT_EQ(p.dimension, 1);
    EXPECT_FALSE(p.pure);
    auto s = dimension_profile(s_even_p6());
    EXPECT_EQ(s.dimension, 1);
    EXPECT_TRUE(s.pure);
    auto e = dimension_profile(SimplicialComplex::empty_complex(u));
    EXPECT_EQ(e.dimension, -1);
    EXPECT_TRUE(e.pure);
    EXPECT_THROW(dimension_profile(SimplicialComplex::void_complex(u)), PreconditionError);
}

TEST(SheddingVertex, Examples)
{
    const auto& u = even_p6();
    EXPECT_TRUE(is_shedding_vertex(s_even_p6(), u.position("4")));
    EXPECT_EQ(deletion(s_even_p6(), u.set({"4"})), complex_of(u, {{"2", "6"}, {"0", "6"}}));
    auto a = abc(4);
    EXPECT_TRUE(is_shedding_vertex(complex_of(a, {{"a", "b"}, {"b", "c"}}), a.position("a")));
    EXPECT_FALSE(is_shedding_vertex(complex_of(a, {{"a", "b"}, {"c", "d"}}), a.position("a")));
    EXPECT_FALSE(is_shedding_vertex(complex_of(a, {{"a", "b"}}), a.position("a")));
    EXPECT_THROW(is_shedding_vertex(SimplicialComplex::empty_complex(a), 0), PreconditionError);
}

TEST(VertexDecomposable, FullSimplexIsALeaf)
{
    auto r = is_vertex_decomposable(SimplicialComplex::full_simplex(abc(3)));
    ASSERT_TRUE(r.decomposable);
    EXPECT_EQ(r.certificate->kind, SheddingCertificate::Kind::Simplex);
}

TEST(VertexDecomposable, EvenStableComplexOfP6)
{
    auto c = s_even_p6();
    auto r = is_vertex_decomposable(c);
    ASSERT_TRUE(r.decomposable);
    // Canonical order tries 2 before 4, and 2 already sheds.
    EXPECT_EQ(r.certificate->kind, SheddingCertificate::Kind::Shed);
    EXPECT_EQ(r.certificate->vertex, "2");
    EXPECT_TRUE(validate_shedding_certificate(c, *r.certificate));

    using K = SheddingCertificate::Kind;
    auto by_hand = SheddingCertificate::shed(
        "4", SheddingCertificate::shed("2", SheddingCertificate::leaf(K::Simplex), SheddingCertificate::leaf(K::Simplex)),
        SheddingCertificate::leaf(K::Simplex));
    EXPECT_TRUE(validate_shedding_certificate(c, *by_hand));
    auto wrong = SheddingCertificate::shed("0", SheddingCertificate::leaf(K::Simplex), SheddingCertificate::leaf(K::Simplex));
    EXPECT_FALSE(validate_shedding_certificate(c, *wrong));
}

TEST(VertexDecomposable, SevenCycleComplexIsNot)
{
    auto c = stanley_reisner_complex(fixtures::edge_ideal(fixtures::c7()));
    EXPECT_TRUE(is_pure(c));
    auto r = is_vertex_decomposable(c);
    EXPECT_FALSE(r.decomposable);
    EXPECT_FALSE(r.certificate);
}

TEST(VertexDecomposable, ImpureInputIsAnError)
{
    auto u = abc(3);
    EXPECT_THROW(is_vertex_decomposable(complex_of(u, {{"a", "b"}, {"c"}})), PreconditionError);
    EXPECT_TRUE(is_vertex_decomposable(SimplicialComplex::void_complex(u)).decomposable);
    EXPECT_TRUE(is_vertex_decomposable(SimplicialComplex::empty_complex(u)).decomposable);
}

TEST(VertexDecomposable, CertificatesReplayExactlyWhenDecomposable)
{
    std::mt19937_64 rng(23);
    for (int it = 0; it < 150; ++it) {
        auto u = abc(4 + it % 3);
        auto c = random_pure(u, 2 + it % 2, rng);
        auto r = is_vertex_decomposable(c);
        if (r.decomposable) {
            EXPECT_TRUE(validate_shedding_certificate(c, *r.certificate));
        }
        using K = SheddingCertificate::Kind;
        for (std::size_t v : c.vertices().members()) {
            auto fake = SheddingCertificate::shed(u.label(v), SheddingCertificate::leaf(K::Simplex),
                                                  SheddingCertificate::leaf(K::Simplex));
            if (validate_shedding_certificate(c, *fake)) {
                EXPECT_TRUE(r.decomposable);
            }
        }
    }
}

TEST(VertexDecomposable, Deterministic)
{
    auto c = s_even_p6();
    auto a = is_vertex_decomposable(c), b = is_vertex_decomposable(c);
    EXPECT_EQ(a.certificate->vertex, b.certificate->vertex);
}

TEST(Join, Examples)
{
    auto c = join(SimplicialComplex(Universe({"a"}), {VertexSet{0}}),
                  SimplicialComplex(Universe({"b", "c"}), {VertexSet{0}, VertexSet{1}}));
    const auto& u = c.universe();
    EXPECT_EQ(c, complex_of(u, {{"a", "b"}, {"a", "c"}}));
    auto d = s_even_p6();
    EXPECT_EQ(join(d, SimplicialComplex::empty_complex(Universe({"z"}))), d.extended_to(union_of(d.universe(), Universe({"z"}))));
    EXPECT_THROW(join(d, d), InputError);
}

TEST(Join, StableComplexOfTAFactorsThroughHeightThree)
{
    auto t = fixtures::t_a();
    auto r = Universe({"r1", "r2"});
    EXPECT_EQ(join(even_stable_complex(t), SimplicialComplex::full_simplex(r)).extended_to(t.universe()), stable_complex(t));
}

TEST(Join, VertexDecomposabilityLaw)
{
    std::mt19937_64 rng(29);
    for (int it = 0; it < 80; ++it) {
        auto a = random_pure(Universe({"a", "b", "c", "d"}), 1 + it % 3, rng);
        auto b = random_pure(Universe({"p", "q", "r", "s", "t"}), 1 + (it / 3) % 3, rng);
        bool lhs = is_vertex_decomposable(join(a, b)).decomposable;
        EXPECT_EQ(lhs, is_vertex_decomposable(a).decomposable && is_vertex_decomposable(b).decomposable)
            << a.format() << " * " << b.format();
    }
}

TEST(StanleyReisner, Examples)
{
    const auto& u = even_p6();
    auto i = stanley_reisner_ideal(s_even_p6());
    EXPECT_EQ(i.generators(), SpernerFamily(u, {u.set({"0", "2"}), u.set({"2", "4"}), u.set({"4", "6"})}));
    EXPECT_EQ(stanley_reisner_complex(i), s_even_p6());
    auto a = abc(2);
    EXPECT_TRUE(stanley_reisner_ideal(SimplicialComplex::full_simplex(a)).is_zero());
    EXPECT_EQ(stanley_reisner_ideal(SimplicialComplex::empty_complex(a)), SquareFreeIdeal::variables(a, a.all()));
    EXPECT_TRUE(stanley_reisner_ideal(SimplicialComplex::void_complex(a)).is_unit());
    EXPECT_EQ(stanley_reisner_complex(SquareFreeIdeal::zero(a)), SimplicialComplex::full_simplex(a));
    EXPECT_EQ(stanley_reisner_complex(SquareFreeIdeal::variables(a, a.all())).kind(), ComplexKind::Empty);
    EXPECT_EQ(stanley_reisner_complex(SquareFreeIdeal::unit(a)).kind(), ComplexKind::Void);
}

TEST(StanleyReisner, GeneratorsAreMinimalNonFacesAndRoundTrip)
{
    std::mt19937_64 rng(31);
    for (int it = 0; it < 100; ++it) {
        auto u = abc(3 + it % 5);
        std::uniform_int_distribution<oracle::Mask> bits(0, (oracle::Mask{1} << u.size()) - 1);
        std::vector<VertexSet> facets;
        for (int i = 0; i < 3; ++i)
            facets.push_back(oracle::from_mask(bits(rng)));
        SimplicialComplex c(u, facets);
        auto i = stanley_reisner_ideal(c);
        std::vector<oracle::Mask> nonfaces;
        for (oracle::Mask m = 0; m < (oracle::Mask{1} << u.size()); ++m) {
            auto s = oracle::from_mask(m);
            if (c.is_face(s))
                continue;
            bool minimal = true;
            for (auto p : s.members())
                if (!c.is_face(s - VertexSet{p}))
                    minimal = false;
            if (minimal)
                nonfaces.push_back(m);
        }
        oracle::canonical_sort(nonfaces);
        EXPECT_EQ(oracle::masks_of(i.generators()), nonfaces);
        EXPECT_EQ(stanley_reisner_complex(i), c);
    }
}

TEST(FacetIdeal, ExamplesAndCovers)
{
    auto a = abc(3);
    EXPECT_EQ(facet_ideal(complex_of(a, {{"a", "b", "c"}})).format(), "<abc>");
    EXPECT_EQ(facet_ideal(complex_of(a, {{"a"}, {"b", "c"}})).format(), "<a,bc>");
    EXPECT_THROW(facet_ideal(SimplicialComplex::empty_complex(a)), PreconditionError);
    EXPECT_THROW(facet_ideal(SimplicialComplex::void_complex(a)), PreconditionError);

    const auto& u = even_p6();
    auto path = complex_of(u, {{"0", "2"}, {"2", "4"}, {"4", "6"}});
    EXPECT_EQ(facet_ideal(path), odd_oni(fixtures::p6()));
    EXPECT_EQ(minimal_vertex_covers(path), SpernerFamily(u, {u.set({"0", "4"}), u.set({"2", "4"}), u.set({"2", "6"})}));
    EXPECT_EQ(minimal_vertex_covers(complex_of(a, {{"a", "b"}})), SpernerFamily(a, {a.set({"a"}), a.set({"b"})}));
    EXPECT_TRUE(is_unmixed_complex(path));
    EXPECT_TRUE(is_unmixed_complex(complex_of(a, {{"a"}, {"b", "c"}})));

    auto beg = fixtures::beg_a();
    EXPECT_EQ(minimal_vertex_covers(SimplicialComplex(beg)), minimal_transversals(beg));
    EXPECT_EQ(minimal_vertex_covers(SimplicialComplex(beg)).size(), 5U);
}

TEST(FacetIdeal, PrimesAreVertexCovers)
{
    std::mt19937_64 rng(37);
    for (int it = 0; it < 80; ++it) {
        auto u = abc(4 + it % 4);
        std::uniform_int_distribution<oracle::Mask> bits(1, (oracle::Mask{1} << u.size()) - 1);
        std::vector<VertexSet> facets;
        for (int i = 0; i < 4; ++i)
            facets.push_back(oracle::from_mask(bits(rng)));
        SimplicialComplex c(u, facets);
        EXPECT_EQ(minimal_primes(facet_ideal(c)).primes, minimal_vertex_covers(c));
        auto covers = oracle::transversals(oracle::masks_of(c.facets()), u.size());
        bool same = std::all_of(covers.begin(), covers.end(),
                                [&](oracle::Mask m) { return std::popcount(m) == std::popcount(covers[0]); });
        EXPECT_EQ(is_unmixed_complex(c), same);
    }
}

TEST(Leaves, Examples)
{
    auto a = abc(6);
    auto c = complex_of(a, {{"a", "b", "c"}, {"c", "d"}, {"d", "e", "f"}});
    auto leaf = find_leaf(c);
    ASSERT_TRUE(leaf);
    // {c,d} comes first canonically but meets the other two in different vertices.
    EXPECT_EQ(leaf->facet, a.set({"a", "b", "c"}));
    ASSERT_TRUE(leaf->joint);
    EXPECT_EQ(*leaf->joint, a.set({"c", "d"}));
    // L ∩ F ⊆ L ∩ G for every other facet F.
    for (const auto& f : c.facets())
        if (f != leaf->facet) {
            EXPECT_TRUE((leaf->facet & f).is_subset_of(leaf->facet & *leaf->joint));
        }
    EXPECT_TRUE(is_simplicial_forest(c));
    EXPECT_TRUE(is_simplicial_tree(c));

    auto triangle = complex_of(a, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    EXPECT_FALSE(find_leaf(triangle));
    EXPECT_FALSE(is_simplicial_forest(triangle));

    auto simplex = find_leaf(complex_of(a, {{"a", "b", "c"}}));
    ASSERT_TRUE(simplex);
    EXPECT_FALSE(simplex->joint);
}

TEST(Forest, DisconnectedForestIsNotATree)
{
    auto a = abc(4);
    auto c = complex_of(a, {{"a", "b"}, {"c", "d"}});
    EXPECT_TRUE(is_simplicial_forest(c));
    EXPECT_FALSE(is_simplicial_tree(c));
}

TEST(Forest, CapIsAResourceError)
{
    std::vector<std::string> l;
    std::vector<Edge> e;
    for (int i = 0; i < 21; ++i) {
        l.push_back("v" + std::to_string(i));
        if (i > 0)
            e.emplace_back("v" + std::to_string(i - 1), "v" + std::to_string(i));
    }
    Graph path(l, e);
    std::vector<VertexSet> facets;
    for (auto [x, y] : path.edges())
        facets.push_back(VertexSet{x, y});
    SimplicialComplex c(path.universe(), facets);
    EXPECT_THROW(is_simplicial_forest(c), ResourceError);
    EXPECT_TRUE(is_simplicial_forest(c, 20));
}

TEST(Forest, OddNeighbourhoodsOfTAFormATree)
{
    auto t = fixtures::t_a();
    auto odd = odd_oni(t);
    SimplicialComplex c(odd.generators());
    EXPECT_TRUE(is_simplicial_tree(c));
}

TEST(Cycle, Examples)
{
    auto a = abc(4);
    auto triangle = complex_of(a, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    auto r = is_cycle(triangle);
    EXPECT_TRUE(r.is_cycle);
    EXPECT_TRUE(r.ring_verified);
    EXPECT_EQ(r.order.size(), 3U);
    EXPECT_FALSE(is_cycle(complex_of(a, {{"a", "b"}, {"b", "c"}})).is_cycle);
    EXPECT_FALSE(is_cycle(complex_of(a, {{"a", "b", "c"}, {"c", "d"}})).is_cycle);
}

TEST(Cycle, CyclesAreNotForestsAndLoseThatByDroppingAFacet)
{
    for (int n = 3; n <= 7; ++n) {
        std::vector<std::string> l;
        for (int i = 0; i < n; ++i)
            l.push_back("c" + std::to_string(i));
        Universe u(l);
        std::vector<VertexSet> facets;
        for (int i = 0; i < n; ++i)
            facets.push_back(VertexSet{static_cast<std::size_t>(i), static_cast<std::size_t>((i + 1) % n)});
        SimplicialComplex c(u, facets);
        auto r = is_cycle(c);
        EXPECT_TRUE(r.is_cycle) << n;
        EXPECT_TRUE(r.ring_verified) << n;
        EXPECT_FALSE(is_simplicial_forest(c));
        for (int drop = 0; drop < n; ++drop) {
            auto rest = facets;
            rest.erase(rest.begin() + drop);
            EXPECT_TRUE(is_simplicial_forest(SimplicialComplex(u, rest)));
        }
        for (std::size_t i = 0; i < r.order.size(); ++i)
            EXPECT_TRUE(r.order[i].intersects(r.order[(i + 1) % r.order.size()]));
    }
}

TEST(Cycle, StrongNeighboursOfASquare)
{
    Universe u({"a", "b", "c", "d"});
    std::vector<VertexSet> square{u.set({"a", "b"}), u.set({"b", "c"}), u.set({"c", "d"}), u.set({"a", "d"})};
    EXPECT_TRUE(are_strong_neighbors(square, 0, 1));
    EXPECT_TRUE(are_strong_neighbors(square, 3, 0));
    EXPECT_FALSE(are_strong_neighbors(square, 0, 2));
    EXPECT_FALSE(are_strong_neighbors(square, 1, 1));
    // A third facet through b breaks the pair {a,b}, {b,c}.
    auto fan = square;
    fan.push_back(u.set({"b", "d"}));
    EXPECT_FALSE(are_strong_neighbors(fan, 0, 1));
}

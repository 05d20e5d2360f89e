#include <gtest/gtest.h>

#include <random>

#include "onikit/complex.hpp"
#include "onikit/fixtures.hpp"
#include "onikit/graph.hpp"
#include "onikit/gvd.hpp"
#include "onikit/json_io.hpp"
#include "oracle.hpp"

using namespace onikit;

namespace {

using Kind = GvdCertificate::Kind;
using Gens = std::initializer_list<std::initializer_list<std::string_view>>;

Universe xs(std::size_t n)
{
    std::vector<std::string> l;
    for (std::size_t i = 0; i < n; ++i)
        l.push_back("x" + std::to_string(i));
    return Universe(l);
}

SquareFreeIdeal ideal(const Universe& u, Gens gens)
{
    std::vector<VertexSet> s;
    for (auto g : gens)
        s.push_back(u.set(g));
    return SquareFreeIdeal(u, s);
}

SquareFreeIdeal random_ideal(const Universe& u, std::mt19937_64& rng, int max_gens = 4)
{
    std::uniform_int_distribution<oracle::Mask> bits(1, (oracle::Mask{1} << u.size()) - 1);
    std::vector<VertexSet> gens;
    for (int i = std::uniform_int_distribution<int>(1, max_gens)(rng); i > 0; --i)
        gens.push_back(oracle::from_mask(bits(rng)));
    return SquareFreeIdeal(u, gens);
}

std::string dump(const GvdCertificatePtr& c) { return c ? io::to_json(*c).dump() : "null"; }

}  // namespace

TEST(Split, Examples)
{
    auto u = xs(7);
    auto i = ideal(u, {{"x0", "x2"}, {"x2", "x4"}, {"x4", "x6"}});
    auto [c, n] = split(i, "x4");
    auto rest = u.without(u.set({"x4"}));
    EXPECT_EQ(c, ideal(rest, {{"x2"}, {"x6"}}));
    EXPECT_EQ(n, ideal(rest, {{"x0", "x2"}}));

    auto b = odd_oni(fixtures::base_case());
    auto [bc, bn] = split(b, "u");
    const auto& br = bc.universe();
    EXPECT_FALSE(br.contains("u"));
    EXPECT_EQ(bc, ideal(br, {{"u'"}, {"l1", "l2"}}));
    EXPECT_EQ(bn, ideal(br, {{"u'", "l1'", "l2'"}}));

    Universe y({"y"});
    auto [yc, yn] = split(ideal(y, {{"y"}}), "y");
    EXPECT_TRUE(yc.is_unit());
    EXPECT_TRUE(yn.is_zero());
    EXPECT_THROW(split(i, "q"), InputError);
}

TEST(ValidDecomposition, Examples)
{
    auto u = xs(7);
    EXPECT_TRUE(is_valid_geometric_decomposition(ideal(u, {{"x0", "x2"}, {"x2", "x4"}, {"x4", "x6"}}), "x4"));
    auto v = xs(4);
    EXPECT_TRUE(is_valid_geometric_decomposition(ideal(v, {{"x1", "x2"}}), "x2"));
    auto tri = ideal(v, {{"x1", "x2"}, {"x1", "x3"}, {"x2", "x3"}});
    auto want = oracle::geometric_split_holds(oracle::masks_of(tri.generators()), v.size(), v.position("x1"));
    EXPECT_EQ(is_valid_geometric_decomposition(tri, "x1"), want);
}

TEST(ValidDecomposition, AgreesWithOracle)
{
    std::mt19937_64 rng(83);
    for (int it = 0; it < 300; ++it) {
        auto u = xs(3 + it % 4);
        auto i = random_ideal(u, rng);
        for (std::size_t y = 0; y < u.size(); ++y)
            EXPECT_EQ(is_valid_geometric_decomposition(i, u.label(y)),
                      oracle::geometric_split_holds(oracle::masks_of(i.generators()), u.size(), y))
                << i.format() << " at " << u.label(y);
    }
}

TEST(IsGvd, PathIdeal)
{
    auto u = xs(7);
    auto i = ideal(u, {{"x0", "x2"}, {"x2", "x4"}, {"x4", "x6"}});
    auto r = is_gvd(i);
    ASSERT_TRUE(r.gvd);
    // Canonical order reaches x2 before x4, and x2 already works.
    EXPECT_EQ(r.certificate->kind, Kind::Split);
    EXPECT_EQ(r.certificate->variable, "x2");
    EXPECT_TRUE(validate_certificate(i, *r.certificate));

    auto chain = GvdCertificate::split("x2", GvdCertificate::base(Kind::Variables), GvdCertificate::base(Kind::Zero));
    auto at_x4 = GvdCertificate::split("x4", GvdCertificate::base(Kind::Variables), chain);
    EXPECT_TRUE(validate_certificate(i, *at_x4));
}

TEST(IsGvd, BaseCases)
{
    auto u = xs(3);
    EXPECT_EQ(is_gvd(SquareFreeIdeal::unit(u)).certificate->kind, Kind::Unit);
    EXPECT_EQ(is_gvd(SquareFreeIdeal::zero(u)).certificate->kind, Kind::Zero);
    EXPECT_EQ(is_gvd(ideal(u, {{"x0"}, {"x2"}})).certificate->kind, Kind::Variables);
}

TEST(IsGvd, SevenCycleIsNot)
{
    auto i = fixtures::edge_ideal(fixtures::c7());
    EXPECT_TRUE(is_unmixed(i));
    auto r = is_gvd(i);
    EXPECT_FALSE(r.gvd);
    EXPECT_FALSE(r.certificate);
}

TEST(IsGvd, MixedIdealsAreNot)
{
    auto u = xs(4);
    EXPECT_FALSE(is_gvd(ideal(u, {{"x0", "x1"}, {"x1", "x2"}})).gvd);
}

TEST(Validate, Examples)
{
    auto u = xs(3);
    EXPECT_TRUE(validate_certificate(ideal(u, {{"x1"}}), *GvdCertificate::base(Kind::Variables)));
    EXPECT_FALSE(validate_certificate(ideal(u, {{"x1", "x2"}}), *GvdCertificate::base(Kind::Variables)));
    EXPECT_FALSE(validate_certificate(ideal(u, {{"x1", "x2"}}), *GvdCertificate::base(Kind::Zero)));
    auto bogus = GvdCertificate::split("zz", GvdCertificate::base(Kind::Unit), GvdCertificate::base(Kind::Zero));
    EXPECT_FALSE(validate_certificate(ideal(u, {{"x1", "x2"}}), *bogus));
    auto chain = GvdCertificate::split("x2", GvdCertificate::base(Kind::Variables), GvdCertificate::base(Kind::Zero));
    EXPECT_TRUE(validate_certificate(ideal(u, {{"x1", "x2"}}), *chain));
}

TEST(IsGvd, AgreesWithVertexDecomposability)
{
    for (std::size_t n = 1; n <= 4; ++n) {
        auto u = xs(n);
        for (const auto& family : oracle::antichains(n)) {
            std::vector<VertexSet> facets;
            for (auto m : family)
                facets.push_back(oracle::from_mask(m));
            SimplicialComplex c(u, facets);
            if (c.kind() != ComplexKind::Void && !is_pure(c))
                continue;
            auto i = stanley_reisner_ideal(c);
            EXPECT_EQ(is_gvd(i).gvd, is_vertex_decomposable(c).decomposable) << c.format();
        }
    }
}

TEST(IsGvd, CertificatesValidate)
{
    std::mt19937_64 rng(89);
    for (int it = 0; it < 200; ++it) {
        auto u = xs(3 + it % 5);
        auto i = random_ideal(u, rng, 5);
        auto r = is_gvd(i);
        if (r.gvd) {
            EXPECT_TRUE(validate_certificate(i, *r.certificate)) << i.format();
        }
        EXPECT_EQ(dump(r.certificate), dump(is_gvd(i).certificate));
    }
}

TEST(IsGvd, SingleMonomials)
{
    auto u = xs(6);
    for (oracle::Mask m = 1; m < 64; ++m) {
        SquareFreeIdeal i(u, {oracle::from_mask(m)});
        EXPECT_TRUE(is_gvd(i).gvd) << i.format();
        std::vector<std::string> vars = u.labels_of(oracle::from_mask(m));
        EXPECT_TRUE(validate_certificate(i, *detail::monomial_chain(vars)));
    }
}

TEST(IsGvd, DisjointSums)
{
    std::mt19937_64 rng(97);
    Universe a({"a", "b", "c", "d"}), b({"p", "q", "r", "s"});
    auto both = union_of(a, b);
    for (int it = 0; it < 150; ++it) {
        auto i = random_ideal(a, rng), j = random_ideal(b, rng);
        auto s = sum(i.extended_to(both), j.extended_to(both));
        auto gi = is_gvd(i), gj = is_gvd(j);
        EXPECT_EQ(is_gvd(s).gvd, gi.gvd && gj.gvd) << i.format() << " + " << j.format();
        if (gi.gvd && gj.gvd) {
            EXPECT_TRUE(validate_certificate(s, *detail::graft(gi.certificate, gj.certificate)));
        }
    }
}

TEST(IsGvd, FreshVariable)
{
    std::mt19937_64 rng(101);
    auto u = xs(5);
    auto wider = union_of(u, Universe({"y"}));
    for (int it = 0; it < 150; ++it) {
        auto i = random_ideal(u, rng);
        if (!is_gvd(i).gvd)
            continue;
        auto j = sum(i.extended_to(wider), SquareFreeIdeal::variables(wider, wider.set({"y"})));
        EXPECT_TRUE(is_gvd(j).gvd) << i.format();
    }
}

TEST(SplitIdentity, OSequenceTrees)
{
    for (const auto& t : oracle::o_sequence_trees(2)) {
        auto u = find_split_vertex(t);
        auto [c, n] = split(odd_oni(t), t.label(u));
        auto c_want = induced_odd_oni(delete_vertices(t, VertexSet{u}), t);
        auto n_want = odd_oni(delete_vertices(t, closed_neighborhood(t, u)));
        EXPECT_EQ(c, c_want.extended_to(c.universe()));
        EXPECT_EQ(n, n_want.extended_to(n.universe()));
    }
}

TEST(CertifyTree, Examples)
{
    Graph star({"c", "l1", "l2"}, {{"c", "l1"}, {"c", "l2"}});
    auto s = certify_tree_gvd(star);
    EXPECT_EQ(*s, *GvdCertificate::split("l2", GvdCertificate::base(Kind::Variables), GvdCertificate::base(Kind::Zero)));
    EXPECT_TRUE(validate_certificate(odd_oni(star), *s));

    auto p = fixtures::p6();
    auto pc = certify_tree_gvd(p);
    EXPECT_EQ(pc->variable, "2");
    EXPECT_TRUE(validate_certificate(odd_oni(p), *pc));

    auto t = fixtures::t_a();
    auto tc = certify_tree_gvd(t);
    EXPECT_EQ(tc->variable, "u1");
    EXPECT_TRUE(validate_certificate(odd_oni(t), *tc));

    auto b = fixtures::base_case();
    EXPECT_TRUE(validate_certificate(odd_oni(b), *certify_tree_gvd(b)));
    EXPECT_TRUE(validate_certificate(odd_oni(Graph({"a"}, {})), *certify_tree_gvd(Graph({"a"}, {}))));
}

TEST(CertifyTree, RejectsInvalidInput)
{
    EXPECT_THROW(certify_tree_gvd(path_graph(3)), PreconditionError);
    EXPECT_THROW(certify_tree_gvd(path_graph(4)), PreconditionError);
}

TEST(CertifyTree, GvdOnOSequenceTrees)
{
    for (const auto& t : oracle::o_sequence_trees(2)) {
        auto i = odd_oni(t);
        EXPECT_TRUE(is_gvd(i).gvd);
        auto cert = certify_tree_gvd(t);
        EXPECT_TRUE(validate_certificate(i, *cert));
        EXPECT_EQ(dump(cert), dump(certify_tree_gvd(t)));
        EXPECT_TRUE(is_vertex_decomposable(even_stable_complex(t)).decomposable);
    }
}

TEST(CertifyTree, BalancedForests)
{
    auto t = fixtures::t_a();
    auto f = delete_vertices(t, VertexSet{t.position("r1")});
    EXPECT_TRUE(validate_certificate(odd_oni(f), *certify_tree_gvd(f)));
    auto g = delete_vertices(t, closed_neighborhood(t, t.position("u1")));
    EXPECT_TRUE(validate_certificate(odd_oni(g), *certify_tree_gvd(g)));
}

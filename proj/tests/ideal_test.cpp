#include <gtest/gtest.h>

#include <random>

#include "onikit/complex.hpp"
#include "onikit/ideal.hpp"
#include "oracle.hpp"

using namespace onikit;

namespace {

Universe xs(std::size_t n)
{
    std::vector<std::string> l;
    for (std::size_t i = 0; i < n; ++i)
        l.push_back("x" + std::to_string(i));
    return Universe(l);
}

SquareFreeIdeal ideal(const Universe& u, std::initializer_list<std::initializer_list<std::string_view>> gens)
{
    std::vector<VertexSet> s;
    for (auto g : gens)
        s.push_back(u.set(g));
    return SquareFreeIdeal(u, s);
}

SquareFreeIdeal random_ideal(const Universe& u, std::mt19937_64& rng)
{
    std::uniform_int_distribution<std::uint64_t> bits(1, (std::uint64_t{1} << u.size()) - 1);
    std::vector<VertexSet> gens;
    for (int i = std::uniform_int_distribution<int>(1, 5)(rng); i > 0; --i)
        gens.push_back(oracle::from_mask(bits(rng)));
    return SquareFreeIdeal(u, gens);
}

}  // namespace

TEST(SquareFreeIdeal, MinimizesGenerators)
{
    auto u = xs(7);
    auto i = ideal(u, {{"x0", "x2"}, {"x0", "x2", "x4"}, {"x4", "x6"}});
    EXPECT_EQ(i.format(), "<x0x2,x4x6>");
    EXPECT_EQ(i.support(), u.set({"x0", "x2", "x4", "x6"}));
}

TEST(SquareFreeIdeal, DistinguishedValues)
{
    auto u = xs(3);
    EXPECT_TRUE(SquareFreeIdeal::zero(u).is_zero());
    EXPECT_EQ(SquareFreeIdeal::zero(u).format(), "<0>");
    EXPECT_TRUE(SquareFreeIdeal::unit(u).is_unit());
    EXPECT_EQ(SquareFreeIdeal::unit(u).format(), "<1>");
    EXPECT_TRUE(ideal(u, {{}, {"x1"}}).is_unit());
    EXPECT_TRUE(SquareFreeIdeal::variables(u, u.set({"x0", "x2"})).is_variable_generated());
    EXPECT_FALSE(SquareFreeIdeal::zero(u).is_variable_generated());
    EXPECT_FALSE(ideal(u, {{"x0", "x1"}}).is_variable_generated());
}

TEST(SquareFreeIdeal, EqualityComparesGeneratorsAndUniverse)
{
    auto u = xs(3);
    EXPECT_TRUE(equals(ideal(u, {{"x0"}, {"x0", "x1"}}), ideal(u, {{"x0"}})));
    EXPECT_FALSE(ideal(u, {{"x0"}}) == ideal(xs(4), {{"x0"}}));
}

TEST(SumAndIntersection, Examples)
{
    auto u = xs(7);
    auto c = ideal(u, {{"x2"}, {"x6"}});
    auto n = ideal(u, {{"x0", "x2"}, {"x4"}});
    EXPECT_EQ(intersect(c, n), ideal(u, {{"x0", "x2"}, {"x2", "x4"}, {"x4", "x6"}}));
    EXPECT_EQ(sum(c, n), ideal(u, {{"x2"}, {"x6"}, {"x4"}}));
    EXPECT_EQ(sum(c, SquareFreeIdeal::zero(u)), c);
    EXPECT_EQ(intersect(c, SquareFreeIdeal::unit(u)), c);
    EXPECT_TRUE(intersect(c, SquareFreeIdeal::zero(u)).is_zero());
    EXPECT_THROW(sum(c, SquareFreeIdeal::zero(xs(3))), InputError);
    EXPECT_THROW(intersect(c, SquareFreeIdeal::zero(xs(3))), InputError);
}

TEST(SumAndIntersection, MembershipMatchesDefinitions)
{
    std::mt19937_64 rng(3);
    auto u = xs(5);
    for (int it = 0; it < 100; ++it) {
        auto a = random_ideal(u, rng), b = random_ideal(u, rng);
        auto s = sum(a, b), x = intersect(a, b);
        for (oracle::Mask m = 0; m < 32; ++m) {
            auto mono = oracle::from_mask(m);
            EXPECT_EQ(contains_monomial(s, mono), contains_monomial(a, mono) || contains_monomial(b, mono));
            EXPECT_EQ(contains_monomial(x, mono), contains_monomial(a, mono) && contains_monomial(b, mono));
        }
    }
}

TEST(MinimalPrimes, Examples)
{
    auto u = xs(7);
    auto mp = minimal_primes(ideal(u, {{"x0", "x2"}, {"x2", "x4"}, {"x4", "x6"}}));
    EXPECT_FALSE(mp.zero_ideal);
    EXPECT_EQ(mp.primes, SpernerFamily(u, {u.set({"x0", "x4"}), u.set({"x2", "x4"}), u.set({"x2", "x6"})}));
    auto z = minimal_primes(SquareFreeIdeal::zero(u));
    EXPECT_TRUE(z.zero_ideal);
    EXPECT_TRUE(z.primes.empty());
    EXPECT_THROW(minimal_primes(SquareFreeIdeal::unit(u)), PreconditionError);
}

TEST(Unmixed, Examples)
{
    auto u = xs(7);
    EXPECT_TRUE(is_unmixed(ideal(u, {{"x0", "x2"}, {"x2", "x4"}, {"x4", "x6"}})));
    EXPECT_TRUE(is_unmixed(ideal(u, {{"x0", "x1"}, {"x1", "x2"}, {"x2", "x3"}})));
    EXPECT_FALSE(is_unmixed(ideal(u, {{"x0", "x1"}, {"x1", "x2"}})));
    EXPECT_TRUE(is_unmixed(SquareFreeIdeal::zero(u)));
    EXPECT_THROW(is_unmixed(SquareFreeIdeal::unit(u)), PreconditionError);
}

TEST(Unmixed, PrimesAreMinimalCoversOfGenerators)
{
    std::mt19937_64 rng(5);
    auto u = xs(6);
    for (int it = 0; it < 100; ++it) {
        auto i = random_ideal(u, rng);
        auto primes = oracle::transversals(oracle::masks_of(i.generators()), u.size());
        EXPECT_EQ(oracle::masks_of(minimal_primes(i).primes), primes);
        bool same = std::all_of(primes.begin(), primes.end(),
                                [&](oracle::Mask p) { return std::popcount(p) == std::popcount(primes[0]); });
        EXPECT_EQ(is_unmixed(i), same);
    }
}

TEST(ExtendedTo, KeepsGenerators)
{
    auto u = xs(3);
    auto big = xs(5);
    auto i = ideal(u, {{"x0", "x1"}});
    EXPECT_EQ(i.extended_to(big), ideal(big, {{"x0", "x1"}}));
    EXPECT_THROW(ideal(big, {{"x4"}}).extended_to(u), InputError);
}

#pragma once

// Square-free monomial ideals, stored as the antichain of supports of their
// minimal generators. A monomial is identified with its support.

#include <string>
#include <utility>
#include <vector>

#include "onikit/universe.hpp"

namespace onikit {

class SquareFreeIdeal {
public:
    /// The zero ideal over the empty universe.
    SquareFreeIdeal() = default;

    /// Generators are minimized; an empty support makes the ideal the unit ideal.
    SquareFreeIdeal(const Universe& universe, std::vector<VertexSet> supports)
        : generators_(minimize_family(universe, std::move(supports)))
    {
    }

    explicit SquareFreeIdeal(SpernerFamily generators) : generators_(std::move(generators)) {}

    static SquareFreeIdeal zero(const Universe& universe) { return SquareFreeIdeal(universe, {}); }
    static SquareFreeIdeal unit(const Universe& universe) { return SquareFreeIdeal(universe, {VertexSet{}}); }

    /// Ideal generated by the given variables.
    static SquareFreeIdeal variables(const Universe& universe, const VertexSet& vars)
    {
        std::vector<VertexSet> gens;
        vars.for_each([&](std::size_t p) { gens.push_back(VertexSet{p}); });
        return SquareFreeIdeal(universe, std::move(gens));
    }

    const Universe& universe() const { return generators_.universe(); }
    const SpernerFamily& generators() const { return generators_; }

    bool is_zero() const { return generators_.empty(); }
    bool is_unit() const { return generators_.size() == 1 && generators_[0].empty(); }

    /// Every minimal generator is a single variable (and there is at least one).
    bool is_variable_generated() const
    {
        if (generators_.empty())
            return false;
        for (const auto& g : generators_)
            if (g.size() != 1)
                return false;
        return true;
    }

    /// Variables dividing some minimal generator.
    VertexSet support() const { return generators_.support(); }

    /// Same generators viewed in a larger (or relabelled) polynomial ring.
    SquareFreeIdeal extended_to(const Universe& target) const { return SquareFreeIdeal(generators_.over(target)); }

    std::string format() const
    {
        if (is_zero())
            return "<0>";
        if (is_unit())
            return "<1>";
        std::string out = "<";
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            out += i ? "," : "";
            generators_[i].for_each([&](std::size_t p) { out += universe().label(p); });
        }
        return out + ">";
    }

    friend bool operator==(const SquareFreeIdeal& a, const SquareFreeIdeal& b) { return a.generators_ == b.generators_; }

private:
    SpernerFamily generators_;
};

inline SquareFreeIdeal from_supports(const Universe& universe, std::vector<VertexSet> supports)
{
    return SquareFreeIdeal(universe, std::move(supports));
}

inline bool equals(const SquareFreeIdeal& a, const SquareFreeIdeal& b) { return a == b; }

namespace detail {
inline void require_same_universe(const SquareFreeIdeal& a, const SquareFreeIdeal& b, const char* op)
{
    if (!(a.universe() == b.universe()))
        throw InputError(std::string(op) + ": ideals live over different universes");
}
}  // namespace detail

inline SquareFreeIdeal sum(const SquareFreeIdeal& a, const SquareFreeIdeal& b)
{
    detail::require_same_universe(a, b, "sum");
    auto gens = a.generators().sets();
    gens.insert(gens.end(), b.generators().begin(), b.generators().end());
    return SquareFreeIdeal(a.universe(), std::move(gens));
}

/// Pairwise lcm expansion; for square-free monomials lcm is support union.
inline SquareFreeIdeal intersect(const SquareFreeIdeal& a, const SquareFreeIdeal& b)
{
    detail::require_same_universe(a, b, "intersect");
    std::vector<VertexSet> gens;
    gens.reserve(a.generators().size() * b.generators().size());
    for (const auto& x : a.generators())
        for (const auto& y : b.generators())
            gens.push_back(x | y);
    return SquareFreeIdeal(a.universe(), std::move(gens));
}

inline bool contains_monomial(const SquareFreeIdeal& ideal, const VertexSet& monomial)
{
    for (const auto& g : ideal.generators())
        if (g.is_subset_of(monomial))
            return true;
    return false;
}

/// Minimal primes as supports. `zero_ideal` flags the zero ideal, whose
/// (only) minimal prime is the zero prime and whose family is reported empty.
struct MinimalPrimes {
    SpernerFamily primes;
    bool zero_ideal = false;
};

inline MinimalPrimes minimal_primes(const SquareFreeIdeal& ideal)
{
    if (ideal.is_unit())
        throw PreconditionError("unit ideal has no primes");
    if (ideal.is_zero())
        return {SpernerFamily(ideal.universe(), {}), true};
    return {minimal_transversals(ideal.generators()), false};
}

/// All minimal primes have the same height. The zero ideal is unmixed.
inline bool is_unmixed(const SquareFreeIdeal& ideal)
{
    if (ideal.is_unit())
        throw PreconditionError("unit ideal has no primes");
    if (ideal.is_zero())
        return true;
    auto primes = minimal_transversals(ideal.generators());
    for (const auto& p : primes)
        if (p.size() != primes[0].size())
            return false;
    return true;
}

}  // namespace onikit

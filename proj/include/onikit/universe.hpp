#pragma once

// Ground sets, vertex subsets, Sperner families and hypergraph dualization.
//
// A Universe is an immutable, lexicographically ordered list of labels. Every
// other object (ideals, complexes, graphs) refers to vertices by their
// position in a Universe, so a VertexSet is nothing more than a bitset over
// positions. Ordering positions by label makes every output canonical.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "onikit/error.hpp"

namespace onikit {

/// Dynamic bitset over universe positions. Trailing zero words are trimmed so
/// that structural equality is set equality.
class VertexSet {
public:
    VertexSet() = default;

    VertexSet(std::initializer_list<std::size_t> positions)
    {
        for (auto p : positions)
            insert(p);
    }

    static VertexSet full(std::size_t n)
    {
        VertexSet s;
        s.words_.assign((n + 63) / 64, ~std::uint64_t{0});
        if (n % 64 != 0)
            s.words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
        s.trim();
        return s;
    }

    bool contains(std::size_t p) const
    {
        auto w = p / 64;
        return w < words_.size() && ((words_[w] >> (p % 64)) & 1U);
    }

    void insert(std::size_t p)
    {
        auto w = p / 64;
        if (w >= words_.size())
            words_.resize(w + 1, 0);
        words_[w] |= std::uint64_t{1} << (p % 64);
    }

    void erase(std::size_t p)
    {
        auto w = p / 64;
        if (w < words_.size()) {
            words_[w] &= ~(std::uint64_t{1} << (p % 64));
            trim();
        }
    }

    std::size_t size() const
    {
        std::size_t n = 0;
        for (auto w : words_)
            n += static_cast<std::size_t>(std::popcount(w));
        return n;
    }

    bool empty() const { return words_.empty(); }

    /// One past the largest member, 0 for the empty set.
    std::size_t bound() const
    {
        if (words_.empty())
            return 0;
        return (words_.size() - 1) * 64 + (64 - static_cast<std::size_t>(std::countl_zero(words_.back())));
    }

    std::optional<std::size_t> first() const
    {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w] != 0)
                return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
        return std::nullopt;
    }

    bool is_subset_of(const VertexSet& other) const
    {
        if (words_.size() > other.words_.size())
            return false;
        for (std::size_t w = 0; w < words_.size(); ++w)
            if ((words_[w] & ~other.words_[w]) != 0)
                return false;
        return true;
    }

    bool intersects(const VertexSet& other) const
    {
        auto n = std::min(words_.size(), other.words_.size());
        for (std::size_t w = 0; w < n; ++w)
            if ((words_[w] & other.words_[w]) != 0)
                return true;
        return false;
    }

    VertexSet& operator|=(const VertexSet& other)
    {
        if (other.words_.size() > words_.size())
            words_.resize(other.words_.size(), 0);
        for (std::size_t w = 0; w < other.words_.size(); ++w)
            words_[w] |= other.words_[w];
        return *this;
    }

    VertexSet& operator&=(const VertexSet& other)
    {
        if (words_.size() > other.words_.size())
            words_.resize(other.words_.size());
        for (std::size_t w = 0; w < words_.size(); ++w)
            words_[w] &= other.words_[w];
        trim();
        return *this;
    }

    VertexSet& operator-=(const VertexSet& other)
    {
        auto n = std::min(words_.size(), other.words_.size());
        for (std::size_t w = 0; w < n; ++w)
            words_[w] &= ~other.words_[w];
        trim();
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    template <class F>
    void for_each(F&& f) const
    {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            auto bits = words_[w];
            while (bits != 0) {
                f(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    /// Members in ascending position order.
    std::vector<std::size_t> members() const
    {
        std::vector<std::size_t> out;
        for_each([&](std::size_t p) { out.push_back(p); });
        return out;
    }

    std::size_t hash() const
    {
        std::size_t h = 0xcbf29ce484222325ULL;
        for (auto w : words_)
            h = (h ^ std::hash<std::uint64_t>{}(w)) * 0x100000001b3ULL;
        return h;
    }

    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    /// Canonical order: by size, then lexicographically by ascending member
    /// sequence. For equal sizes the set owning the lowest element of the
    /// symmetric difference comes first.
    friend bool canonical_less(const VertexSet& a, const VertexSet& b)
    {
        auto sa = a.size(), sb = b.size();
        if (sa != sb)
            return sa < sb;
        auto n = std::max(a.words_.size(), b.words_.size());
        for (std::size_t w = 0; w < n; ++w) {
            auto x = w < a.words_.size() ? a.words_[w] : 0;
            auto y = w < b.words_.size() ? b.words_[w] : 0;
            if (x != y) {
                auto low = (x ^ y) & (~(x ^ y) + 1);
                return (x & low) != 0;
            }
        }
        return false;
    }

private:
    void trim()
    {
        while (!words_.empty() && words_.back() == 0)
            words_.pop_back();
    }

    std::vector<std::uint64_t> words_;
};

bool canonical_less(const VertexSet& a, const VertexSet& b);

/// Immutable ordered ground set. Copies share storage.
class Universe {
public:
    Universe() : data_(std::make_shared<const Data>()) {}

    explicit Universe(std::vector<std::string> labels)
    {
        std::sort(labels.begin(), labels.end());
        auto dup = std::adjacent_find(labels.begin(), labels.end());
        if (dup != labels.end())
            throw InputError("duplicate label '" + *dup + "' in universe");
        Data d;
        d.labels = std::move(labels);
        for (std::size_t i = 0; i < d.labels.size(); ++i)
            d.index.emplace(d.labels[i], i);
        data_ = std::make_shared<const Data>(std::move(d));
    }

    std::size_t size() const { return data_->labels.size(); }
    bool empty() const { return data_->labels.empty(); }
    const std::string& label(std::size_t p) const { return data_->labels.at(p); }
    const std::vector<std::string>& labels() const { return data_->labels; }

    std::optional<std::size_t> find(std::string_view label) const
    {
        auto it = data_->index.find(label);
        if (it == data_->index.end())
            return std::nullopt;
        return it->second;
    }

    bool contains(std::string_view label) const { return find(label).has_value(); }

    std::size_t position(std::string_view label) const
    {
        if (auto p = find(label))
            return *p;
        throw InputError("unknown label '" + std::string(label) + "'");
    }

    template <class Range>
    VertexSet set_of(const Range& labels) const
    {
        VertexSet s;
        for (const auto& l : labels)
            s.insert(position(l));
        return s;
    }

    VertexSet set(std::initializer_list<std::string_view> labels) const
    {
        VertexSet s;
        for (auto l : labels)
            s.insert(position(l));
        return s;
    }

    VertexSet all() const { return VertexSet::full(size()); }

    /// True when every member of `s` is a valid position of this universe.
    bool owns(const VertexSet& s) const { return s.bound() <= size(); }

    std::vector<std::string> labels_of(const VertexSet& s) const
    {
        std::vector<std::string> out;
        s.for_each([&](std::size_t p) { out.push_back(label(p)); });
        return out;
    }

    std::string format(const VertexSet& s) const
    {
        std::ostringstream os;
        os << '{';
        bool first = true;
        s.for_each([&](std::size_t p) {
            os << (first ? "" : ",") << label(p);
            first = false;
        });
        os << '}';
        return os.str();
    }

    /// Sub-universe keeping only the labels in `keep`.
    Universe restricted(const VertexSet& keep) const { return Universe(labels_of(keep & all())); }
    Universe without(const VertexSet& drop) const { return restricted(all() - drop); }

    friend bool operator==(const Universe& a, const Universe& b)
    {
        return a.data_ == b.data_ || a.data_->labels == b.data_->labels;
    }

private:
    struct Data {
        std::vector<std::string> labels;
        std::map<std::string, std::size_t, std::less<>> index;
    };
    std::shared_ptr<const Data> data_;
};

inline Universe union_of(const Universe& a, const Universe& b)
{
    std::vector<std::string> labels = a.labels();
    for (const auto& l : b.labels())
        if (!a.contains(l))
            labels.push_back(l);
    return Universe(std::move(labels));
}

/// Re-express `s` (over `from`) as a set over `to`, matching by label.
inline VertexSet remap(const VertexSet& s, const Universe& from, const Universe& to)
{
    if (from == to)
        return s;
    VertexSet out;
    s.for_each([&](std::size_t p) {
        auto q = to.find(from.label(p));
        if (!q)
            throw InputError("label '" + from.label(p) + "' is not in the target universe");
        out.insert(*q);
    });
    return out;
}

class SpernerFamily;
SpernerFamily minimize_family(const Universe& universe, std::vector<VertexSet> sets);
SpernerFamily maximize_family(const Universe& universe, std::vector<VertexSet> sets);

/// Inclusion antichain of vertex sets in canonical order.
class SpernerFamily {
public:
    SpernerFamily() = default;

    /// Validating constructor: duplicates are merged, a strict containment is
    /// an InputError.
    SpernerFamily(Universe universe, std::vector<VertexSet> sets) : universe_(std::move(universe))
    {
        for (const auto& s : sets)
            if (!universe_.owns(s))
                throw InputError("set is not drawn from the given universe");
        std::sort(sets.begin(), sets.end(), canonical_less);
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (std::size_t j = i + 1; j < sets.size(); ++j)
                if (sets[i].is_subset_of(sets[j]))
                    throw InputError("not a Sperner family: " + universe_.format(sets[i]) + " is contained in "
                                     + universe_.format(sets[j]));
        sets_ = std::move(sets);
    }

    const Universe& universe() const { return universe_; }
    const std::vector<VertexSet>& sets() const { return sets_; }
    std::size_t size() const { return sets_.size(); }
    bool empty() const { return sets_.empty(); }
    auto begin() const { return sets_.begin(); }
    auto end() const { return sets_.end(); }
    const VertexSet& operator[](std::size_t i) const { return sets_[i]; }

    bool contains_set(const VertexSet& s) const { return std::binary_search(sets_.begin(), sets_.end(), s, canonical_less); }

    /// Union of all members.
    VertexSet support() const
    {
        VertexSet u;
        for (const auto& s : sets_)
            u |= s;
        return u;
    }

    std::vector<std::vector<std::string>> labeled() const
    {
        std::vector<std::vector<std::string>> out;
        out.reserve(sets_.size());
        for (const auto& s : sets_)
            out.push_back(universe_.labels_of(s));
        return out;
    }

    std::string format() const
    {
        std::string out = "{";
        for (std::size_t i = 0; i < sets_.size(); ++i)
            out += (i ? "," : "") + universe_.format(sets_[i]);
        return out + "}";
    }

    /// Same sets over a different universe containing every used label.
    SpernerFamily over(const Universe& target) const
    {
        std::vector<VertexSet> moved;
        moved.reserve(sets_.size());
        for (const auto& s : sets_)
            moved.push_back(remap(s, universe_, target));
        std::sort(moved.begin(), moved.end(), canonical_less);
        return SpernerFamily(Trusted{}, target, std::move(moved));
    }

    friend bool operator==(const SpernerFamily& a, const SpernerFamily& b)
    {
        return a.universe_ == b.universe_ && a.sets_ == b.sets_;
    }

private:
    struct Trusted {};
    SpernerFamily(Trusted, Universe universe, std::vector<VertexSet> sets)
        : universe_(std::move(universe)), sets_(std::move(sets))
    {
    }

    friend SpernerFamily minimize_family(const Universe&, std::vector<VertexSet>);
    friend SpernerFamily maximize_family(const Universe&, std::vector<VertexSet>);

    Universe universe_;
    std::vector<VertexSet> sets_;
};

/// Keeps exactly the inclusion-minimal sets.
inline SpernerFamily minimize_family(const Universe& universe, std::vector<VertexSet> sets)
{
    for (const auto& s : sets)
        if (!universe.owns(s))
            throw InputError("set is not drawn from the given universe");
    std::sort(sets.begin(), sets.end(), canonical_less);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> kept;
    for (auto& s : sets) {
        bool redundant = std::any_of(kept.begin(), kept.end(), [&](const VertexSet& k) { return k.is_subset_of(s); });
        if (!redundant)
            kept.push_back(std::move(s));
    }
    return SpernerFamily(SpernerFamily::Trusted{}, universe, std::move(kept));
}

/// Keeps exactly the inclusion-maximal sets (facets of the generated complex).
inline SpernerFamily maximize_family(const Universe& universe, std::vector<VertexSet> sets)
{
    for (const auto& s : sets)
        if (!universe.owns(s))
            throw InputError("set is not drawn from the given universe");
    std::sort(sets.begin(), sets.end(), canonical_less);
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::vector<VertexSet> kept;
    for (std::size_t i = sets.size(); i-- > 0;) {
        bool redundant = std::any_of(kept.begin(), kept.end(), [&](const VertexSet& k) { return sets[i].is_subset_of(k); });
        if (!redundant)
            kept.push_back(sets[i]);
    }
    std::sort(kept.begin(), kept.end(), canonical_less);
    return SpernerFamily(SpernerFamily::Trusted{}, universe, std::move(kept));
}

inline bool is_sperner(const std::vector<VertexSet>& sets)
{
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = 0; j < sets.size(); ++j)
            if (i != j && sets[i].is_subset_of(sets[j]))
                return false;
    return true;
}

/// All inclusion-minimal transversals (Berge dualization). The empty family
/// dualizes to {{}}; a family containing the empty set has no transversal and
/// dualizes to the empty family.
inline SpernerFamily minimal_transversals(const SpernerFamily& family)
{
    const auto& u = family.universe();
    std::vector<VertexSet> current{VertexSet{}};
    for (const auto& edge : family) {
        std::vector<VertexSet> next;
        std::vector<VertexSet> extended;
        for (const auto& t : current) {
            if (t.intersects(edge)) {
                next.push_back(t);
                continue;
            }
            edge.for_each([&](std::size_t p) {
                auto grown = t;
                grown.insert(p);
                extended.push_back(std::move(grown));
            });
        }
        // Survivors are pairwise incomparable already; only extensions can be redundant.
        for (auto& e : extended) {
            bool redundant = std::any_of(next.begin(), next.end(), [&](const VertexSet& k) { return k.is_subset_of(e); });
            if (!redundant)
                next.push_back(std::move(e));
        }
        current = minimize_family(u, std::move(next)).sets();
        if (current.empty())
            break;
    }
    return minimize_family(u, std::move(current));
}

/// Exhaustive subset scan; kept as an independent check of the Berge kernel.
inline SpernerFamily brute_force_transversals(const SpernerFamily& family, std::size_t cap = 20)
{
    const auto& u = family.universe();
    if (u.size() > cap)
        throw ResourceError("brute-force dualization cap exceeded: universe has " + std::to_string(u.size())
                            + " elements, cap is " + std::to_string(cap));
    std::vector<std::uint64_t> masks;
    for (const auto& s : family) {
        std::uint64_t m = 0;
        s.for_each([&](std::size_t p) { m |= std::uint64_t{1} << p; });
        masks.push_back(m);
    }
    auto hits_all = [&](std::uint64_t t) {
        return std::all_of(masks.begin(), masks.end(), [&](std::uint64_t m) { return (m & t) != 0; });
    };
    std::vector<VertexSet> out;
    const std::uint64_t limit = std::uint64_t{1} << u.size();
    for (std::uint64_t t = 0; t < limit; ++t) {
        if (!hits_all(t))
            continue;
        bool minimal = true;
        for (auto bits = t; bits != 0 && minimal; bits &= bits - 1)
            if (hits_all(t & ~(bits & (~bits + 1))))
                minimal = false;
        if (!minimal)
            continue;
        VertexSet s;
        for (auto bits = t; bits != 0; bits &= bits - 1)
            s.insert(static_cast<std::size_t>(std::countr_zero(bits)));
        out.push_back(std::move(s));
    }
    return minimize_family(u, std::move(out));
}

}  // namespace onikit

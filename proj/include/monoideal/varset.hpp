#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace monoideal {

/// Fixed-capacity set of variable indices. Prime ideals, vertex covers and
/// generator supports are all VarSets.
class VarSet {
public:
    static constexpr std::size_t capacity = 128;

    constexpr VarSet() = default;

    static VarSet of(std::initializer_list<std::size_t> indices) {
        VarSet s;
        for (auto i : indices) s.insert(i);
        return s;
    }

    constexpr void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    constexpr void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    constexpr bool contains(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1U;
    }

    constexpr std::size_t count() const {
        return static_cast<std::size_t>(std::popcount(words_[0]) + std::popcount(words_[1]));
    }
    constexpr bool empty() const { return (words_[0] | words_[1]) == 0; }

    constexpr bool is_subset_of(const VarSet& o) const {
        return (words_[0] & ~o.words_[0]) == 0 && (words_[1] & ~o.words_[1]) == 0;
    }
    constexpr bool intersects(const VarSet& o) const {
        return (words_[0] & o.words_[0]) != 0 || (words_[1] & o.words_[1]) != 0;
    }

    constexpr VarSet operator|(const VarSet& o) const {
        VarSet r;
        r.words_ = {words_[0] | o.words_[0], words_[1] | o.words_[1]};
        return r;
    }
    constexpr VarSet operator&(const VarSet& o) const {
        VarSet r;
        r.words_ = {words_[0] & o.words_[0], words_[1] & o.words_[1]};
        return r;
    }
    /// Set difference.
    constexpr VarSet operator-(const VarSet& o) const {
        VarSet r;
        r.words_ = {words_[0] & ~o.words_[0], words_[1] & ~o.words_[1]};
        return r;
    }
    VarSet& operator|=(const VarSet& o) { return *this = *this | o; }

    /// Ascending list of members.
    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for (std::size_t w = 0; w < 2; ++w) {
            auto bits = words_[w];
            while (bits != 0) {
                out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
        return out;
    }

    /// Smallest member; undefined on the empty set.
    std::size_t front() const {
        return words_[0] != 0 ? static_cast<std::size_t>(std::countr_zero(words_[0]))
                              : 64 + static_cast<std::size_t>(std::countr_zero(words_[1]));
    }

    friend constexpr bool operator==(const VarSet&, const VarSet&) = default;

    /// Lexicographic order on the ascending member lists: {0,2,4} < {2,3,4}
    /// and a proper prefix sorts first.
    friend std::strong_ordering operator<=>(const VarSet& a, const VarSet& b) {
        if (a == b) return std::strong_ordering::equal;
        VarSet diff;
        diff.words_ = {a.words_[0] ^ b.words_[0], a.words_[1] ^ b.words_[1]};
        const std::size_t p = diff.front();
        const VarSet& holder = a.contains(p) ? a : b;
        const VarSet& other = a.contains(p) ? b : a;
        // `other` continues past p only if it has a member above p.
        VarSet above = other;
        for (std::size_t i = 0; i <= p; ++i) above.erase(i);
        const bool holder_first = !above.empty();
        const bool a_first = (&holder == &a) == holder_first;
        return a_first ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    std::size_t hash() const noexcept {
        return std::hash<std::uint64_t>{}(words_[0] * 0x9E3779B97F4A7C15ULL ^ words_[1]);
    }

private:
    std::array<std::uint64_t, 2> words_{0, 0};
};

struct VarSetHash {
    std::size_t operator()(const VarSet& s) const noexcept { return s.hash(); }
};

}  // namespace monoideal

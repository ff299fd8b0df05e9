#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "monoideal/monomial.hpp"

namespace monoideal {

/// Lexicographic term order given by a precedence permutation of the
/// variable indices, highest first.
class TermOrder {
public:
    /// Throws Errc::domain if `precedence` is not a permutation of 0..n-1.
    explicit TermOrder(std::vector<std::size_t> precedence);

    static TermOrder natural(std::size_t nvars);

    std::size_t size() const noexcept { return precedence_.size(); }
    const std::vector<std::size_t>& precedence() const noexcept { return precedence_; }
    /// Position of var in the precedence list; 0 is the largest variable.
    std::size_t rank(std::size_t var) const { return rank_.at(var); }
    bool var_greater(std::size_t a, std::size_t b) const { return rank_[a] < rank_[b]; }

    std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
    bool greater(const Monomial& a, const Monomial& b) const {
        return compare(a, b) == std::strong_ordering::greater;
    }

    friend bool operator==(const TermOrder& a, const TermOrder& b) {
        return a.precedence_ == b.precedence_;
    }

private:
    std::vector<std::size_t> precedence_;
    std::vector<std::size_t> rank_;
};

/// A chain {v0, v1, ...} demands v0 > v1 > ... in the completed order.
using OrderChain = std::vector<std::size_t>;

enum class Completion {
    chain_priority,          ///< chains in listed order, unconstrained appended ascending
    unconstrained_descending,///< chains in listed order, unconstrained appended descending
    unconstrained_first,     ///< unconstrained ascending on top, then the chains
    index_ascending,         ///< topological sort, smallest available index first
    index_descending,        ///< topological sort, largest available index first
};

/// Total lex order honoring every chain. Throws Errc::domain if the chains
/// are contradictory or mention an out-of-range index.
TermOrder complete_order(std::size_t nvars, std::span<const OrderChain> chains,
                         Completion strategy = Completion::chain_priority);

/// Distinct completions produced by the strategies above, in strategy order,
/// at most `limit` of them.
std::vector<TermOrder> distinct_completions(std::size_t nvars, std::span<const OrderChain> chains,
                                            std::size_t limit = 5);

bool satisfies(const TermOrder& order, std::span<const OrderChain> chains);

}  // namespace monoideal

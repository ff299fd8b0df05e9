#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monoideal/budget.hpp"
#include "monoideal/ideal.hpp"
#include "monoideal/term_order.hpp"

namespace monoideal {

/// Variables dividing exactly one generator, ascending.
std::vector<std::size_t> find_leaves(const MonomialIdeal& ideal);

/// Leaf-pair witness: leaves a, b with unique generators M1 != M2, coprime
/// z | M1, w | M2 with a not dividing z, b not dividing w, and zw in I.
struct LeafPair {
    std::size_t a;
    std::size_t b;
    Monomial z;
    Monomial w;

    friend bool operator==(const LeafPair&, const LeafPair&) = default;
};

/// Every witness with a < b (the relation is symmetric under swapping
/// (a, z) with (b, w)). z and w range over the divisors of M1 and M2.
std::vector<LeafPair> find_leaf_pairs(const MonomialIdeal& ideal);
bool is_leaf_pair(const MonomialIdeal& ideal, std::size_t a, std::size_t b);

enum class BinomialContext { none, leaf, leaf_pair };

/// Which validated setting, if any, the closed form for ini(I, a + b) is
/// used in: a a leaf whose generator is divisible by ab, or {a, b} a leaf pair.
BinomialContext binomial_context(const MonomialIdeal& ideal, std::size_t a, std::size_t b);

/// The lex completion a > b > (everything else in ring order).
TermOrder binomial_order(std::size_t nvars, std::size_t a, std::size_t b);
TermOrder trinomial_order(std::size_t nvars, std::size_t a, std::size_t b, std::size_t c);

/// ini(I, a + b) for a > b: (a, b^{d_a(M)} M / a^{d_a(M)} : M in G(I)).
///
/// Outside a validated context this throws Errc::precondition_violated
/// unless `allow_override` is set; overridden calls are cross-checked
/// against Buchberger (Errc::oracle_mismatch on disagreement).
MonomialIdeal ini_binomial(const MonomialIdeal& ideal, std::size_t a, std::size_t b, bool allow_override = false,
                           const Budget& budget = {});

/// Reason the closed trinomial form does not apply, if any.
std::optional<std::string> trinomial_precondition_failure(const MonomialIdeal& ideal, std::size_t a,
                                                          std::size_t b, std::size_t c);

/// ini(I, a + b + c) for a > b > c, under d_a, d_b, d_c <= 1, every
/// generator divisible by a also divisible by b or c, and no generator
/// divisible by bc:
///
///   (a, M^, lcm(X, M') c^2 : M, bX, acM' in G(I))
///
/// where M^ replaces a by b and leaves generators without a unchanged.
MonomialIdeal ini_trinomial(const MonomialIdeal& ideal, std::size_t a, std::size_t b, std::size_t c);

enum class TransferCase { leaf, leaf_pair, leaf_pair_converse, trinomial };

const char* to_string(TransferCase c) noexcept;

struct TransferParams {
    std::size_t a;
    std::size_t b;
    std::optional<std::size_t> c;  ///< trinomial case only
};

struct TransferReport {
    TransferCase kind;
    std::size_t checked_primes = 0;
    std::vector<std::string> violations;

    bool ok() const noexcept { return violations.empty(); }
};

/// Verifies the minimal-prime transfer statement for one instance:
///   leaf               every Q in Min(I_1) is (P, a), P in Min(I)
///   leaf_pair          every Q in Min(I_1) is (P, a) or (P, b)
///   leaf_pair_converse for edge ideals, (P, a) in Min(I_1) if a not in P,
///                      else (P, b) in Min(I_1)
///   trinomial          G(I) = {ab, ac, M_i}, a not dividing M_i,
///                      d_b = d_c = 1: Q = (P, a) with c in P or
///                      Q = (P, b) with c not in P
/// I_1 comes from the matching closed form. Hypotheses are checked first
/// (Errc::precondition_violated).
TransferReport check_min_prime_transfer(const MonomialIdeal& ideal, TransferCase kind,
                                        const TransferParams& params);

}  // namespace monoideal

#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "monoideal/budget.hpp"
#include "monoideal/ideal.hpp"
#include "monoideal/linear_form.hpp"
#include "monoideal/varset.hpp"

namespace monoideal {

/// Monomial prime (x_i : i in vars).
struct MonomialPrime {
    VarSet vars;

    /// P contains M iff some variable of P divides M.
    bool contains(const Monomial& m) const;

    friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;
    friend auto operator<=>(const MonomialPrime& a, const MonomialPrime& b) { return a.vars <=> b.vars; }
};

/// Variables dividing m (at most VarSet::capacity of them).
VarSet support_set(const Monomial& m);

/// Sorted, duplicate free.
using PrimeSet = std::vector<MonomialPrime>;

/// Inclusion-minimal vertex sets meeting every edge, sorted. Branches on the
/// unhit edge with the fewest free vertices and prunes any partial cover in
/// which some chosen vertex has lost all of its private edges.
std::vector<VarSet> minimal_transversals(std::span<const VarSet> edges);

/// Min(R/I). Errc::zero_ideal on the zero ideal.
PrimeSet minimal_primes(const MonomialIdeal& ideal);

/// x^a in a generator becomes x_1 x_2 ... x_a. Each source variable x gets
/// d_x(I) copies, named "<x>_<j>".
class PolarizationMap {
public:
    PolarizationMap(RingSpec source, std::vector<Exponent> copies);

    const RingSpec& source() const noexcept { return source_; }
    const RingSpec& target() const noexcept { return target_; }
    std::size_t copies(std::size_t var) const { return copies_.at(var); }
    /// `copy` counts from 1.
    std::size_t target_index(std::size_t var, std::size_t copy) const;
    std::size_t source_of(std::size_t target_var) const { return source_of_.at(target_var); }

    Monomial polarize(const Monomial& m) const;
    /// Drops the copy indices.
    VarSet depolarize(const VarSet& target_vars) const;

private:
    RingSpec source_;
    RingSpec target_;
    std::vector<Exponent> copies_;
    std::vector<std::size_t> offset_;
    std::vector<std::size_t> source_of_;
};

struct Polarization {
    MonomialIdeal ideal;
    PolarizationMap map;
};

/// Errc::zero_ideal on the zero ideal.
Polarization polarize(const MonomialIdeal& ideal);

/// Ass(R/I) through the polarization: minimal primes of I^pol, depolarized.
PrimeSet associated_primes(const MonomialIdeal& ideal);

/// Ass(R/I) straight from the definition: every witness c with
/// d_x(c) <= d_x(I) is tried and kept when (I : c) is generated by variables.
/// Errc::budget_exceeded when the witness lattice is larger than the budget.
PrimeSet associated_primes_bruteforce(const MonomialIdeal& ideal,
                                      std::uint64_t max_candidates = Budget{}.witness_candidates);

/// Ass(R/I) \ Min(R/I).
PrimeSet embedded_primes(const MonomialIdeal& ideal);

/// N*(w) = { z != w : some generator M has zw | M and d_w(M) < d_w(I) }.
VarSet star_neighbors(const MonomialIdeal& ideal, std::size_t w);

struct EmbeddedExtra {
    std::size_t z;
    std::size_t witness;  ///< z lies in N*(witness)

    friend bool operator==(const EmbeddedExtra&, const EmbeddedExtra&) = default;
};

/// Q = (Q', z_1, ..., z_t) with Q' minimal and every z_j a star neighbor.
struct EmbeddedDecomposition {
    MonomialPrime minimal_prime;
    std::vector<EmbeddedExtra> extras;

    MonomialPrime combined() const;
};

/// Among the minimal primes strictly inside Q whose complement in Q consists
/// of star neighbors, returns the one with the fewest extras (ties: least
/// prime). The extras are labelled from a smallest set of witnesses, each by
/// the least witness in that set covering it.
///
/// Errc::domain if Q is not associated, Errc::not_embedded if Q is minimal,
/// Errc::no_decomposition if no labelling exists.
EmbeddedDecomposition embedded_decomposition(const MonomialIdeal& ideal, const MonomialPrime& q);

/// d_x(M) = d_x(I) for every variable x and generator M divisible by x.
bool has_no_embedded_hypothesis(const MonomialIdeal& ideal);

/// f is a nonzerodivisor on R/I iff no associated prime contains supp(f).
bool is_regular_linear_form(const MonomialIdeal& ideal, const LinearForm& f);

/// "(a, c, e)"
std::string format_prime(const RingSpec& ring, const MonomialPrime& p);
std::vector<std::string> prime_names(const RingSpec& ring, const MonomialPrime& p);

}  // namespace monoideal

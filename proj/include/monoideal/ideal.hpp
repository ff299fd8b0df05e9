#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "monoideal/monomial.hpp"
#include "monoideal/ring.hpp"

namespace monoideal {

/// Monomial ideal stored by its canonical minimal generating set G(I),
/// sorted descending by exponent vector. Empty G(I) is the zero ideal; the
/// unit ideal is not representable.
class MonomialIdeal {
public:
    /// Minimalizes `gens`. Throws Errc::unit_ideal if 1 is among them and
    /// Errc::ring_mismatch if a generator has the wrong length.
    MonomialIdeal(RingSpec ring, std::vector<Monomial> gens);

    static MonomialIdeal zero(RingSpec ring) { return MonomialIdeal(std::move(ring), {}); }

    const RingSpec& ring() const noexcept { return ring_; }
    std::size_t nvars() const noexcept { return ring_.size(); }
    std::span<const Monomial> gens() const noexcept { return gens_; }
    std::size_t size() const noexcept { return gens_.size(); }
    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_squarefree() const noexcept;

    /// m lies in I iff some generator divides m.
    bool contains(const Monomial& m) const;

    friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
        return a.gens_ == b.gens_ && a.ring_ == b.ring_;
    }

private:
    RingSpec ring_;
    std::vector<Monomial> gens_;
};

/// Inclusion-minimal antichain generating the same ideal as `gens`.
MonomialIdeal minimal_generators(const RingSpec& ring, std::vector<Monomial> gens);

/// (I : c). Throws Errc::unit_ideal when c lies in I (the colon is then R).
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& c);

/// max degree of variable x over G(I); Errc::zero_ideal on the zero ideal.
Exponent var_degree(const MonomialIdeal& ideal, std::size_t x);

MonomialIdeal squarefree_part(const MonomialIdeal& ideal);

/// Ideal generated by the n-th powers of the generators, n >= 1.
MonomialIdeal bracket_power(const MonomialIdeal& ideal, std::uint32_t n);

/// I + (extra generators), minimalized.
MonomialIdeal sum(const MonomialIdeal& ideal, std::span<const Monomial> extra);

}  // namespace monoideal

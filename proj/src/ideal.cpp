#include "monoideal/ideal.hpp"

#include <algorithm>

#include "monoideal/error.hpp"

namespace monoideal {

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    // A divisor always has total degree at most that of its multiples, so a
    // single pass in degree order keeps exactly the minimal elements.
    std::stable_sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        return a.total_degree() < b.total_degree();
    });
    std::vector<Monomial> kept;
    for (auto& g : gens) {
        bool redundant = std::any_of(kept.begin(), kept.end(),
                                     [&](const Monomial& k) { return k.divides(g); });
        if (!redundant) kept.push_back(std::move(g));
    }
    std::sort(kept.begin(), kept.end(), std::greater<>{});
    return kept;
}

}  // namespace

MonomialIdeal::MonomialIdeal(RingSpec ring, std::vector<Monomial> gens) : ring_(std::move(ring)) {
    for (const auto& g : gens) {
        if (g.size() != ring_.size())
            throw Error(Errc::ring_mismatch, "generator length differs from ring size");
        if (g.is_one()) throw Error(Errc::unit_ideal, "1 is a generator");
    }
    gens_ = minimalize(std::move(gens));
}

bool MonomialIdeal::is_squarefree() const noexcept {
    return std::all_of(gens_.begin(), gens_.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

bool MonomialIdeal::contains(const Monomial& m) const {
    if (m.size() != ring_.size()) throw Error(Errc::ring_mismatch, "monomial length differs from ring size");
    return std::any_of(gens_.begin(), gens_.end(), [&](const Monomial& g) { return g.divides(m); });
}

MonomialIdeal minimal_generators(const RingSpec& ring, std::vector<Monomial> gens) {
    return MonomialIdeal(ring, std::move(gens));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& c) {
    if (ideal.contains(c)) throw Error(Errc::unit_ideal, "(I : c) is the unit ideal since c lies in I");
    std::vector<Monomial> gens;
    gens.reserve(ideal.size());
    for (const auto& g : ideal.gens()) gens.push_back(quotient(g, gcd(g, c)));
    return MonomialIdeal(ideal.ring(), std::move(gens));
}

Exponent var_degree(const MonomialIdeal& ideal, std::size_t x) {
    if (ideal.is_zero()) throw Error(Errc::zero_ideal, "var_degree of the zero ideal");
    if (x >= ideal.nvars()) throw Error(Errc::domain, "variable index out of range");
    Exponent d = 0;
    for (const auto& g : ideal.gens()) d = std::max(d, g[x]);
    return d;
}

MonomialIdeal squarefree_part(const MonomialIdeal& ideal) {
    std::vector<Monomial> gens;
    for (const auto& g : ideal.gens()) gens.push_back(radical(g));
    return MonomialIdeal(ideal.ring(), std::move(gens));
}

MonomialIdeal bracket_power(const MonomialIdeal& ideal, std::uint32_t n) {
    if (n == 0) throw Error(Errc::domain, "bracket power needs n >= 1");
    std::vector<Monomial> gens;
    for (const auto& g : ideal.gens()) gens.push_back(pow(g, n));
    return MonomialIdeal(ideal.ring(), std::move(gens));
}

MonomialIdeal sum(const MonomialIdeal& ideal, std::span<const Monomial> extra) {
    std::vector<Monomial> gens(ideal.gens().begin(), ideal.gens().end());
    gens.insert(gens.end(), extra.begin(), extra.end());
    return MonomialIdeal(ideal.ring(), std::move(gens));
}

}  // namespace monoideal

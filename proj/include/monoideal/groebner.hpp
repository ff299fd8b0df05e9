#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <span>
#include <vector>

#include "monoideal/budget.hpp"
#include "monoideal/ideal.hpp"
#include "monoideal/linear_form.hpp"
#include "monoideal/term_order.hpp"

namespace monoideal {

using Rational = boost::multiprecision::cpp_rational;

struct Term {
    Monomial mono;
    Rational coeff;

    friend bool operator==(const Term&, const Term&) = default;
};

/// Polynomial with exact rational coefficients. Terms are kept canonical:
/// no zero coefficients, sorted descending by exponent vector.
class Polynomial {
public:
    explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}

    static Polynomial monomial(const Monomial& m, Rational coeff = 1);
    static Polynomial linear_form(const LinearForm& f, std::size_t nvars);

    std::size_t nvars() const noexcept { return nvars_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }

    /// Adds c * m.
    void add_term(const Monomial& m, const Rational& coeff);

    /// Errc::domain on the zero polynomial.
    const Term& leading_term(const TermOrder& order) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    /// c * m * p
    Polynomial scaled(const Rational& c, const Monomial& m) const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    std::size_t nvars_;
    std::vector<Term> terms_;
};

/// Full normal form: no term of the result is divisible by a leading
/// monomial of the basis.
Polynomial reduce(const Polynomial& p, std::span<const Polynomial> basis, const TermOrder& order);

struct GroebnerBasis {
    TermOrder order;
    std::vector<Polynomial> polys;  ///< reduced, monic, sorted by leading monomial (largest first)

    std::vector<Monomial> leading_monomials() const;
};

/// Reduced Groebner basis by Buchberger's algorithm. Pairs are taken by the
/// normal strategy (least lcm first, FIFO on ties); coprime leading terms are
/// skipped. Errc::budget_exceeded after budget.buchberger_pairs pairs.
GroebnerBasis buchberger(std::span<const Polynomial> gens, const TermOrder& order, const Budget& budget = {});

/// Post-hoc soundness: every S-polynomial of basis pairs reduces to zero.
bool s_pairs_reduce_to_zero(const GroebnerBasis& basis);

/// ini(I, f): leading monomials of the reduced basis of G(I) + {f}.
MonomialIdeal initial_ideal(const MonomialIdeal& ideal, const LinearForm& f, const TermOrder& order,
                            const Budget& budget = {});

/// ini(I) for a monomial ideal is I itself.
MonomialIdeal initial_ideal(const MonomialIdeal& ideal, const TermOrder& order);

}  // namespace monoideal

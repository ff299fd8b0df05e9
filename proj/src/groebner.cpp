#include "monoideal/groebner.hpp"

#include <algorithm>
#include <queue>

#include "monoideal/error.hpp"

namespace monoideal {

namespace {

// Working representation: terms sorted descending under one fixed order.
using Ordered = std::vector<Term>;

class Engine {
public:
    explicit Engine(const TermOrder& order) : order_(order) {}

    Ordered from(const Polynomial& p) const {
        Ordered out = p.terms();
        std::sort(out.begin(), out.end(),
                  [&](const Term& a, const Term& b) { return order_.greater(a.mono, b.mono); });
        return out;
    }

    static Polynomial to_poly(const Ordered& p, std::size_t nvars) {
        Polynomial out(nvars);
        for (const auto& t : p) out.add_term(t.mono, t.coeff);
        return out;
    }

    // a - c * m * b
    Ordered sub_mul(const Ordered& a, const Rational& c, const Monomial& m, const Ordered& b) const {
        Ordered out;
        out.reserve(a.size() + b.size());
        std::size_t i = 0, j = 0;
        while (i < a.size() || j < b.size()) {
            if (j == b.size()) {
                out.push_back(a[i++]);
                continue;
            }
            Monomial bm = b[j].mono * m;
            if (i == a.size()) {
                out.push_back({std::move(bm), -c * b[j++].coeff});
                continue;
            }
            auto cmp = order_.compare(a[i].mono, bm);
            if (cmp == std::strong_ordering::greater) {
                out.push_back(a[i++]);
            } else if (cmp == std::strong_ordering::less) {
                out.push_back({std::move(bm), -c * b[j++].coeff});
            } else {
                Rational v = a[i++].coeff - c * b[j++].coeff;
                if (v != 0) out.push_back({std::move(bm), std::move(v)});
            }
        }
        return out;
    }

    Ordered normal_form(Ordered p, const std::vector<Ordered>& basis) const {
        Ordered result;
        while (!p.empty()) {
            const Term& lt = p.front();
            const Ordered* divisor = nullptr;
            for (const auto& g : basis) {
                if (g.front().mono.divides(lt.mono)) {
                    divisor = &g;
                    break;
                }
            }
            if (divisor == nullptr) {
                result.push_back(lt);
                p.erase(p.begin());
                continue;
            }
            Rational factor = lt.coeff / divisor->front().coeff;
            Monomial shift = quotient(lt.mono, divisor->front().mono);
            p = sub_mul(p, factor, shift, *divisor);
        }
        return result;
    }

    static void make_monic(Ordered& p) {
        Rational lc = p.front().coeff;
        if (lc == 1) return;
        for (auto& t : p) t.coeff /= lc;
    }

    Ordered s_poly(const Ordered& f, const Ordered& g) const {
        Monomial l = lcm(f.front().mono, g.front().mono);
        Ordered lhs = sub_mul({}, Rational(-1) / f.front().coeff, quotient(l, f.front().mono), f);
        return sub_mul(lhs, Rational(1) / g.front().coeff, quotient(l, g.front().mono), g);
    }

    const TermOrder& order() const { return order_; }

private:
    const TermOrder& order_;
};

bool coprime(const Monomial& a, const Monomial& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

}  // namespace

Polynomial Polynomial::monomial(const Monomial& m, Rational coeff) {
    Polynomial p(m.size());
    p.add_term(m, coeff);
    return p;
}

Polynomial Polynomial::linear_form(const LinearForm& f, std::size_t nvars) {
    Polynomial p(nvars);
    for (auto v : f.support()) p.add_term(Monomial::variable(nvars, v), 1);
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& coeff) {
    if (m.size() != nvars_) throw Error(Errc::ring_mismatch, "term not over the polynomial's ring");
    if (coeff == 0) return;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return t.mono > key; });
    if (it != terms_.end() && it->mono == m) {
        it->coeff += coeff;
        if (it->coeff == 0) terms_.erase(it);
    } else {
        terms_.insert(it, Term{m, coeff});
    }
}

const Term& Polynomial::leading_term(const TermOrder& order) const {
    if (terms_.empty()) throw Error(Errc::domain, "leading term of the zero polynomial");
    return *std::max_element(terms_.begin(), terms_.end(),
                             [&](const Term& a, const Term& b) { return order.greater(b.mono, a.mono); });
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& t : other.terms_) add_term(t.mono, t.coeff);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& t : other.terms_) add_term(t.mono, -t.coeff);
    return *this;
}

Polynomial Polynomial::scaled(const Rational& c, const Monomial& m) const {
    Polynomial out(nvars_);
    for (const auto& t : terms_) out.add_term(t.mono * m, c * t.coeff);
    return out;
}

Polynomial reduce(const Polynomial& p, std::span<const Polynomial> basis, const TermOrder& order) {
    Engine eng(order);
    std::vector<Ordered> b;
    for (const auto& g : basis) {
        if (g.is_zero()) throw Error(Errc::domain, "zero polynomial in reduction basis");
        b.push_back(eng.from(g));
    }
    return Engine::to_poly(eng.normal_form(eng.from(p), b), p.nvars());
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
    std::vector<Monomial> out;
    for (const auto& p : polys) out.push_back(p.leading_term(order).mono);
    return out;
}

GroebnerBasis buchberger(std::span<const Polynomial> gens, const TermOrder& order, const Budget& budget) {
    Engine eng(order);
    std::size_t nvars = order.size();
    std::vector<Ordered> basis;
    for (const auto& g : gens) {
        if (g.nvars() != nvars) throw Error(Errc::ring_mismatch, "generator not over the order's ring");
        if (g.is_zero()) continue;
        auto p = eng.from(g);
        Engine::make_monic(p);
        basis.push_back(std::move(p));
    }

    struct Pair {
        Monomial lcm;
        std::uint64_t seq;
        std::size_t i, j;
    };
    auto later = [&](const Pair& a, const Pair& b) {
        auto c = order.compare(a.lcm, b.lcm);
        return c != std::strong_ordering::equal ? c == std::strong_ordering::greater : a.seq > b.seq;
    };
    std::priority_queue<Pair, std::vector<Pair>, decltype(later)> queue(later);
    std::uint64_t seq = 0;
    auto add_pairs_for = [&](std::size_t j) {
        for (std::size_t i = 0; i < j; ++i)
            queue.push({lcm(basis[i].front().mono, basis[j].front().mono), seq++, i, j});
    };
    for (std::size_t j = 1; j < basis.size(); ++j) add_pairs_for(j);

    std::uint64_t processed = 0;
    while (!queue.empty()) {
        Pair pr = queue.top();
        queue.pop();
        if (++processed > budget.buchberger_pairs)
            throw Error(Errc::budget_exceeded, "Buchberger exceeded " + std::to_string(budget.buchberger_pairs) +
                                                   " pairs");
        const auto& f = basis[pr.i];
        const auto& g = basis[pr.j];
        if (coprime(f.front().mono, g.front().mono)) continue;
        if (f.size() == 1 && g.size() == 1) continue;  // S-polynomial of two monomials is zero
        auto r = eng.normal_form(eng.s_poly(f, g), basis);
        if (r.empty()) continue;
        Engine::make_monic(r);
        basis.push_back(std::move(r));
        add_pairs_for(basis.size() - 1);
    }

    // Minimal basis: drop elements whose leading monomial is a multiple of
    // another's (first occurrence wins on equal leading monomials).
    std::vector<Ordered> minimal;
    for (std::size_t k = 0; k < basis.size(); ++k) {
        const auto& lm = basis[k].front().mono;
        bool redundant = false;
        for (std::size_t o = 0; o < basis.size() && !redundant; ++o) {
            if (o == k) continue;
            const auto& other = basis[o].front().mono;
            if (other.divides(lm) && (other != lm || o < k)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[k]);
    }
    // Tail reduction.
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<Ordered> others;
        for (std::size_t o = 0; o < minimal.size(); ++o)
            if (o != k) others.push_back(minimal[o]);
        Ordered head{minimal[k].front()};
        Ordered tail(minimal[k].begin() + 1, minimal[k].end());
        auto reduced_tail = eng.normal_form(std::move(tail), others);
        head.insert(head.end(), reduced_tail.begin(), reduced_tail.end());
        Engine::make_monic(head);
        minimal[k] = std::move(head);
    }
    std::sort(minimal.begin(), minimal.end(),
              [&](const Ordered& a, const Ordered& b) { return order.greater(a.front().mono, b.front().mono); });

    GroebnerBasis out{order, {}};
    for (const auto& p : minimal) out.polys.push_back(Engine::to_poly(p, nvars));
    return out;
}

bool s_pairs_reduce_to_zero(const GroebnerBasis& gb) {
    Engine eng(gb.order);
    std::vector<Ordered> basis;
    for (const auto& p : gb.polys) basis.push_back(eng.from(p));
    for (std::size_t i = 0; i < basis.size(); ++i) {
        for (std::size_t j = i + 1; j < basis.size(); ++j) {
            if (!eng.normal_form(eng.s_poly(basis[i], basis[j]), basis).empty()) return false;
        }
    }
    return true;
}

MonomialIdeal initial_ideal(const MonomialIdeal& ideal, const LinearForm& f, const TermOrder& order,
                            const Budget& budget) {
    if (order.size() != ideal.nvars()) throw Error(Errc::ring_mismatch, "term order not over the ideal's ring");
    std::vector<Polynomial> gens;
    for (const auto& g : ideal.gens()) gens.push_back(Polynomial::monomial(g));
    gens.push_back(Polynomial::linear_form(f, ideal.nvars()));
    auto gb = buchberger(gens, order, budget);
    return MonomialIdeal(ideal.ring(), gb.leading_monomials());
}

MonomialIdeal initial_ideal(const MonomialIdeal& ideal, const TermOrder& order) {
    if (order.size() != ideal.nvars()) throw Error(Errc::ring_mismatch, "term order not over the ideal's ring");
    return ideal;
}

}  // namespace monoideal

#include "monoideal/monomial.hpp"

#include <algorithm>
#include <limits>

#include "monoideal/error.hpp"

namespace monoideal {

namespace {

void require_same_ring(const Monomial& a, const Monomial& b) {
    if (a.size() != b.size()) throw Error(Errc::ring_mismatch, "monomials over different rings");
}

}  // namespace

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
    if (index >= nvars) throw Error(Errc::domain, "variable index out of range");
    Monomial m(nvars);
    m.exps_[index] = power;
    return m;
}

bool Monomial::is_one() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::is_squarefree() const noexcept {
    return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e <= 1; });
}

std::uint64_t Monomial::total_degree() const noexcept {
    std::uint64_t d = 0;
    for (auto e : exps_) d += e;
    return d;
}

std::vector<std::size_t> Monomial::support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0) out.push_back(i);
    return out;
}

bool Monomial::divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > other.exps_[i]) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    require_same_ring(a, b);
    std::vector<Exponent> e(a.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (__builtin_add_overflow(a[i], b[i], &e[i]))
            throw Error(Errc::overflow, "exponent overflow in product");
    }
    return Monomial(std::move(e));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    require_same_ring(a, b);
    std::vector<Exponent> e(a.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::max(a[i], b[i]);
    return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    require_same_ring(a, b);
    std::vector<Exponent> e(a.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = std::min(a[i], b[i]);
    return Monomial(std::move(e));
}

Monomial quotient(const Monomial& a, const Monomial& b) {
    require_same_ring(a, b);
    if (!b.divides(a)) throw Error(Errc::domain, "quotient of non-divisible monomials");
    std::vector<Exponent> e(a.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = a[i] - b[i];
    return Monomial(std::move(e));
}

Monomial pow(const Monomial& m, std::uint32_t n) {
    std::vector<Exponent> e(m.size());
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (__builtin_mul_overflow(m[i], n, &e[i]))
            throw Error(Errc::overflow, "exponent overflow in power");
    }
    return Monomial(std::move(e));
}

Monomial radical(const Monomial& m) {
    std::vector<Exponent> e(m.size());
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = m[i] > 0 ? 1 : 0;
    return Monomial(std::move(e));
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto e : m.exponents()) h = (h ^ e) * 0x100000001b3ULL;
    return h;
}

}  // namespace monoideal

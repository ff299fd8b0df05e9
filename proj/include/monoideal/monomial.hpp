#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace monoideal {

using Exponent = std::uint32_t;

/// Exponent vector over a fixed ring. The all-zero vector is the monomial 1.
/// Ordering is plain lexicographic comparison of the exponent vectors; term
/// orders live in TermOrder.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

    static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

    std::size_t size() const noexcept { return exps_.size(); }
    Exponent operator[](std::size_t i) const { return exps_[i]; }
    std::span<const Exponent> exponents() const noexcept { return exps_; }

    void set(std::size_t i, Exponent e) { exps_.at(i) = e; }

    bool is_one() const noexcept;
    bool is_squarefree() const noexcept;
    std::uint64_t total_degree() const noexcept;
    /// Ascending indices of variables with positive exponent.
    std::vector<std::size_t> support() const;

    /// True if *this divides other.
    bool divides(const Monomial& other) const noexcept;

    friend bool operator==(const Monomial&, const Monomial&) = default;
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

private:
    std::vector<Exponent> exps_;
};

/// Throws Errc::overflow on exponent overflow.
Monomial operator*(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
/// a / b; requires b | a (Errc::domain otherwise).
Monomial quotient(const Monomial& a, const Monomial& b);
/// Throws Errc::overflow on exponent overflow.
Monomial pow(const Monomial& m, std::uint32_t n);
/// All exponents clamped to at most 1.
Monomial radical(const Monomial& m);

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace monoideal

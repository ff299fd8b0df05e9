#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "monoideal/ideal.hpp"
#include "monoideal/linear_form.hpp"

namespace monoideal {

/// mt19937_64 with its own bounded draws, so a seed yields the same
/// instances on every standard library.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [lo, hi].
    std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi);
    bool coin(double p = 0.5);
    /// Random subset of {0..n-1} with each element kept with probability p.
    std::vector<std::size_t> subset(std::size_t n, double p);
    template <class T>
    const T& pick(const std::vector<T>& items) {
        return items[uniform(0, items.size() - 1)];
    }
    template <class T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) std::swap(items[i - 1], items[uniform(0, i - 1)]);
    }

private:
    std::mt19937_64 engine_;
};

/// Ideal in k[x1..xn] from 1..max_gens random monomials with exponents in
/// [0, max_exp]; never zero.
MonomialIdeal random_ideal(Rng& rng, std::size_t nvars, std::size_t max_gens, std::uint32_t max_exp);

MonomialIdeal random_squarefree_ideal(Rng& rng, std::size_t nvars, std::size_t max_gens);

/// Ideal with d_x(M) = d_x(I) whenever x | M: every variable x gets one
/// exponent e_x in [1, max_exp], generators are prod_{x in S} x^{e_x} over
/// random supports S.
MonomialIdeal random_uniform_degree_ideal(Rng& rng, std::size_t nvars, std::size_t max_gens, std::uint32_t max_exp);

struct BinomialInstance {
    MonomialIdeal ideal;
    std::size_t a;
    std::size_t b;
};

/// I with a leaf a whose generator is divisible by ab, or with a leaf pair
/// (a, b); 2..nvars variables, at most max_gens generators.
BinomialInstance random_binomial_instance(Rng& rng, std::size_t nvars, std::size_t max_gens, std::uint32_t max_exp);

struct TrinomialInstance {
    MonomialIdeal ideal;
    std::size_t a;
    std::size_t b;
    std::size_t c;
};

/// I with d_a, d_b, d_c <= 1, every generator divisible by a also divisible
/// by b or c, and no generator divisible by bc.
TrinomialInstance random_trinomial_instance(Rng& rng, std::size_t nvars, std::size_t max_gens, std::uint32_t max_exp);

struct CoveringFormInstance {
    MonomialIdeal ideal;
    LinearForm form;  ///< b0 + b1 + ... + bt, b0 first
};

/// Uniform-degree ideal with f = b0 + ... + bt such that every generator
/// divisible by b0 is divisible by some other b_i.
CoveringFormInstance random_covering_form_instance(Rng& rng, std::size_t nvars, std::size_t max_gens,
                                                   std::uint32_t max_exp);

}  // namespace monoideal

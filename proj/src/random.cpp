#include "monoideal/random.hpp"

#include <algorithm>

#include "monoideal/error.hpp"
#include "monoideal/transforms.hpp"

namespace monoideal {

std::uint64_t Rng::uniform(std::uint64_t lo, std::uint64_t hi) {
    if (hi < lo) throw Error(Errc::domain, "empty range");
    const std::uint64_t span = hi - lo;
    if (span == ~std::uint64_t{0}) return engine_();
    const std::uint64_t range = span + 1;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % range);
    std::uint64_t x;
    do x = engine_();
    while (x >= limit);
    return lo + x % range;
}

bool Rng::coin(double p) {
    // 53 random bits, uniform in [0, 1).
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53 < p;
}

std::vector<std::size_t> Rng::subset(std::size_t n, double p) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; ++i)
        if (coin(p)) out.push_back(i);
    return out;
}

namespace {

constexpr int max_attempts = 10000;

Monomial random_monomial(Rng& rng, std::size_t nvars, std::uint32_t max_exp) {
    Monomial m(nvars);
    do {
        for (std::size_t i = 0; i < nvars; ++i)
            m.set(i, rng.coin(0.5) ? static_cast<Exponent>(rng.uniform(1, max_exp)) : 0);
    } while (m.is_one());
    return m;
}

/// Random monomial in the variables of `allowed`, possibly 1.
Monomial random_monomial_over(Rng& rng, std::size_t nvars, const std::vector<std::size_t>& allowed,
                              std::uint32_t max_exp, double density = 0.5) {
    Monomial m(nvars);
    for (auto v : allowed)
        if (rng.coin(density)) m.set(v, static_cast<Exponent>(rng.uniform(1, max_exp)));
    return m;
}

std::vector<std::size_t> others(std::size_t nvars, std::initializer_list<std::size_t> skip) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < nvars; ++i)
        if (std::find(skip.begin(), skip.end(), i) == skip.end()) out.push_back(i);
    return out;
}

}  // namespace

MonomialIdeal random_ideal(Rng& rng, std::size_t nvars, std::size_t max_gens, std::uint32_t max_exp) {
    const auto count = rng.uniform(1, max_gens);
    std::vector<Monomial> gens;
    for (std::uint64_t i = 0; i < count; ++i) gens.push_back(random_monomial(rng, nvars, max_exp));
    return MonomialIdeal(RingSpec::indexed("x", nvars), std::move(gens));
}

MonomialIdeal random_squarefree_ideal(Rng& rng, std::size_t nvars, std::size_t max_gens) {
    return random_ideal(rng, nvars, max_gens, 1);
}

MonomialIdeal random_uniform_degree_ideal(Rng& rng, std::size_t nvars, std::size_t max_gens, std::uint32_t max_exp) {
    std::vector<Exponent> e(nvars);
    for (auto& x : e) x = static_cast<Exponent>(rng.uniform(1, max_exp));
    const auto count = rng.uniform(1, max_gens);
    std::vector<Monomial> gens;
    for (std::uint64_t i = 0; i < count; ++i) {
        const auto shape = random_monomial(rng, nvars, 1);
        Monomial g(nvars);
        for (std::size_t v = 0; v < nvars; ++v)
            if (shape[v] > 0) g.set(v, e[v]);
        gens.push_back(g);
    }
    return MonomialIdeal(RingSpec::indexed("x", nvars), std::move(gens));
}

BinomialInstance random_binomial_instance(Rng& rng, std::size_t nvars, std::size_t max_gens, std::uint32_t max_exp) {
    if (nvars < 2 || max_gens < 1) throw Error(Errc::domain, "binomial instance needs 2 variables and 1 generator");
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        const std::size_t n = rng.uniform(2, nvars);
        const RingSpec ring = RingSpec::indexed("x", n);
        std::vector<std::size_t> vars(n);
        for (std::size_t i = 0; i < n; ++i) vars[i] = i;
        rng.shuffle(vars);
        const std::size_t a = vars[0];
        const std::size_t b = vars[1];
        const auto rest = others(n, {a, b});
        std::vector<Monomial> gens;
        const bool pair = n >= 4 && max_gens >= 3 && rng.coin(0.5);
        if (pair) {
            // a | M1 = a^e z, b | M2 = b^f w, gcd(z, w) = 1, zw in I.
            std::vector<std::size_t> zs, ws;
            for (auto v : rest) (rng.coin(0.5) ? zs : ws).push_back(v);
            if (zs.empty() || ws.empty()) continue;
            auto z = random_monomial_over(rng, n, zs, max_exp, 0.7);
            auto w = random_monomial_over(rng, n, ws, max_exp, 0.7);
            if (z.is_one() || w.is_one()) continue;
            gens.push_back(z * Monomial::variable(n, a, static_cast<Exponent>(rng.uniform(1, max_exp))));
            gens.push_back(w * Monomial::variable(n, b, static_cast<Exponent>(rng.uniform(1, max_exp))));
            gens.push_back(z * w);
        } else {
            auto m = random_monomial_over(rng, n, rest, max_exp);
            m.set(a, static_cast<Exponent>(rng.uniform(1, max_exp)));
            m.set(b, static_cast<Exponent>(rng.uniform(1, max_exp)));
            gens.push_back(m);
        }
        auto pool = others(n, {a});
        const auto extra = rng.uniform(0, max_gens - std::min<std::size_t>(gens.size(), max_gens));
        for (std::uint64_t i = 0; i < extra; ++i) {
            auto m = random_monomial_over(rng, n, pair ? rest : pool, max_exp);
            if (!m.is_one()) gens.push_back(m);
        }
        MonomialIdeal ideal(ring, std::move(gens));
        if (ideal.size() > max_gens) continue;
        if (binomial_context(ideal, a, b) == BinomialContext::none) continue;
        return {std::move(ideal), a, b};
    }
    throw Error(Errc::domain, "could not draw a binomial instance");
}

TrinomialInstance random_trinomial_instance(Rng& rng, std::size_t nvars, std::size_t max_gens,
                                            std::uint32_t max_exp) {
    if (nvars < 3 || max_gens < 1) throw Error(Errc::domain, "trinomial instance needs 3 variables and 1 generator");
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        const std::size_t n = rng.uniform(3, nvars);
        const RingSpec ring = RingSpec::indexed("x", n);
        std::vector<std::size_t> vars(n);
        for (std::size_t i = 0; i < n; ++i) vars[i] = i;
        rng.shuffle(vars);
        const std::size_t a = vars[0], b = vars[1], c = vars[2];
        const auto rest = others(n, {a, b, c});
        const auto count = rng.uniform(1, max_gens);
        std::vector<Monomial> gens;
        for (std::uint64_t i = 0; i < count; ++i) {
            auto m = random_monomial_over(rng, n, rest, max_exp);
            const bool with_a = i == 0 || rng.coin(0.4);
            if (with_a) m.set(a, 1);
            // b or c (never both); generators without a may have neither.
            const auto pick = rng.uniform(with_a ? 1 : 0, 2);
            if (pick == 1) m.set(b, 1);
            if (pick == 2) m.set(c, 1);
            if (!m.is_one()) gens.push_back(m);
        }
        MonomialIdeal ideal(ring, std::move(gens));
        if (trinomial_precondition_failure(ideal, a, b, c)) continue;
        return {std::move(ideal), a, b, c};
    }
    throw Error(Errc::domain, "could not draw a trinomial instance");
}

CoveringFormInstance random_covering_form_instance(Rng& rng, std::size_t nvars, std::size_t max_gens,
                                                   std::uint32_t max_exp) {
    if (nvars < 2) throw Error(Errc::domain, "covering form needs 2 variables");
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        auto ideal = random_uniform_degree_ideal(rng, nvars, max_gens, max_exp);
        const std::size_t b0 = rng.uniform(0, nvars - 1);
        std::vector<std::size_t> chosen{b0};
        bool ok = true;
        for (const auto& g : ideal.gens()) {
            if (g[b0] == 0) continue;
            if (std::any_of(chosen.begin() + 1, chosen.end(), [&](std::size_t v) { return g[v] > 0; })) continue;
            std::vector<std::size_t> candidates;
            for (auto v : g.support())
                if (v != b0) candidates.push_back(v);
            if (candidates.empty()) {
                ok = false;  // a pure power of b0 cannot be covered
                break;
            }
            chosen.push_back(rng.pick(candidates));
        }
        if (!ok) continue;
        for (std::size_t v = 0; v < nvars; ++v)
            if (std::find(chosen.begin(), chosen.end(), v) == chosen.end() && rng.coin(0.2)) chosen.push_back(v);
        if (chosen.size() < 2) {
            // t >= 1: add any other variable.
            chosen.push_back((b0 + 1 + rng.uniform(0, nvars - 2)) % nvars);
        }
        LinearForm f(chosen, nvars);
        return {std::move(ideal), std::move(f)};
    }
    throw Error(Errc::domain, "could not draw a covering-form instance");
}

}  // namespace monoideal

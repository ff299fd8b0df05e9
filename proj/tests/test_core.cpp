#include <set>

#include "doctest.h"
#include "monoideal/budget.hpp"
#include "monoideal/error.hpp"
#include "monoideal/ideal.hpp"
#include "monoideal/io.hpp"
#include "monoideal/random.hpp"
#include "monoideal/term_order.hpp"
#include "oracles.hpp"

using namespace monoideal;

namespace {

const RingSpec x5 = RingSpec::indexed("x", 5);

MonomialIdeal ideal(const RingSpec& ring, std::initializer_list<const char*> gens) {
    std::vector<Monomial> ms;
    for (const auto* g : gens) ms.push_back(parse_monomial(ring, g));
    return MonomialIdeal(ring, std::move(ms));
}

Monomial mono(const RingSpec& ring, const char* text) { return parse_monomial(ring, text); }

Errc code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return Errc::domain;
}

}  // namespace

TEST_CASE("ring names are validated") {
    CHECK_NOTHROW(RingSpec({"a", "x_1", "Y2"}));
    CHECK(code_of([] { RingSpec({}); }) == Errc::domain);
    CHECK(code_of([] { RingSpec({"a", "a"}); }) == Errc::parse);
    CHECK(code_of([] { RingSpec({"1x"}); }) == Errc::parse);
    CHECK(code_of([] { RingSpec({""}); }) == Errc::parse);
    CHECK(x5.index("x3") == 2);
    CHECK_FALSE(x5.find("y").has_value());
    CHECK(code_of([] { (void)x5.index("y"); }) == Errc::domain);
}

TEST_CASE("monomial arithmetic") {
    const auto a = mono(x5, "x1^2*x3");
    const auto b = mono(x5, "x1*x2");
    CHECK(format_monomial(x5, a * b) == "x1^3*x2*x3");
    CHECK(format_monomial(x5, lcm(a, b)) == "x1^2*x2*x3");
    CHECK(format_monomial(x5, gcd(a, b)) == "x1");
    CHECK(format_monomial(x5, quotient(a, gcd(a, b))) == "x1*x3");
    CHECK(code_of([&] { (void)quotient(b, a); }) == Errc::domain);
    CHECK(format_monomial(x5, pow(a, 3)) == "x1^6*x3^3");
    CHECK(format_monomial(x5, radical(a)) == "x1*x3");
    CHECK(Monomial(5).is_one());
    CHECK(format_monomial(x5, Monomial(5)) == "1");
    CHECK(b.divides(a * b));
    CHECK_FALSE(a.divides(b));
    Monomial big(std::vector<Exponent>{0xFFFFFFFFu, 0, 0, 0, 0});
    CHECK(code_of([&] { (void)(big * big); }) == Errc::overflow);
    CHECK(code_of([&] { (void)pow(big, 2); }) == Errc::overflow);
}

TEST_CASE("minimal_generators examples") {
    const RingSpec r = RingSpec::indexed("x", 3);
    CHECK(ideal(r, {"x1*x2", "x1*x2*x3", "x2*x3"}) == ideal(r, {"x1*x2", "x2*x3"}));
    CHECK(MonomialIdeal(r, {}).is_zero());
    CHECK(ideal(r, {"x1^2", "x1^3"}).size() == 1);
    CHECK(ideal(r, {"x1^2", "x1^3"}).gens()[0] == mono(r, "x1^2"));
    CHECK(code_of([&] { ideal(r, {"x1", "1"}); }) == Errc::unit_ideal);
    CHECK(code_of([&] { MonomialIdeal(r, {Monomial(2)}); }) == Errc::ring_mismatch);
}

TEST_CASE("minimal_generators is idempotent and order independent") {
    Rng rng(7);
    for (int k = 0; k < 200; ++k) {
        const auto I = random_ideal(rng, 4, 8, 3);
        std::vector<Monomial> gens(I.gens().begin(), I.gens().end());
        // add redundant multiples and shuffle
        for (const auto& g : I.gens()) gens.push_back(g * Monomial::variable(4, rng.uniform(0, 3)));
        rng.shuffle(gens);
        const auto J = minimal_generators(I.ring(), gens);
        CHECK(J == I);
        CHECK(minimal_generators(J.ring(), {J.gens().begin(), J.gens().end()}) == J);
        for (const auto& g : J.gens())
            for (const auto& h : J.gens())
                if (!(g == h)) CHECK_FALSE(g.divides(h));
    }
}

TEST_CASE("colon examples") {
    const auto c5 = ideal(x5, {"x1*x2", "x2*x3", "x3*x4", "x4*x5", "x1*x5"});
    CHECK(colon(c5, mono(x5, "x2")) == ideal(x5, {"x1", "x3", "x4*x5"}));
    CHECK(colon(c5, Monomial(5)) == c5);
    const RingSpec r1 = RingSpec::indexed("x", 1);
    CHECK(colon(ideal(r1, {"x1^2"}), mono(r1, "x1")) == ideal(r1, {"x1"}));
    CHECK(code_of([&] { colon(c5, mono(x5, "x1*x2")); }) == Errc::unit_ideal);
}

TEST_CASE("colon matches the membership definition") {
    Rng rng(11);
    for (int k = 0; k < 100; ++k) {
        const auto I = random_ideal(rng, 3, 4, 3);
        const auto c = random_ideal(rng, 3, 1, 2).gens()[0];
        if (oracle::member(I, c)) continue;
        const auto J = colon(I, c);
        auto bound = oracle::degrees(I);
        for (auto& b : bound) ++b;
        for (const auto& m : oracle::box(bound)) CHECK(oracle::member(J, m) == oracle::colon_member(I, c, m));
    }
}

TEST_CASE("var_degree") {
    const RingSpec r({"a", "b", "c", "d", "e"});
    const auto I = ideal(r, {"a^2*b*c", "a*d", "b^3*c*d"});
    CHECK(var_degree(I, 0) == 2);
    CHECK(var_degree(I, 1) == 3);
    CHECK(var_degree(I, 4) == 0);
    CHECK(code_of([&] { (void)var_degree(MonomialIdeal::zero(r), 0); }) == Errc::zero_ideal);
}

TEST_CASE("squarefree_part") {
    const RingSpec r = RingSpec::indexed("x", 4);
    CHECK(squarefree_part(ideal(r, {"x1^3*x2", "x2*x3^2", "x3^2*x4^4", "x1^3*x4^4"})) ==
          ideal(r, {"x1*x2", "x2*x3", "x3*x4", "x1*x4"}));
    const auto sq = ideal(r, {"x1*x2", "x3"});
    CHECK(squarefree_part(sq) == sq);
    CHECK(squarefree_part(ideal(r, {"x1^3"})) == ideal(r, {"x1"}));
    // clamping can create divisibility: x1^2 x2 and x1 x2^3 both become x1 x2
    CHECK(squarefree_part(ideal(r, {"x1^2*x2", "x1*x2^3"})).size() == 1);
}

TEST_CASE("bracket_power") {
    const RingSpec r = RingSpec::indexed("x", 3);
    CHECK(bracket_power(ideal(r, {"x1*x2", "x2*x3"}), 2) == ideal(r, {"x1^2*x2^2", "x2^2*x3^2"}));
    const auto I = ideal(r, {"x1^2*x3", "x2"});
    CHECK(bracket_power(I, 1) == I);
    CHECK(bracket_power(ideal(r, {"x1", "x2"}), 3) == ideal(r, {"x1^3", "x2^3"}));
    CHECK(code_of([&] { bracket_power(I, 0); }) == Errc::domain);
}

TEST_CASE("sum adds generators") {
    const RingSpec r = RingSpec::indexed("x", 3);
    const std::vector<Monomial> extra{mono(r, "x1")};
    CHECK(sum(ideal(r, {"x1*x2", "x3"}), extra) == ideal(r, {"x1", "x3"}));
}

TEST_CASE("text format round trip") {
    const std::string text = "vars x1 x2 x3\ngens x1^2*x2 x2*x3\n";
    const auto I = parse_ideal_text(text);
    CHECK(format_ideal_text(I) == text);
    const auto J = parse_ideal_text("# comment\nvars x1 x2 x3\n\ngens x2*x3   # trailing\ngens x2*x1^2 x1^2*x2*x3\n");
    CHECK(J == I);
    const auto Z = parse_ideal_text("vars a b\n");
    CHECK(Z.is_zero());
    CHECK(format_ideal_text(Z) == "vars a b\ngens\n");
}

TEST_CASE("json round trip") {
    Rng rng(3);
    for (int k = 0; k < 50; ++k) {
        const auto I = random_ideal(rng, 4, 5, 4);
        CHECK(ideal_from_json(ideal_to_json(I)) == I);
        CHECK(parse_ideal(ideal_to_json(I).dump()) == I);
        CHECK(parse_ideal_text(format_ideal_text(I)) == I);
    }
    const auto doc = ideal_to_json(parse_ideal_text("vars a b\ngens a^2*b\n"));
    CHECK(doc.dump() == R"({"gens":[[2,1]],"vars":["a","b"]})");
}

TEST_CASE("parse errors") {
    CHECK(code_of([] { parse_ideal_text("gens x1\n"); }) == Errc::parse);
    CHECK(code_of([] { parse_ideal_text("vars x1\ngens y\n"); }) == Errc::parse);
    CHECK(code_of([] { parse_ideal_text("vars x1\ngens x1^\n"); }) == Errc::parse);
    CHECK(code_of([] { parse_ideal_text("vars x1\ngens 1\n"); }) == Errc::unit_ideal);
    CHECK(code_of([] { parse_ideal_text("vars x1\nfoo\n"); }) == Errc::parse);
    CHECK(code_of([] { parse_ideal("{\"vars\":[\"a\"],\"gens\":[[1,2]]}"); }) != Errc::domain);
    try {
        parse_ideal_text("vars x1\n\ngens x9\n");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
}

TEST_CASE("linear forms") {
    const auto f = parse_linear_form(x5, "x1+x5+x2");
    CHECK(f.support() == std::vector<std::size_t>{0, 4, 1});
    CHECK(format_linear_form(x5, f) == "x1+x5+x2");
    CHECK(f.involves(4));
    CHECK_FALSE(f.involves(2));
    CHECK(code_of([] { LinearForm({}, 3); }) == Errc::domain);
    CHECK(code_of([] { LinearForm({1, 1}, 3); }) == Errc::domain);
    CHECK(code_of([] { LinearForm({3}, 3); }) == Errc::domain);
    CHECK(code_of([] { parse_linear_form(x5, "x1+x1"); }) == Errc::parse);
}

TEST_CASE("term order is a total multiplicative order with 1 minimal") {
    Rng rng(5);
    for (int k = 0; k < 300; ++k) {
        std::vector<std::size_t> perm{0, 1, 2, 3};
        rng.shuffle(perm);
        const TermOrder order(perm);
        auto draw = [&] {
            Monomial m(4);
            for (std::size_t i = 0; i < 4; ++i) m.set(i, static_cast<Exponent>(rng.uniform(0, 3)));
            return m;
        };
        const auto a = draw(), b = draw(), c = draw();
        const auto ab = order.compare(a, b);
        CHECK(order.compare(b, a) == 0 <=> ab);  // antisymmetric
        CHECK((ab == 0) == (a == b));            // total
        if (order.greater(a, b) && order.greater(b, c)) CHECK(order.greater(a, c));
        if (order.greater(a, b)) CHECK(order.greater(a * c, b * c));
        if (!a.is_one()) CHECK(order.greater(a, Monomial(4)));
    }
}

TEST_CASE("term order parsing and completion") {
    const auto o = parse_order(x5, "x1,x5,x2");
    CHECK(format_order(x5, o) == "x1,x5,x2,x3,x4");
    CHECK(o.var_greater(4, 1));
    CHECK(code_of([] { TermOrder({0, 0, 1}); }) == Errc::domain);
    CHECK(code_of([] { parse_order(x5, "x1,x1"); }) != Errc::overflow);

    const std::vector<OrderChain> chains{{0, 4, 1}};
    CHECK(format_order(x5, complete_order(5, chains)) == "x1,x5,x2,x3,x4");
    CHECK(format_order(x5, complete_order(5, chains, Completion::unconstrained_descending)) == "x1,x5,x2,x4,x3");
    const auto all = distinct_completions(5, chains, 5);
    CHECK(all.size() >= 3);
    std::set<std::vector<std::size_t>> seen;
    for (const auto& t : all) {
        CHECK(satisfies(t, chains));
        seen.insert(t.precedence());
    }
    CHECK(seen.size() == all.size());
    const std::vector<OrderChain> cyclic{{0, 1}, {1, 0}};
    CHECK(code_of([&] { complete_order(2, cyclic); }) == Errc::domain);
}

TEST_CASE("budget parsing") {
    const auto b = Budget::parse("witness=100,pvars=10,pairs=7");
    CHECK(b.witness_candidates == 100);
    CHECK(b.polarized_vars == 10);
    CHECK(b.buchberger_pairs == 7);
    CHECK(Budget::parse("42").witness_candidates == 42);
    CHECK(code_of([] { Budget::parse("bogus=1"); }) == Errc::parse);
    CHECK(code_of([] { Budget::parse("pvars=x"); }) == Errc::parse);
}

TEST_CASE("random generators are reproducible") {
    Rng a(99), b(99);
    for (int k = 0; k < 20; ++k) CHECK(random_ideal(a, 5, 5, 3) == random_ideal(b, 5, 5, 3));
    Rng r(1);
    for (int k = 0; k < 1000; ++k) {
        const auto v = r.uniform(3, 7);
        CHECK(v >= 3);
        CHECK(v <= 7);
    }
}

#include <algorithm>

#include "doctest.h"
#include "monoideal/depth.hpp"
#include "monoideal/error.hpp"
#include "monoideal/io.hpp"
#include "monoideal/sequences.hpp"

using namespace monoideal;

namespace {

std::vector<std::string> names(const RingSpec& ring, const LinearForm& f) {
    std::vector<std::string> out;
    for (auto v : f.support()) out.push_back(ring.name(v));
    return out;
}

using Names = std::vector<std::string>;

// (x_{3i-2}, x_{3i-1}x_{3i}, x_{3n}x_{3n+1}, x_{3n+1}x_{3n+2}, x_{3n+2}^2, x_{3j}^2,
//  x_{3n+1}x_2^2, x_{3j-1}x_{3j+2}^2, x_2x_{3n+2}, x_{3j}x_{3j+2} : i <= n, j <= n-1)
MonomialIdeal displayed_last_step(std::size_t n) {
    const std::size_t m = 3 * n + 2;
    auto x = [&](std::size_t i, Exponent e = 1) { return Monomial::variable(m, i - 1, e); };
    std::vector<Monomial> g;
    for (std::size_t i = 1; i <= n; ++i) {
        g.push_back(x(3 * i - 2));
        g.push_back(x(3 * i - 1) * x(3 * i));
    }
    g.push_back(x(3 * n) * x(3 * n + 1));
    g.push_back(x(3 * n + 1) * x(3 * n + 2));
    g.push_back(x(3 * n + 2, 2));
    g.push_back(x(3 * n + 1) * x(2, 2));
    g.push_back(x(2) * x(3 * n + 2));
    for (std::size_t j = 1; j + 1 <= n; ++j) {
        g.push_back(x(3 * j, 2));
        g.push_back(x(3 * j - 1) * x(3 * j + 2, 2));
        g.push_back(x(3 * j) * x(3 * j + 2));
    }
    return MonomialIdeal(RingSpec::indexed("x", m), g);
}

}  // namespace

TEST_CASE("cycle plans") {
    const auto p5 = cycle_sequence(5);
    REQUIRE(p5.forms.size() == 2);
    CHECK(names(p5.ring, p5.forms[0]) == Names{"x1", "x5", "x2"});
    CHECK(names(p5.ring, p5.forms[1]) == Names{"x3", "x4", "x2"});
    CHECK(satisfies(p5.order, p5.constraints));

    const auto p6 = cycle_sequence(6);
    REQUIRE(p6.forms.size() == 2);
    CHECK(names(p6.ring, p6.forms[0]) == Names{"x1", "x6", "x2"});
    CHECK(names(p6.ring, p6.forms[1]) == Names{"x4", "x3", "x5"});

    const auto p7 = cycle_sequence(7);
    REQUIRE(p7.forms.size() == 2);
    CHECK(names(p7.ring, p7.forms[0]) == Names{"x1", "x7", "x2"});

    const auto p8 = cycle_sequence(8);
    REQUIRE(p8.forms.size() == 3);
    CHECK(names(p8.ring, p8.forms[1]) == Names{"x4", "x3", "x5"});
    CHECK(names(p8.ring, p8.forms[2]) == Names{"x6", "x7", "x2", "x5"});
    CHECK(p8.constraints.size() == 2);

    CHECK_THROWS_AS(cycle_sequence(2), Error);
}

TEST_CASE("cycle plan length is ceil((m-1)/3)") {
    for (std::size_t m = 3; m <= 14; ++m) CHECK(cycle_sequence(m).forms.size() == (m + 1) / 3);
}

TEST_CASE("unicyclic plans") {
    const auto p1 = unicyclic_sequence(1);
    CHECK(p1.ring.names() == Names{"x1", "x2", "x3", "x4", "x5", "y1", "y2"});
    REQUIRE(p1.forms.size() == 3);
    CHECK(names(p1.ring, p1.forms.back()) == Names{"y2", "y1"});
    CHECK(unicyclic_sequence(2).forms.size() == 4);
    try {
        unicyclic_sequence(0);
        FAIL("t = 0 accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::domain);
    }
}

TEST_CASE("with_order rejects orders breaking the chains") {
    const auto p = cycle_sequence(5);
    CHECK_NOTHROW(p.with_order(complete_order(5, p.constraints, Completion::index_descending)));
    try {
        p.with_order(TermOrder::natural(5));  // x2 > x5
        FAIL("accepted");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::domain);
    }
}

TEST_CASE("iterated initial ideals on C5") {
    const auto I = cycle_ideal(5);
    const auto plan = cycle_sequence(5);
    const auto chain = iterated_initial_ideals(I, plan);
    REQUIRE(chain.size() == 3);
    CHECK(chain[0] == I);
    CHECK(chain[1] == parse_ideal_text("vars x1 x2 x3 x4 x5\ngens x1 x2*x3 x3*x4 x4*x5 x2*x5 x5^2 x4*x2^2\n"));
    CHECK(chain[1] == displayed_last_step(1));
    CHECK(chain[2].gens().front() == Monomial::variable(5, 0));
}

TEST_CASE("the ideal after n steps has the displayed shape") {
    for (std::size_t n = 1; n <= 3; ++n) {
        const auto m = 3 * n + 2;
        const auto chain = iterated_initial_ideals(cycle_ideal(m), cycle_sequence(m), Engine::both);
        REQUIRE(chain.size() == n + 2);
        CHECK(chain[n] == displayed_last_step(n));
    }
}

TEST_CASE("empty plan") {
    const auto I = cycle_ideal(4);
    auto plan = cycle_sequence(4);
    plan.forms.clear();
    const auto chain = iterated_initial_ideals(I, plan);
    REQUIRE(chain.size() == 1);
    CHECK(chain[0] == I);
    CHECK(verify_initially_regular(I, plan).verified_length == 0);
}

TEST_CASE("verified lengths") {
    CHECK(verify_initially_regular(cycle_ideal(5), cycle_sequence(5)).verified_length == 2);
    CHECK(verify_initially_regular(cycle_ideal(8), cycle_sequence(8)).verified_length == 3);
    const auto g52 = unicyclic_ideal(5, 2);
    const auto trace = verify_initially_regular(g52, unicyclic_sequence(1));
    CHECK(trace.verified_length == 3);
    CHECK(trace.verified_length == depth_unicyclic_formula(5, 2));
    for (const auto& s : trace.steps) CHECK(s.regular);
}

TEST_CASE("verified length equals the cycle depth for m = 3..14") {
    for (std::size_t m = 3; m <= 14; ++m) {
        const auto t = verify_initially_regular(cycle_ideal(m), cycle_sequence(m), Engine::both);
        CHECK(t.verified_length == (m + 1) / 3);
        CHECK(t.verified_length == depth_cycle_formula(m));
    }
}

TEST_CASE("a non-regular form stops the trace") {
    const auto I = cycle_ideal(4);
    auto plan = cycle_sequence(4);
    // x1 + x2 after x1 + x4 + x2: x1 is a generator of I_2, so x1 + x2 behaves as x2
    plan.forms.push_back(LinearForm({0, 1}, 4));
    plan.forms.push_back(LinearForm({2, 3}, 4));
    const auto t = verify_initially_regular(I, plan);
    CHECK(t.verified_length < 3);
    CHECK(t.steps.size() == t.verified_length + 1);
    CHECK_FALSE(t.steps.back().regular);
}

TEST_CASE("engines agree and completions do not matter") {
    for (std::size_t m : {5u, 6u, 7u, 8u, 11u}) {
        const auto I = cycle_ideal(m);
        const auto plan = cycle_sequence(m);
        const auto ref = iterated_initial_ideals(I, plan, Engine::buchberger);
        CHECK(iterated_initial_ideals(I, plan, Engine::transform) == ref);
        for (const auto& order : distinct_completions(m, plan.constraints))
            CHECK(verify_initially_regular(I, plan.with_order(order)).verified_length == (m + 1) / 3);
    }
}

TEST_CASE("engine names") {
    for (auto e : {Engine::transform, Engine::buchberger, Engine::both}) CHECK(parse_engine(to_string(e)) == e);
    CHECK_THROWS_AS(parse_engine("magic"), Error);
}

TEST_CASE("plan JSON round trip") {
    for (const auto& plan : {cycle_sequence(8), unicyclic_sequence(2)}) {
        const auto doc = plan_to_json(plan);
        const auto back = plan_from_json(plan.ring, doc);
        CHECK(back.forms == plan.forms);
        CHECK(back.constraints == plan.constraints);
        CHECK(back.order == plan.order);
        CHECK(plan_to_json(back) == doc);
    }
    auto doc = plan_to_json(cycle_sequence(5));
    doc.erase("order");
    const auto completed = plan_from_json(RingSpec::indexed("x", 5), doc);
    CHECK(satisfies(completed.order, completed.constraints));
    doc["forms"] = {{"x1", "nope"}};
    CHECK_THROWS_AS(plan_from_json(RingSpec::indexed("x", 5), doc), Error);
}

#include "monoideal/checks.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "monoideal/depth.hpp"
#include "monoideal/error.hpp"
#include "monoideal/groebner.hpp"
#include "monoideal/io.hpp"
#include "monoideal/primes.hpp"
#include "monoideal/random.hpp"
#include "monoideal/sequences.hpp"
#include "monoideal/transforms.hpp"

namespace monoideal {

namespace {

using Clock = std::chrono::steady_clock;

class Stopwatch {
public:
    explicit Stopwatch(double limit) : limit_(limit) {}
    double elapsed() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }
    bool expired() const { return elapsed() > limit_; }

private:
    Clock::time_point start_ = Clock::now();
    double limit_;
};

/// Collects failures; the first few go into the detail line.
class Failures {
public:
    void add(const std::string& what) {
        if (count_++ < 3) notes_.push_back(what);
    }
    std::size_t count() const { return count_; }
    std::string summary() const {
        std::string s;
        for (const auto& n : notes_) s += (s.empty() ? "" : "; ") + n;
        if (count_ > notes_.size()) s += "; +" + std::to_string(count_ - notes_.size()) + " more";
        return s;
    }

private:
    std::size_t count_ = 0;
    std::vector<std::string> notes_;
};

CriterionResult finish(int id, std::string title, const Failures& f, std::string ok_detail, const Stopwatch& sw,
                       bool timed_out) {
    std::string detail = f.count() == 0 ? std::move(ok_detail) : f.summary();
    if (timed_out) detail = "timed out after " + std::to_string(static_cast<int>(sw.elapsed())) + "s; " + detail;
    return {id, std::move(title), f.count() == 0 && !timed_out, std::move(detail), sw.elapsed()};
}

std::size_t cycle_depth_value(std::size_t m) { return (m - 1 + 2) / 3; }

MonomialIdeal named(const RingSpec& ring, const std::string& gens) {
    std::vector<Monomial> ms;
    std::istringstream in(gens);
    for (std::string tok; in >> tok;) ms.push_back(parse_monomial(ring, tok));
    return MonomialIdeal(ring, std::move(ms));
}

/// The displayed I_1 = ini(I(C_{3n+2}), x1 + x_{3n+2} + x2):
/// (x1, x_i x_{i+1} (2 <= i <= 3n+1), x_{3n+2} x2, x_{3n+2}^2, x_{3n+1} x2^2).
MonomialIdeal displayed_first_step(std::size_t n) {
    const std::size_t m = 3 * n + 2;
    const auto ring = RingSpec::indexed("x", m);
    auto x = [&](std::size_t i, Exponent e = 1) { return Monomial::variable(m, i - 1, e); };
    std::vector<Monomial> gens{x(1)};
    for (std::size_t i = 2; i <= 3 * n + 1; ++i) gens.push_back(x(i) * x(i + 1));
    gens.push_back(x(m) * x(2));
    gens.push_back(x(m, 2));
    gens.push_back(x(3 * n + 1) * x(2, 2));
    return MonomialIdeal(ring, std::move(gens));
}

std::string name_list(const RingSpec& ring, const VarSet& s) {
    std::string out;
    for (auto v : s.indices()) out += (out.empty() ? "" : ", ") + ring.name(v);
    return out;
}

}  // namespace

void AcceptanceSuite::record(std::string label, std::size_t verified, std::size_t depth) {
    log_.push_back({std::move(label), verified, depth});
}

CriterionResult AcceptanceSuite::run(int id) {
    switch (id) {
        case 1: return cycle_depth();
        case 2: return sequence_realization();
        case 3: return transform_agreement();
        case 4: return ass_example();
        case 5: return embedded_structure();
        case 6: return corollaries();
        case 7: return unicyclic_depth();
        case 8: return lower_bound_soundness();
    }
    throw Error(Errc::domain, "no acceptance criterion " + std::to_string(id));
}

std::vector<CriterionResult> AcceptanceSuite::run_all() {
    std::vector<CriterionResult> out;
    for (int id = 1; id <= criterion_count; ++id) {
        try {
            out.push_back(run(id));
        } catch (const std::exception& e) {
            out.push_back({id, "criterion " + std::to_string(id), false, std::string("exception: ") + e.what(), 0.0});
        }
    }
    return out;
}

CriterionResult AcceptanceSuite::cycle_depth() {
    Stopwatch sw(std::min(options_.timeout_seconds, cycle_depth_time_limit));
    Failures f;
    std::string values;
    for (std::size_t n = 3; n <= 11 && !sw.expired(); ++n) {
        const auto d = depth_oracle(cycle_ideal(n), Field::rationals, options_.budget).value;
        values += (values.empty() ? "" : " ") + std::to_string(d);
        if (d != cycle_depth_value(n))
            f.add("C_" + std::to_string(n) + ": oracle " + std::to_string(d) + ", expected " +
                  std::to_string(cycle_depth_value(n)));
    }
    return finish(1, "cycle depth C_3..C_11", f, "depths " + values, sw, sw.expired());
}

CriterionResult AcceptanceSuite::sequence_realization() {
    Stopwatch sw(options_.timeout_seconds);
    Failures f;
    std::size_t runs = 0;
    for (std::size_t m = 3; m <= 11 && !sw.expired(); ++m) {
        const auto base = cycle_sequence(m);
        const auto ideal = cycle_ideal(m);
        const auto depth = depth_oracle(ideal, Field::rationals, options_.budget).value;
        const auto orders = distinct_completions(m, base.constraints, 5);
        // C_3's chain already orders all three variables: one completion.
        const std::size_t needed = m == 3 ? 1 : min_completions;
        if (orders.size() < needed) f.add("C_" + std::to_string(m) + ": too few completions");
        const std::size_t expected = cycle_depth_value(m);
        for (const auto& order : orders) {
            const auto trace = verify_initially_regular(ideal, base.with_order(order), Engine::buchberger,
                                                        options_.budget);
            ++runs;
            record("C_" + std::to_string(m) + " order " + format_order(base.ring, order), trace.verified_length,
                   depth);
            if (trace.verified_length != expected)
                f.add("C_" + std::to_string(m) + " order " + format_order(base.ring, order) + ": verified " +
                      std::to_string(trace.verified_length) + ", expected " + std::to_string(expected));
        }
        if (m % 3 == 2 && expected != m / 3 + 1) f.add("C_" + std::to_string(m) + ": expected length is not n+1");
    }
    return finish(2, "cycle sequences realize depth (Buchberger, all completions)", f,
                  std::to_string(runs) + " verifications", sw, sw.expired());
}

CriterionResult AcceptanceSuite::transform_agreement() {
    Stopwatch sw(options_.timeout_seconds);
    Failures f;
    for (std::size_t n = 1; n <= 3; ++n) {
        const std::size_t m = 3 * n + 2;
        const auto got = ini_trinomial(cycle_ideal(m), 0, m - 1, 1);
        if (!(got == displayed_first_step(n)))
            f.add("C_" + std::to_string(m) + " I_1 differs from the display: " + format_ideal_text(got));
    }
    Rng rng(options_.seed);
    std::size_t compared = 0;
    for (std::size_t k = 0; k < random_transform_instances && !sw.expired(); ++k) {
        if (k % 2 == 0) {
            auto inst = random_binomial_instance(rng, 6, 6, 3);
            const std::vector<OrderChain> chains{{inst.a, inst.b}};
            const auto fast = ini_binomial(inst.ideal, inst.a, inst.b);
            const LinearForm form({inst.a, inst.b}, inst.ideal.nvars());
            for (const auto& order : distinct_completions(inst.ideal.nvars(), chains, 3)) {
                ++compared;
                if (!(initial_ideal(inst.ideal, form, order, options_.budget) == fast))
                    f.add("binomial mismatch on " + format_ideal_text(inst.ideal));
            }
        } else {
            auto inst = random_trinomial_instance(rng, 6, 6, 3);
            const std::vector<OrderChain> chains{{inst.a, inst.b, inst.c}};
            const auto fast = ini_trinomial(inst.ideal, inst.a, inst.b, inst.c);
            const LinearForm form({inst.a, inst.b, inst.c}, inst.ideal.nvars());
            for (const auto& order : distinct_completions(inst.ideal.nvars(), chains, 3)) {
                ++compared;
                if (!(initial_ideal(inst.ideal, form, order, options_.budget) == fast))
                    f.add("trinomial mismatch on " + format_ideal_text(inst.ideal));
            }
        }
    }
    return finish(3, "closed-form initial ideals match Buchberger", f,
                  "display n=1,2,3 ok; " + std::to_string(random_transform_instances) + " random instances, " +
                      std::to_string(compared) + " order comparisons",
                  sw, sw.expired());
}

CriterionResult AcceptanceSuite::ass_example() {
    Stopwatch sw(options_.timeout_seconds);
    Failures f;
    const RingSpec ring({"a", "b", "c", "d", "e", "f", "g"});
    const auto ideal = named(ring, "a^3*b*c a^2*d b^2*c c*e^2 d*e c^2*f e*g");
    auto prime = [&](const std::string& letters) {
        MonomialPrime p;
        for (char ch : letters) p.vars.insert(ring.index(std::string(1, ch)));
        return p;
    };
    // The printed list: P1..P5 minimal, Q1..Q8 embedded, and every printed
    // way of writing Q_i as (P_j, extras).
    const std::map<std::string, std::string> minimal{
        {"P1", "ace"}, {"P2", "cde"}, {"P3", "cdg"}, {"P4", "abef"}, {"P5", "bdef"}};
    struct Printed {
        std::string name, vars;
        std::vector<std::pair<std::string, std::string>> ways;  // (P_j, extras)
    };
    const std::vector<Printed> embedded{
        {"Q1", "abce", {{"P1", "b"}}},
        {"Q2", "bcde", {{"P2", "b"}}},
        {"Q3", "abcde", {{"P1", "bd"}, {"P2", "ab"}}},
        {"Q4", "abdef", {{"P4", "d"}, {"P5", "a"}}},
        {"Q5", "bcdeg", {{"P2", "bg"}, {"P3", "be"}}},
        {"Q6", "bdefg", {{"P5", "g"}}},
        {"Q7", "abcdeg", {{"P1", "bdg"}, {"P2", "abg"}, {"P3", "abe"}}},
        {"Q8", "abdefg", {{"P4", "dg"}, {"P5", "ag"}}},
    };
    PrimeSet expected;
    for (const auto& [_, v] : minimal) expected.push_back(prime(v));
    for (const auto& q : embedded) expected.push_back(prime(q.vars));
    std::sort(expected.begin(), expected.end());
    const auto ass = associated_primes(ideal);
    if (ass != expected) f.add("Ass has " + std::to_string(ass.size()) + " primes, not the printed 13");

    std::string q7;
    for (const auto& q : embedded) {
        try {
            const auto d = embedded_decomposition(ideal, prime(q.vars));
            VarSet extras;
            for (const auto& e : d.extras) {
                extras.insert(e.z);
                if (!star_neighbors(ideal, e.witness).contains(e.z))
                    f.add(q.name + ": " + ring.name(e.z) + " not in N*(" + ring.name(e.witness) + ")");
            }
            if (!((d.minimal_prime.vars | extras) == prime(q.vars).vars)) f.add(q.name + ": union is not Q");
            const bool printed = std::any_of(q.ways.begin(), q.ways.end(), [&](const auto& way) {
                return d.minimal_prime == prime(minimal.at(way.first)) && extras == prime(way.second).vars;
            });
            if (!printed) f.add(q.name + ": decomposition not among the printed ones");
            if (q.name == "Q7") {
                for (const auto& e : d.extras)
                    q7 += (q7.empty() ? "" : ",") + ring.name(e.z) + " in N*(" + ring.name(e.witness) + ")";
                q7 = "Q7 = (P1, " + name_list(ring, extras) + ") with " + q7;
            }
        } catch (const Error& e) {
            f.add(q.name + ": " + e.what());
        }
    }
    return finish(4, "associated primes of the 7-generator example", f, "13 primes; " + q7, sw, false);
}

CriterionResult AcceptanceSuite::embedded_structure() {
    Stopwatch sw(options_.timeout_seconds);
    Failures f;
    Rng rng(options_.seed + 5);
    std::size_t embedded = 0;
    for (std::size_t k = 0; k < random_ass_instances && !sw.expired(); ++k) {
        const auto ideal = random_ideal(rng, rng.uniform(1, 5), 5, 3);
        const auto ass = associated_primes(ideal);
        if (ass != associated_primes_bruteforce(ideal, options_.budget.witness_candidates))
            f.add("Ass routes disagree on " + format_ideal_text(ideal));
        for (const auto& q : embedded_primes(ideal)) {
            ++embedded;
            try {
                const auto d = embedded_decomposition(ideal, q);
                VarSet extras;
                for (const auto& e : d.extras) {
                    extras.insert(e.z);
                    if (!star_neighbors(ideal, e.witness).contains(e.z)) f.add("bad witness label");
                }
                if (!((d.minimal_prime.vars | extras) == q.vars)) f.add("decomposition union is not Q");
            } catch (const Error& e) {
                f.add(std::string(e.what()) + " on " + format_ideal_text(ideal));
            }
        }
    }
    return finish(5, "embedded primes = minimal prime + star neighbors; Ass routes agree", f,
                  std::to_string(random_ass_instances) + " ideals, " + std::to_string(embedded) +
                      " embedded primes decomposed",
                  sw, sw.expired());
}

CriterionResult AcceptanceSuite::corollaries() {
    Stopwatch sw(options_.timeout_seconds);
    Failures f;
    Rng rng(options_.seed + 6);
    for (std::size_t k = 0; k < random_corollary_instances && !sw.expired(); ++k) {
        // No embedded primes for uniform-degree ideals, same minimal primes
        // as the squarefree part.
        const auto ideal = random_uniform_degree_ideal(rng, rng.uniform(1, 5), 5, 3);
        if (!has_no_embedded_hypothesis(ideal)) f.add("generator broke the hypothesis");
        const auto ass = associated_primes(ideal);
        if (ass != minimal_primes(ideal)) f.add("Ass != Min on " + format_ideal_text(ideal));
        if (ass != associated_primes_bruteforce(ideal, options_.budget.witness_candidates))
            f.add("Ass routes disagree on " + format_ideal_text(ideal));
        if (minimal_primes(ideal) != minimal_primes(squarefree_part(ideal)))
            f.add("Min differs from the squarefree part on " + format_ideal_text(ideal));
    }
    for (std::size_t k = 0; k < random_corollary_instances && !sw.expired(); ++k) {
        // Bracket powers of squarefree or uniform-degree ideals.
        const std::size_t n = rng.uniform(1, 5);
        const auto ideal = k % 2 == 0 ? random_squarefree_ideal(rng, n, 5) : random_uniform_degree_ideal(rng, n, 5, 3);
        for (std::uint32_t p = 1; p <= 3; ++p) {
            const auto power = bracket_power(ideal, p);
            if (!embedded_primes(power).empty())
                f.add("embedded prime in bracket power " + std::to_string(p) + " of " + format_ideal_text(ideal));
        }
    }
    for (std::size_t k = 0; k < random_corollary_instances && !sw.expired(); ++k) {
        // Covering forms are regular.
        auto inst = random_covering_form_instance(rng, rng.uniform(2, 5), 5, 3);
        if (!is_regular_linear_form(inst.ideal, inst.form))
            f.add(format_linear_form(inst.ideal.ring(), inst.form) + " not regular on " +
                  format_ideal_text(inst.ideal));
    }
    return finish(6, "no-embedded, bracket-power and covering-form corollaries", f,
                  std::to_string(random_corollary_instances) + " instances per corollary", sw, sw.expired());
}

CriterionResult AcceptanceSuite::unicyclic_depth() {
    Stopwatch sw(options_.timeout_seconds);
    Failures f;
    std::size_t checked = 0;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> oracle;
    for (std::size_t n = 3; n <= 8 && !sw.expired(); ++n) {
        for (std::size_t m = 0; m <= 5; ++m) {
            const auto d = depth_oracle(unicyclic_ideal(n, m), Field::rationals, options_.budget).value;
            oracle[{n, m}] = d;
            ++checked;
            if (d != depth_unicyclic_formula(n, m))
                f.add("G_" + std::to_string(n) + "," + std::to_string(m) + ": oracle " + std::to_string(d) +
                      ", formula " + std::to_string(depth_unicyclic_formula(n, m)));
        }
    }
    if (oracle.count({5, 1}) && oracle[{5, 1}] != 2) f.add("G_5,1 depth is not 2");
    if (oracle.count({5, 2}) && oracle[{5, 2}] != 3) f.add("G_5,2 depth is not 3");
    for (std::size_t t = 1; t <= 2; ++t) {
        const std::size_t n = 3 * t + 2;
        const auto trace = verify_initially_regular(unicyclic_ideal(n, 2), unicyclic_sequence(t), Engine::buchberger,
                                                    options_.budget);
        const auto d = oracle.count({n, 2}) ? oracle[{n, 2}] : depth_oracle(unicyclic_ideal(n, 2)).value;
        record("G_" + std::to_string(n) + ",2 unicyclic plan", trace.verified_length, d);
        if (trace.verified_length != t + 2 || d != t + 2)
            f.add("G_" + std::to_string(n) + ",2: verified " + std::to_string(trace.verified_length) + ", depth " +
                  std::to_string(d) + ", bound " + std::to_string(t + 2));
    }
    return finish(7, "unicyclic depth G_n,m (n 3..8, m 0..5)", f,
                  std::to_string(checked) + " graphs; G_5,2 and G_8,2 reach t+2", sw, sw.expired());
}

CriterionResult AcceptanceSuite::lower_bound_soundness() {
    Stopwatch sw(options_.timeout_seconds);
    Failures f;
    if (log_.empty()) {
        // Run standalone: every plan the suite knows about.
        for (std::size_t m = 3; m <= 11; ++m) {
            const auto ideal = cycle_ideal(m);
            const auto trace = verify_initially_regular(ideal, cycle_sequence(m), Engine::buchberger, options_.budget);
            record("C_" + std::to_string(m), trace.verified_length, depth_oracle(ideal).value);
        }
        for (std::size_t t = 1; t <= 2; ++t) {
            const auto ideal = unicyclic_ideal(3 * t + 2, 2);
            const auto trace = verify_initially_regular(ideal, unicyclic_sequence(t), Engine::buchberger,
                                                        options_.budget);
            record("G_" + std::to_string(3 * t + 2) + ",2", trace.verified_length, depth_oracle(ideal).value);
        }
    }
    for (const auto& e : log_)
        if (e.verified_length > e.depth)
            f.add(e.label + ": verified " + std::to_string(e.verified_length) + " > depth " + std::to_string(e.depth));
    return finish(8, "verified length never exceeds depth", f, std::to_string(log_.size()) + " verifications", sw,
                  false);
}

}  // namespace monoideal

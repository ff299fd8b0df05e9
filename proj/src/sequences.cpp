#include "monoideal/sequences.hpp"

#include <algorithm>

#include "monoideal/error.hpp"
#include "monoideal/groebner.hpp"
#include "monoideal/primes.hpp"
#include "monoideal/transforms.hpp"

namespace monoideal {

SequencePlan SequencePlan::with_order(TermOrder o) const {
    if (o.size() != ring.size()) throw Error(Errc::ring_mismatch, "order size differs from ring");
    if (!satisfies(o, constraints)) throw Error(Errc::domain, "order violates the plan constraints");
    SequencePlan p = *this;
    p.order = std::move(o);
    return p;
}

namespace {

// 1-based cycle vertex to index.
std::size_t xv(std::size_t i) { return i - 1; }

struct CycleForms {
    std::vector<LinearForm> forms;
    std::vector<OrderChain> chains;
    std::string provenance;
};

CycleForms cycle_forms(std::size_t m, std::size_t nvars) {
    if (m < 3) throw Error(Errc::domain, "cycle sequence needs at least 3 vertices");
    const std::size_t n = m / 3;
    CycleForms out;
    auto add = [&](std::vector<std::size_t> support, bool chain) {
        if (chain) out.chains.push_back(support);
        out.forms.emplace_back(std::move(support), nvars);
    };
    // m = 4 has n = 1 with x_{3n+1} = x4 = x_m, so the first form is shared.
    add({xv(1), xv(m), xv(2)}, true);
    for (std::size_t i = 2; i <= n; ++i) add({xv(3 * i - 2), xv(3 * i - 3), xv(3 * i - 1)}, true);
    switch (m % 3) {
        case 0: out.provenance = "cycle C_3n: h_i"; break;
        case 1: out.provenance = "cycle C_3n+1: g_i"; break;
        default: {
            std::vector<std::size_t> last{xv(3 * n), xv(3 * n + 1)};
            for (std::size_t i = 1; i <= n; ++i) last.push_back(xv(3 * i - 1));
            add(std::move(last), false);
            out.provenance = "cycle C_3n+2: f_1..f_n+1";
        }
    }
    return out;
}

}  // namespace

SequencePlan cycle_sequence(std::size_t m, Completion completion) {
    auto cf = cycle_forms(m, m);
    auto order = complete_order(m, cf.chains, completion);
    return {RingSpec::indexed("x", m), std::move(cf.forms), std::move(cf.chains), std::move(order),
            std::move(cf.provenance)};
}

SequencePlan unicyclic_sequence(std::size_t t, Completion completion) {
    if (t < 1) throw Error(Errc::domain, "unicyclic sequence needs t >= 1");
    const std::size_t m = 3 * t + 2;
    const std::size_t nvars = m + 2;
    auto cf = cycle_forms(m, nvars);
    const std::size_t y1 = m;
    const std::size_t y2 = m + 1;
    cf.forms.emplace_back(std::vector<std::size_t>{y2, y1}, nvars);
    cf.chains.push_back({y2, y1});
    std::vector<std::string> names;
    for (std::size_t i = 1; i <= m; ++i) names.push_back("x" + std::to_string(i));
    names.push_back("y1");
    names.push_back("y2");
    auto order = complete_order(nvars, cf.chains, completion);
    return {RingSpec(std::move(names)), std::move(cf.forms), std::move(cf.chains), std::move(order),
            "unicyclic G_3t+2,2: cycle plan then y2+y1"};
}

const char* to_string(Engine e) noexcept {
    switch (e) {
        case Engine::transform: return "transform";
        case Engine::buchberger: return "buchberger";
        case Engine::both: return "both";
    }
    return "?";
}

Engine parse_engine(std::string_view name) {
    if (name == "transform") return Engine::transform;
    if (name == "buchberger") return Engine::buchberger;
    if (name == "both") return Engine::both;
    throw Error(Errc::parse, "unknown engine '" + std::string(name) + "'");
}

namespace {

/// Closed-form ini(I, f) when f has two or three terms and the matching
/// hypotheses hold; the variables are taken in the order's ranking.
std::optional<MonomialIdeal> closed_form(const MonomialIdeal& ideal, const LinearForm& f, const TermOrder& order) {
    auto vars = f.support();
    std::sort(vars.begin(), vars.end(), [&](auto x, auto y) { return order.var_greater(x, y); });
    if (vars.size() == 2) {
        if (binomial_context(ideal, vars[0], vars[1]) == BinomialContext::none) return std::nullopt;
        return ini_binomial(ideal, vars[0], vars[1]);
    }
    if (vars.size() == 3) {
        if (trinomial_precondition_failure(ideal, vars[0], vars[1], vars[2])) return std::nullopt;
        return ini_trinomial(ideal, vars[0], vars[1], vars[2]);
    }
    return std::nullopt;
}

}  // namespace

MonomialIdeal initial_ideal_step(const MonomialIdeal& ideal, const LinearForm& f, const TermOrder& order,
                                 Engine engine, const Budget& budget) {
    if (engine == Engine::buchberger) return initial_ideal(ideal, f, order, budget);
    auto fast = closed_form(ideal, f, order);
    if (!fast) return initial_ideal(ideal, f, order, budget);
    if (engine == Engine::both) {
        auto slow = initial_ideal(ideal, f, order, budget);
        if (!(slow == *fast)) throw Error(Errc::oracle_mismatch, "closed form and Buchberger disagree");
    }
    return *fast;
}

std::vector<MonomialIdeal> iterated_initial_ideals(const MonomialIdeal& ideal, const SequencePlan& plan,
                                                   Engine engine, const Budget& budget) {
    if (!(ideal.ring() == plan.ring)) throw Error(Errc::ring_mismatch, "plan ring differs from the ideal's");
    std::vector<MonomialIdeal> out{ideal};
    for (const auto& f : plan.forms) out.push_back(initial_ideal_step(out.back(), f, plan.order, engine, budget));
    return out;
}

VerificationTrace verify_initially_regular(const MonomialIdeal& ideal, const SequencePlan& plan, Engine engine,
                                           const Budget& budget) {
    if (!(ideal.ring() == plan.ring)) throw Error(Errc::ring_mismatch, "plan ring differs from the ideal's");
    VerificationTrace trace;
    MonomialIdeal current = ideal;
    for (std::size_t i = 0; i < plan.forms.size(); ++i) {
        const auto& f = plan.forms[i];
        // The zero ideal has Ass = {(0)}: every nonzero form is regular.
        const auto ass = current.is_zero() ? PrimeSet{} : associated_primes(current);
        const bool regular = std::none_of(ass.begin(), ass.end(), [&](const MonomialPrime& p) {
            return std::all_of(f.support().begin(), f.support().end(),
                               [&](std::size_t v) { return p.vars.contains(v); });
        });
        trace.steps.push_back({current, f, regular, current.is_zero() ? 1 : ass.size()});
        if (!regular) break;
        ++trace.verified_length;
        if (i + 1 < plan.forms.size()) current = initial_ideal_step(current, f, plan.order, engine, budget);
    }
    return trace;
}

nlohmann::json plan_to_json(const SequencePlan& plan) {
    auto names = [&](const std::vector<std::size_t>& idx) {
        nlohmann::json a = nlohmann::json::array();
        for (auto i : idx) a.push_back(plan.ring.name(i));
        return a;
    };
    nlohmann::json doc;
    doc["vars"] = plan.ring.names();
    doc["forms"] = nlohmann::json::array();
    for (const auto& f : plan.forms) doc["forms"].push_back(names(f.support()));
    doc["constraints"] = nlohmann::json::array();
    for (const auto& c : plan.constraints) doc["constraints"].push_back(names(c));
    doc["order"] = names(plan.order.precedence());
    doc["provenance"] = plan.provenance;
    return doc;
}

SequencePlan plan_from_json(const RingSpec& ring, const nlohmann::json& doc) {
    try {
        auto indices = [&](const nlohmann::json& arr) {
            std::vector<std::size_t> out;
            for (const auto& n : arr) out.push_back(ring.index(n.get<std::string>()));
            return out;
        };
        std::vector<LinearForm> forms;
        for (const auto& f : doc.at("forms")) forms.emplace_back(indices(f), ring.size());
        std::vector<OrderChain> chains;
        if (doc.contains("constraints"))
            for (const auto& c : doc.at("constraints")) chains.push_back(indices(c));
        std::vector<OrderChain> all = chains;
        if (doc.contains("order")) {
            auto given = indices(doc.at("order"));
            if (given.size() == ring.size()) {
                TermOrder order(given);
                if (!satisfies(order, chains)) throw Error(Errc::domain, "plan order violates its constraints");
                return {ring, std::move(forms), std::move(chains), std::move(order),
                        doc.value("provenance", std::string("user plan"))};
            }
            all.push_back(given);  // partial order: treat as one more chain
        }
        auto order = complete_order(ring.size(), all);
        return {ring, std::move(forms), std::move(chains), std::move(order),
                doc.value("provenance", std::string("user plan"))};
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::parse, std::string("plan: ") + e.what());
    }
}

}  // namespace monoideal

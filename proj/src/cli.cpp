#include "monoideal/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "monoideal/checks.hpp"
#include "monoideal/depth.hpp"
#include "monoideal/error.hpp"
#include "monoideal/groebner.hpp"
#include "monoideal/io.hpp"
#include "monoideal/primes.hpp"
#include "monoideal/random.hpp"
#include "monoideal/sequences.hpp"
#include "monoideal/transforms.hpp"

namespace monoideal::cli {

namespace {

using nlohmann::json;

/// A --compare or check found a disagreement; output has been written.
struct VerificationFailed {};

struct Context {
    std::ostream& out;
    std::istream& in;
    Budget budget;
    bool as_json = false;
};

MonomialIdeal read_ideal(Context& ctx, const std::string& path) {
    if (path != "-") return load_ideal(path);
    std::stringstream buf;
    buf << ctx.in.rdbuf();
    return parse_ideal(buf.str());
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(Errc::parse, "cannot open '" + path + "'");
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw Error(Errc::parse, path + ": " + e.what());
    }
}

void emit(Context& ctx, const json& doc, const std::string& text) {
    if (ctx.as_json)
        ctx.out << doc.dump(2) << '\n';
    else
        ctx.out << text;
}

json names_json(const RingSpec& ring, const VarSet& s) {
    json a = json::array();
    for (auto v : s.indices()) a.push_back(ring.name(v));
    return a;
}

std::string set_text(const RingSpec& ring, const VarSet& s) {
    std::string out = "{";
    for (auto v : s.indices()) out += (out.size() > 1 ? ", " : "") + ring.name(v);
    return out + "}";
}

json gens_json(const MonomialIdeal& ideal) {
    json a = json::array();
    for (const auto& g : ideal.gens()) a.push_back(format_monomial(ideal.ring(), g));
    return a;
}

std::string gens_text(const MonomialIdeal& ideal) {
    std::string s = "(";
    for (const auto& g : ideal.gens()) s += (s.size() > 1 ? ", " : "") + format_monomial(ideal.ring(), g);
    return s + ")";
}

// ---- gen -------------------------------------------------------------------

void cmd_gen(Context& ctx, const std::string& kind, const std::vector<std::size_t>& params, std::size_t vars,
             std::size_t gens, std::uint32_t max_exp, const std::string& shape, std::uint64_t seed) {
    auto need = [&](std::size_t k) {
        if (params.size() != k)
            throw Error(Errc::parse, "gen " + kind + " takes " + std::to_string(k) + " number(s)");
    };
    std::optional<MonomialIdeal> ideal;
    if (kind == "cycle") {
        need(1);
        ideal = cycle_ideal(params[0]);
    } else if (kind == "path") {
        need(1);
        ideal = path_ideal(params[0]);
    } else if (kind == "gnm") {
        need(2);
        ideal = unicyclic_ideal(params[0], params[1]);
    } else if (kind == "random") {
        need(0);
        Rng rng(seed);
        if (shape == "general")
            ideal = random_ideal(rng, vars, gens, max_exp);
        else if (shape == "squarefree")
            ideal = random_squarefree_ideal(rng, vars, gens);
        else if (shape == "uniform")
            ideal = random_uniform_degree_ideal(rng, vars, gens, max_exp);
        else
            throw Error(Errc::parse, "unknown --shape '" + shape + "'");
    } else {
        throw Error(Errc::parse, "unknown family '" + kind + "' (cycle, path, gnm, random)");
    }
    emit(ctx, ideal_to_json(*ideal), format_ideal_text(*ideal));
}

// ---- ass / min-primes / star / polarize -------------------------------------

void cmd_ass(Context& ctx, const std::string& path, bool decompose, bool bruteforce, bool compare) {
    const auto ideal = read_ideal(ctx, path);
    const auto& ring = ideal.ring();
    const auto ass = bruteforce ? associated_primes_bruteforce(ideal, ctx.budget.witness_candidates)
                                : associated_primes(ideal);
    const auto min = minimal_primes(ideal);
    json doc;
    doc["method"] = bruteforce ? "bruteforce" : "polarization";
    doc["count"] = ass.size();
    doc["primes"] = json::array();
    std::string text;
    for (const auto& p : ass) {
        const bool minimal = std::binary_search(min.begin(), min.end(), p);
        json entry{{"vars", names_json(ring, p.vars)}, {"minimal", minimal}};
        text += format_prime(ring, p) + (minimal ? "  minimal" : "  embedded");
        if (decompose && !minimal) {
            const auto d = embedded_decomposition(ideal, p);
            json extras = json::array();
            text += "  = " + format_prime(ring, d.minimal_prime) + " +";
            for (const auto& e : d.extras) {
                extras.push_back({{"var", ring.name(e.z)}, {"witness", ring.name(e.witness)}});
                text += " " + ring.name(e.z) + " [N*(" + ring.name(e.witness) + ")]";
            }
            entry["decomposition"] = {{"minimal_prime", names_json(ring, d.minimal_prime.vars)}, {"extras", extras}};
        }
        doc["primes"].push_back(entry);
        text += "\n";
    }
    bool mismatch = false;
    if (compare) {
        const auto other = bruteforce ? associated_primes(ideal)
                                      : associated_primes_bruteforce(ideal, ctx.budget.witness_candidates);
        mismatch = other != ass;
        doc["compare"] = mismatch ? "differ" : "agree";
        text += mismatch ? "polarization and bruteforce routes DIFFER\n" : "polarization and bruteforce routes agree\n";
    }
    emit(ctx, doc, text);
    if (mismatch) throw VerificationFailed{};
}

void cmd_min_primes(Context& ctx, const std::string& path) {
    const auto ideal = read_ideal(ctx, path);
    json doc;
    doc["primes"] = json::array();
    std::string text;
    for (const auto& p : minimal_primes(ideal)) {
        doc["primes"].push_back(names_json(ideal.ring(), p.vars));
        text += format_prime(ideal.ring(), p) + "\n";
    }
    emit(ctx, doc, text);
}

void cmd_star(Context& ctx, const std::string& path, const std::string& var) {
    const auto ideal = read_ideal(ctx, path);
    const auto& ring = ideal.ring();
    std::vector<std::size_t> targets;
    if (var.empty()) {
        for (std::size_t w = 0; w < ring.size(); ++w) targets.push_back(w);
    } else {
        targets.push_back(ring.index(var));
    }
    json doc = json::object();
    std::string text;
    for (auto w : targets) {
        const auto s = star_neighbors(ideal, w);
        doc[ring.name(w)] = names_json(ring, s);
        text += "N*(" + ring.name(w) + ") = " + set_text(ring, s) + "\n";
    }
    emit(ctx, json{{"star_neighbors", doc}}, text);
}

void cmd_polarize(Context& ctx, const std::string& path) {
    const auto ideal = read_ideal(ctx, path);
    const auto pol = polarize(ideal);
    json map = json::object();
    for (std::size_t v = 0; v < ideal.nvars(); ++v) {
        json copies = json::array();
        for (std::size_t j = 1; j <= pol.map.copies(v); ++j) copies.push_back(pol.map.target().name(pol.map.target_index(v, j)));
        map[ideal.ring().name(v)] = copies;
    }
    emit(ctx, json{{"ideal", ideal_to_json(pol.ideal)}, {"map", map}}, format_ideal_text(pol.ideal));
}

// ---- ini --------------------------------------------------------------------

MonomialIdeal closed_form_or_throw(const MonomialIdeal& ideal, const LinearForm& f, const TermOrder& order,
                                   bool allow_override, const Budget& budget) {
    auto vars = f.support();
    std::sort(vars.begin(), vars.end(), [&](auto x, auto y) { return order.var_greater(x, y); });
    if (vars.size() == 2) return ini_binomial(ideal, vars[0], vars[1], allow_override, budget);
    if (vars.size() == 3) {
        if (auto why = trinomial_precondition_failure(ideal, vars[0], vars[1], vars[2]))
            throw Error(Errc::precondition_violated, *why);
        return ini_trinomial(ideal, vars[0], vars[1], vars[2]);
    }
    throw Error(Errc::precondition_violated, "closed forms cover only two- and three-term forms");
}

void cmd_ini(Context& ctx, const std::string& path, const std::string& form, const std::string& order_text,
             const std::string& engine_name, bool allow_override) {
    const auto ideal = read_ideal(ctx, path);
    const auto& ring = ideal.ring();
    const auto f = parse_linear_form(ring, form);
    const TermOrder order = order_text.empty() ? complete_order(ring.size(), std::vector<OrderChain>{f.support()})
                                               : parse_order(ring, order_text);
    const Engine engine = parse_engine(engine_name);

    json doc{{"engine", to_string(engine)}, {"form", format_linear_form(ring, f)}, {"order", format_order(ring, order)}};
    std::string text;
    bool mismatch = false;
    if (engine == Engine::buchberger) {
        const auto result = initial_ideal(ideal, f, order, ctx.budget);
        doc["ideal"] = ideal_to_json(result);
        doc["gens"] = gens_json(result);
        text = format_ideal_text(result);
    } else if (engine == Engine::transform) {
        const auto result = closed_form_or_throw(ideal, f, order, allow_override, ctx.budget);
        doc["ideal"] = ideal_to_json(result);
        doc["gens"] = gens_json(result);
        text = format_ideal_text(result);
    } else {
        const auto slow = initial_ideal(ideal, f, order, ctx.budget);
        doc["ideal"] = ideal_to_json(slow);
        doc["gens"] = gens_json(slow);
        text = format_ideal_text(slow);
        try {
            const auto fast = closed_form_or_throw(ideal, f, order, allow_override, ctx.budget);
            if (fast == slow) {
                doc["agreement"] = "equal";
                text += "engines: equal\n";
            } else {
                mismatch = true;
                json only_t = json::array(), only_b = json::array();
                for (const auto& g : fast.gens())
                    if (std::find(slow.gens().begin(), slow.gens().end(), g) == slow.gens().end())
                        only_t.push_back(format_monomial(ring, g));
                for (const auto& g : slow.gens())
                    if (std::find(fast.gens().begin(), fast.gens().end(), g) == fast.gens().end())
                        only_b.push_back(format_monomial(ring, g));
                doc["agreement"] = "differ";
                doc["diff"] = {{"only_transform", only_t}, {"only_buchberger", only_b}};
                text += "engines: DIFFER\n  only transform: " + only_t.dump() + "\n  only buchberger: " +
                        only_b.dump() + "\n";
            }
        } catch (const Error& e) {
            if (e.code() != Errc::precondition_violated) throw;
            doc["agreement"] = "transform not applicable";
            doc["reason"] = e.what();
            text += std::string("engines: transform not applicable (") + e.what() + ")\n";
        }
    }
    emit(ctx, doc, text);
    if (mismatch) throw VerificationFailed{};
}

// ---- seq --------------------------------------------------------------------

Completion parse_completion(const std::string& name) {
    if (name == "chain-priority") return Completion::chain_priority;
    if (name == "unconstrained-descending") return Completion::unconstrained_descending;
    if (name == "unconstrained-first") return Completion::unconstrained_first;
    if (name == "index-ascending") return Completion::index_ascending;
    if (name == "index-descending") return Completion::index_descending;
    throw Error(Errc::parse, "unknown completion '" + name + "'");
}

std::string plan_text(const SequencePlan& plan) {
    std::string text = "# " + plan.provenance + "\n";
    for (std::size_t i = 0; i < plan.forms.size(); ++i)
        text += "f" + std::to_string(i + 1) + " = " + format_linear_form(plan.ring, plan.forms[i]) + "\n";
    text += "constraints:";
    for (const auto& c : plan.constraints) {
        text += " ";
        for (std::size_t k = 0; k < c.size(); ++k) text += (k ? ">" : "") + plan.ring.name(c[k]);
    }
    return text + "\norder: " + format_order(plan.ring, plan.order) + "\n";
}

void cmd_seq(Context& ctx, const std::vector<std::string>& args, const std::string& plan_path,
             const std::string& engine_name, const std::string& completion) {
    if (args.empty()) throw Error(Errc::parse, "seq needs 'cycle N', 'gnm2 T' or 'verify <ideal> --plan <file>'");
    auto number = [&](std::size_t i) -> std::size_t {
        if (args.size() != i + 1) throw Error(Errc::parse, "seq " + args[0] + " takes one number");
        try {
            return std::stoul(args[i]);
        } catch (const std::exception&) {
            throw Error(Errc::parse, "not a number: '" + args[i] + "'");
        }
    };
    if (args[0] == "cycle" || args[0] == "gnm2") {
        const auto plan = args[0] == "cycle" ? cycle_sequence(number(1), parse_completion(completion))
                                             : unicyclic_sequence(number(1), parse_completion(completion));
        emit(ctx, plan_to_json(plan), plan_text(plan));
        return;
    }
    if (args[0] != "verify" || args.size() != 2) throw Error(Errc::parse, "usage: seq verify <ideal> --plan <file>");
    if (plan_path.empty()) throw Error(Errc::parse, "seq verify needs --plan");
    const auto ideal = read_ideal(ctx, args[1]);
    const auto plan = plan_from_json(ideal.ring(), read_json_file(plan_path));
    const auto trace = verify_initially_regular(ideal, plan, parse_engine(engine_name), ctx.budget);
    json doc{{"verified_length", trace.verified_length}, {"steps", json::array()}, {"order", format_order(ideal.ring(), plan.order)}};
    std::string text;
    for (std::size_t i = 0; i < trace.steps.size(); ++i) {
        const auto& s = trace.steps[i];
        const auto form = format_linear_form(ideal.ring(), s.form);
        doc["steps"].push_back(
            {{"ideal", gens_json(s.ideal)}, {"form", form}, {"regular", s.regular}, {"ass_size", s.ass_size}});
        text += "step " + std::to_string(i + 1) + ": " + form + (s.regular ? "  regular" : "  NOT regular") +
                "  |Ass| = " + std::to_string(s.ass_size) + "  I = " + gens_text(s.ideal) + "\n";
    }
    text += "verified_length " + std::to_string(trace.verified_length) + "\n";
    emit(ctx, doc, text);
}

// ---- depth ------------------------------------------------------------------

void cmd_depth(Context& ctx, std::vector<std::string> args, bool oracle, bool compare, const std::string& field_name) {
    Field field;
    if (field_name == "qq")
        field = Field::rationals;
    else if (field_name == "gf2")
        field = Field::gf2;
    else
        throw Error(Errc::parse, "unknown field '" + field_name + "' (qq, gf2)");

    auto number = [&](std::size_t i) -> std::size_t {
        try {
            return std::stoul(args.at(i));
        } catch (const std::exception&) {
            throw Error(Errc::parse, "depth " + args[0] + ": expected a number at position " + std::to_string(i));
        }
    };
    if (args.empty()) args.push_back("-");
    std::optional<std::size_t> formula;
    std::optional<MonomialIdeal> ideal;
    const std::string& kind = args[0];
    if (kind == "cycle" || kind == "path") {
        if (args.size() != 2) throw Error(Errc::parse, "depth " + kind + " takes one number");
        const auto n = number(1);
        formula = kind == "cycle" ? depth_cycle_formula(n) : depth_path_formula(n);
        if (oracle || compare) ideal = kind == "cycle" ? cycle_ideal(n) : path_ideal(n);
    } else if (kind == "gnm") {
        if (args.size() != 3) throw Error(Errc::parse, "depth gnm takes two numbers");
        formula = depth_unicyclic_formula(number(1), number(2));
        if (oracle || compare) ideal = unicyclic_ideal(number(1), number(2));
    } else {
        if (args.size() != 1) throw Error(Errc::parse, "depth takes one ideal file");
        if (compare) throw Error(Errc::parse, "--compare needs a graph family (cycle, path, gnm)");
        ideal = read_ideal(ctx, kind);
    }

    json doc;
    std::string text;
    std::optional<DepthResult> result;
    if (ideal) {
        result = depth_oracle(*ideal, field, ctx.budget);
        doc["field"] = to_string(field);
        if (result->witness)
            doc["witness"] = {{"projective_dimension", result->witness->projective_dimension},
                              {"multidegree", result->witness->multidegree}};
    }
    if (formula) doc["formula"] = *formula;
    if (result) doc["oracle"] = result->value;
    doc["value"] = result ? result->value : *formula;
    doc["method"] = result ? "oracle" : "formula";

    bool mismatch = false;
    if (compare) {
        mismatch = *formula != result->value;
        doc["compare"] = mismatch ? "differ" : "agree";
        text = "formula " + std::to_string(*formula) + "\noracle " + std::to_string(result->value) + " (" +
               to_string(field) + ")\n" + (mismatch ? "DIFFER\n" : "agree\n");
    } else {
        text = std::to_string(result ? result->value : *formula) + "\n";
    }
    emit(ctx, doc, text);
    if (mismatch) throw VerificationFailed{};
}

// ---- check ------------------------------------------------------------------

void cmd_check(Context& ctx, std::uint64_t seed, double timeout, const std::vector<int>& only) {
    AcceptanceSuite suite(CheckOptions{seed, timeout, ctx.budget});
    std::vector<CriterionResult> results;
    if (only.empty()) {
        results = suite.run_all();
    } else {
        for (int id : only) results.push_back(suite.run(id));
    }
    json doc{{"seed", seed}, {"criteria", json::array()}};
    std::string text;
    bool all = true;
    for (const auto& r : results) {
        all = all && r.passed;
        doc["criteria"].push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"detail", r.detail}});
        std::ostringstream line;
        line << "criterion " << r.id << ": " << (r.passed ? "PASS" : "FAIL") << "  " << r.title << "  (" << r.detail
             << "; " << std::fixed << std::setprecision(2) << r.seconds << "s)\n";
        text += line.str();
    }
    doc["passed"] = all;
    emit(ctx, doc, text);
    if (!all) throw VerificationFailed{};
}

}  // namespace

Status run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in) {
    CLI::App app{"Exact toolkit for monomial ideals: associated primes, initial ideals for linear forms, "
                 "initially regular sequences and depth."};
    app.name("monoideal");
    app.require_subcommand(1);

    Context ctx{out, in, Budget{}};
    auto json_flag = [&](CLI::App* sub) { sub->add_flag("--json", ctx.as_json, "Canonical JSON output (sorted keys)"); };

    // gen
    std::string gen_kind;
    std::vector<std::size_t> gen_params;
    std::size_t gen_vars = 5, gen_gens = 5;
    std::uint32_t gen_exp = 3;
    std::string gen_shape = "general";
    std::uint64_t gen_seed = 1;
    auto* gen = app.add_subcommand("gen", "Write an ideal: the edge ideal of a cycle C_n, a path P_p, or the "
                                          "unicyclic graph G_{n,m} (cycle plus a path hung off x2); or a seeded "
                                          "random monomial ideal.");
    gen->add_option("family", gen_kind, "cycle | path | gnm | random")->required();
    gen->add_option("params", gen_params, "n / p / n m");
    gen->add_option("--vars", gen_vars, "random: number of variables");
    gen->add_option("--gens", gen_gens, "random: maximum number of generators");
    gen->add_option("--max-exp", gen_exp, "random: maximum exponent");
    gen->add_option("--shape", gen_shape, "random: general | squarefree | uniform (d_x(M) = d_x(I))");
    gen->add_option("--seed", gen_seed, "random: seed");
    json_flag(gen);

    // ass
    std::string ideal_path = "-";
    bool decompose = false, bruteforce = false, compare = false;
    auto* ass = app.add_subcommand("ass", "Associated primes Ass(R/I), via minimal primes of the polarization. "
                                          "--decompose writes each embedded prime as a minimal prime plus star "
                                          "neighbors; --bruteforce tests every witness c with d_x(c) <= d_x(I); "
                                          "--compare runs both routes.");
    ass->add_option("ideal", ideal_path, "ideal file, '-' for stdin");
    ass->add_flag("--decompose", decompose);
    ass->add_flag("--bruteforce", bruteforce);
    ass->add_flag("--compare", compare);
    json_flag(ass);

    auto* minp = app.add_subcommand("min-primes", "Minimal primes Min(R/I): minimal vertex covers of the "
                                                  "generator supports.");
    minp->add_option("ideal", ideal_path, "ideal file, '-' for stdin");
    json_flag(minp);

    std::string star_var;
    auto* star = app.add_subcommand("star", "Star neighbors N*(w): variables z sharing a generator M with w in "
                                            "which d_w(M) < d_w(I).");
    star->add_option("ideal", ideal_path, "ideal file, '-' for stdin");
    star->add_option("--var", star_var, "only this variable");
    json_flag(star);

    auto* pol = app.add_subcommand("polarize", "Polarization: x^a becomes x_1 x_2 ... x_a in each generator.");
    pol->add_option("ideal", ideal_path, "ideal file, '-' for stdin");
    json_flag(pol);

    // ini
    std::string form, order_text, engine = "both";
    bool allow_override = false;
    auto* ini = app.add_subcommand("ini", "Initial ideal ini(I, f) = in(I + (f)) for a linear form f under a lex "
                                          "order. transform uses the closed forms for a + b (leaf or leaf pair) "
                                          "and a + b + c (degree and divisibility conditions); buchberger runs an "
                                          "exact Groebner basis; both compares them.");
    ini->add_option("ideal", ideal_path, "ideal file, '-' for stdin");
    ini->add_option("-f,--form", form, "linear form, e.g. x1+x5+x2")->required();
    ini->add_option("--order", order_text, "variables highest first, e.g. x1,x5,x2 (rest appended in ring order); "
                                           "default: the form's variables in written order");
    ini->add_option("--engine", engine, "transform | buchberger | both");
    ini->add_flag("--override", allow_override, "allow the binomial closed form outside its validated contexts "
                                                "(checked against Buchberger)");
    json_flag(ini);

    // seq
    std::vector<std::string> seq_args;
    std::string plan_path, seq_engine = "buchberger", completion = "chain-priority";
    auto* seq = app.add_subcommand("seq", "Initially regular sequences. 'cycle N' prints the sequence of linear "
                                          "forms for C_N and its order; 'gnm2 T' the one for G_{3T+2,2}; 'verify "
                                          "<ideal> --plan <file>' iterates I_{i+1} = ini(I_i, f_i) and checks each "
                                          "f_i is regular on R/I_i (no associated prime contains its support).");
    seq->add_option("args", seq_args, "cycle N | gnm2 T | verify <ideal>");
    seq->add_option("--plan", plan_path, "plan JSON: forms, constraints, order");
    seq->add_option("--engine", seq_engine, "transform | buchberger | both");
    seq->add_option("--completion", completion, "lex completion of the constraints: chain-priority, "
                                                "unconstrained-descending, unconstrained-first, index-ascending, "
                                                "index-descending");
    json_flag(seq);

    // depth
    std::vector<std::string> depth_args;
    bool use_oracle = false, depth_compare = false;
    std::string field = "qq";
    auto* depth = app.add_subcommand("depth", "depth(R/I). For 'cycle N', 'path P', 'gnm N M' the closed formulas "
                                              "ceil((n-1)/3), ceil(p/3) and the three-branch unicyclic formula; "
                                              "--oracle computes n - pd(R/I) with pd from simplicial homology of "
                                              "the Stanley-Reisner complex of the polarization.");
    depth->add_option("args", depth_args, "<ideal file> | cycle N | path P | gnm N M");
    depth->add_flag("--oracle", use_oracle);
    depth->add_flag("--compare", depth_compare, "formula vs oracle; exit 1 if they differ");
    depth->add_option("--field", field, "homology coefficients: qq | gf2");
    json_flag(depth);

    // check
    std::uint64_t seed = CheckOptions{}.seed;
    double timeout = CheckOptions{}.timeout_seconds;
    std::vector<int> only;
    auto* check = app.add_subcommand("check", "Acceptance suite: cycle and unicyclic depth against the oracle, "
                                              "sequence verification under several orders, closed forms against "
                                              "Buchberger, the associated-prime example, random property suites "
                                              "and lower-bound soundness.");
    check->add_option("--seed", seed);
    check->add_option("--timeout", timeout, "per-criterion limit in seconds");
    check->add_option("--criterion", only, "run only these criteria (1-8)");
    json_flag(check);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? Status::ok : Status::input_error;
    }

    try {
        ctx.budget = Budget::from_env();
        if (*gen) cmd_gen(ctx, gen_kind, gen_params, gen_vars, gen_gens, gen_exp, gen_shape, gen_seed);
        if (*ass) cmd_ass(ctx, ideal_path, decompose, bruteforce, compare);
        if (*minp) cmd_min_primes(ctx, ideal_path);
        if (*star) cmd_star(ctx, ideal_path, star_var);
        if (*pol) cmd_polarize(ctx, ideal_path);
        if (*ini) cmd_ini(ctx, ideal_path, form, order_text, engine, allow_override);
        if (*seq) cmd_seq(ctx, seq_args, plan_path, seq_engine, completion);
        if (*depth) cmd_depth(ctx, depth_args, use_oracle, depth_compare, field);
        if (*check) cmd_check(ctx, seed, timeout, only);
    } catch (const VerificationFailed&) {
        return Status::verification_failed;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        switch (e.code()) {
            case Errc::oracle_mismatch:
            case Errc::no_decomposition: return Status::verification_failed;
            default: return Status::input_error;
        }
    }
    return Status::ok;
}

}  // namespace monoideal::cli

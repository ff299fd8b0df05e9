#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "json.hpp"
#include "monoideal/budget.hpp"
#include "monoideal/ideal.hpp"
#include "monoideal/linear_form.hpp"
#include "monoideal/term_order.hpp"

namespace monoideal {

/// Linear forms f_1..f_q over a ring, the chain constraints the order must
/// honor, and one lex order completing them.
struct SequencePlan {
    RingSpec ring;
    std::vector<LinearForm> forms;
    std::vector<OrderChain> constraints;
    TermOrder order;
    std::string provenance;

    /// Same forms and constraints, another order. Errc::domain if `order`
    /// violates a constraint.
    SequencePlan with_order(TermOrder order) const;
};

/// Plan for I(C_m) in k[x1..xm], m >= 3:
///   m = 3n    h_1 = x1 + x_{3n} + x2, h_i = x_{3i-2} + x_{3i-3} + x_{3i-1}
///   m = 3n+1  g_1 = x1 + x_{3n+1} + x2, g_i as h_i
///   m = 3n+2  f_1 = x1 + x_{3n+2} + x2, f_i as h_i (2 <= i <= n),
///             f_{n+1} = x_{3n} + x_{3n+1} + sum_i x_{3i-1}
/// with chains x1 > x_m > x2 and x_{3i-2} > x_{3i-3} > x_{3i-1}.
SequencePlan cycle_sequence(std::size_t m, Completion completion = Completion::chain_priority);

/// Plan for I(G_{3t+2,2}), t >= 1: the cycle plan for C_{3t+2} followed by
/// y2 + y1 with y2 > y1.
SequencePlan unicyclic_sequence(std::size_t t, Completion completion = Completion::chain_priority);

enum class Engine {
    transform,   ///< closed forms where their hypotheses hold, Buchberger otherwise
    buchberger,
    both,        ///< both where the closed form applies; Errc::oracle_mismatch on disagreement
};

const char* to_string(Engine e) noexcept;
Engine parse_engine(std::string_view name);

/// ini(I, f) under `order` with the chosen engine.
MonomialIdeal initial_ideal_step(const MonomialIdeal& ideal, const LinearForm& f, const TermOrder& order,
                                 Engine engine, const Budget& budget = {});

/// [I_1 = I, I_2, ..., I_{q+1}] with I_{i+1} = ini(I_i, f_i). An empty plan
/// gives [I].
std::vector<MonomialIdeal> iterated_initial_ideals(const MonomialIdeal& ideal, const SequencePlan& plan,
                                                   Engine engine = Engine::buchberger, const Budget& budget = {});

struct StepRecord {
    MonomialIdeal ideal;   ///< I_i
    LinearForm form;       ///< f_i
    bool regular;          ///< f_i regular on R/I_i
    std::size_t ass_size;  ///< |Ass(R/I_i)|
};

struct VerificationTrace {
    std::vector<StepRecord> steps;
    std::size_t verified_length = 0;  ///< leading run of regular steps
};

/// Regularity of f_i on R/I_i is decided by Ass containment. Stops after the
/// first non-regular step; verified_length is a lower bound for depth(R/I).
VerificationTrace verify_initially_regular(const MonomialIdeal& ideal, const SequencePlan& plan,
                                           Engine engine = Engine::buchberger, const Budget& budget = {});

/// {"forms": [[names]], "constraints": [[names]], "order": [names], "provenance": "..."}
nlohmann::json plan_to_json(const SequencePlan& plan);
/// Reads a plan over `ring`. "order" may be absent or partial; it is then
/// completed from the constraints.
SequencePlan plan_from_json(const RingSpec& ring, const nlohmann::json& doc);

}  // namespace monoideal

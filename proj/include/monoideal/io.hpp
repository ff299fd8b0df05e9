#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "monoideal/ideal.hpp"
#include "monoideal/linear_form.hpp"
#include "monoideal/term_order.hpp"

namespace monoideal {

// Ideal text format, one statement per line, '#' starts a comment:
//
//   vars x1 x2 x3 x4 x5
//   gens x1*x2 x2*x3 x3^2*x4
//
// A missing or empty `gens` line is the zero ideal. `gens` may repeat; the
// generators accumulate.

MonomialIdeal parse_ideal_text(std::string_view text);
/// Canonical text; parse_ideal_text(format_ideal_text(I)) == I and the
/// text of a parsed canonical file is reproduced byte for byte.
std::string format_ideal_text(const MonomialIdeal& ideal);

/// {"vars":[...],"gens":[[e1,...,en],...]}
nlohmann::json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const nlohmann::json& doc);

/// Reads a file, or stdin for "-". Accepts either format (JSON if the first
/// non-blank character is '{').
MonomialIdeal load_ideal(const std::string& path);
MonomialIdeal parse_ideal(std::string_view text);

/// "x1^2*x2", "1" for the unit monomial.
std::string format_monomial(const RingSpec& ring, const Monomial& m);
Monomial parse_monomial(const RingSpec& ring, std::string_view text);

/// "x1+x5+x2"
LinearForm parse_linear_form(const RingSpec& ring, std::string_view text);
std::string format_linear_form(const RingSpec& ring, const LinearForm& f);

/// Comma separated names, highest first. Unlisted variables are appended
/// in ring order.
TermOrder parse_order(const RingSpec& ring, std::string_view text);
std::string format_order(const RingSpec& ring, const TermOrder& order);

}  // namespace monoideal

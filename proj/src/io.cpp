#include "monoideal/io.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "monoideal/error.hpp"

namespace monoideal {

namespace {

std::string_view trim(std::string_view s) {
    const auto* ws = " \t\r\n";
    auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < s.size()) {
        while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        auto start = i;
        while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i]))) ++i;
        if (i > start) out.push_back(s.substr(start, i - start));
    }
    return out;
}

std::vector<std::string_view> split_on(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    while (true) {
        auto p = s.find(sep);
        out.push_back(trim(s.substr(0, p)));
        if (p == std::string_view::npos) break;
        s = s.substr(p + 1);
    }
    return out;
}

Exponent parse_exponent(std::string_view text) {
    Exponent value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw Error(Errc::parse, "bad exponent '" + std::string(text) + "'");
    return value;
}

}  // namespace

Monomial parse_monomial(const RingSpec& ring, std::string_view text) {
    text = trim(text);
    Monomial m(ring.size());
    if (text == "1") return m;
    if (text.empty()) throw Error(Errc::parse, "empty monomial");
    for (auto factor : split_on(text, '*')) {
        auto caret = factor.find('^');
        auto name = trim(factor.substr(0, caret));
        Exponent e = caret == std::string_view::npos ? 1 : parse_exponent(trim(factor.substr(caret + 1)));
        auto idx = ring.find(name);
        if (!idx) throw Error(Errc::parse, "unknown variable '" + std::string(name) + "'");
        Exponent total = 0;
        if (__builtin_add_overflow(m[*idx], e, &total)) throw Error(Errc::overflow, "exponent overflow");
        m.set(*idx, total);
    }
    return m;
}

std::string format_monomial(const RingSpec& ring, const Monomial& m) {
    std::string out;
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (!out.empty()) out += '*';
        out += ring.name(i);
        if (m[i] > 1) out += '^' + std::to_string(m[i]);
    }
    return out.empty() ? "1" : out;
}

MonomialIdeal parse_ideal_text(std::string_view text) {
    std::optional<RingSpec> ring;
    std::vector<Monomial> gens;
    std::size_t lineno = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        auto line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tokens = split_ws(line);
        if (tokens.empty()) continue;
        const auto where = " (line " + std::to_string(lineno) + ")";
        if (tokens[0] == "vars") {
            if (ring) throw Error(Errc::parse, "duplicate vars statement" + where);
            try {
                ring.emplace(std::vector<std::string>(tokens.begin() + 1, tokens.end()));
            } catch (const Error& e) {
                throw Error(e.code(), e.detail() + where);
            }
        } else if (tokens[0] == "gens") {
            if (!ring) throw Error(Errc::parse, "gens before vars" + where);
            try {
                for (std::size_t i = 1; i < tokens.size(); ++i) gens.push_back(parse_monomial(*ring, tokens[i]));
            } catch (const Error& e) {
                throw Error(e.code(), e.detail() + where);
            }
        } else {
            throw Error(Errc::parse, "unknown statement '" + std::string(tokens[0]) + "'" + where);
        }
    }
    if (!ring) throw Error(Errc::parse, "missing vars statement");
    return MonomialIdeal(*ring, std::move(gens));
}

std::string format_ideal_text(const MonomialIdeal& ideal) {
    std::string out = "vars";
    for (const auto& n : ideal.ring().names()) out += ' ' + n;
    out += "\ngens";
    for (const auto& g : ideal.gens()) out += ' ' + format_monomial(ideal.ring(), g);
    out += '\n';
    return out;
}

nlohmann::json ideal_to_json(const MonomialIdeal& ideal) {
    nlohmann::json gens = nlohmann::json::array();
    for (const auto& g : ideal.gens())
        gens.push_back(std::vector<Exponent>(g.exponents().begin(), g.exponents().end()));
    return {{"vars", ideal.ring().names()}, {"gens", std::move(gens)}};
}

MonomialIdeal ideal_from_json(const nlohmann::json& doc) {
    try {
        RingSpec ring(doc.at("vars").get<std::vector<std::string>>());
        std::vector<Monomial> gens;
        for (const auto& g : doc.at("gens")) {
            auto exps = g.get<std::vector<Exponent>>();
            if (exps.size() != ring.size())
                throw Error(Errc::parse, "exponent vector length differs from vars");
            gens.emplace_back(std::move(exps));
        }
        return MonomialIdeal(std::move(ring), std::move(gens));
    } catch (const nlohmann::json::exception& e) {
        throw Error(Errc::parse, std::string("malformed ideal JSON: ") + e.what());
    }
}

MonomialIdeal parse_ideal(std::string_view text) {
    auto t = trim(text);
    if (!t.empty() && t.front() == '{') {
        try {
            return ideal_from_json(nlohmann::json::parse(t));
        } catch (const nlohmann::json::parse_error& e) {
            throw Error(Errc::parse, std::string("invalid JSON: ") + e.what());
        }
    }
    return parse_ideal_text(text);
}

MonomialIdeal load_ideal(const std::string& path) {
    std::stringstream buf;
    if (path == "-") {
        buf << std::cin.rdbuf();
    } else {
        std::ifstream in(path);
        if (!in) throw Error(Errc::parse, "cannot open '" + path + "'");
        buf << in.rdbuf();
    }
    return parse_ideal(buf.str());
}

LinearForm parse_linear_form(const RingSpec& ring, std::string_view text) {
    std::vector<std::size_t> support;
    for (auto term : split_on(text, '+')) {
        auto idx = ring.find(term);
        if (!idx) throw Error(Errc::parse, "unknown variable '" + std::string(term) + "' in linear form");
        support.push_back(*idx);
    }
    try {
        return LinearForm(std::move(support), ring.size());
    } catch (const Error& e) {
        throw Error(Errc::parse, e.detail());
    }
}

std::string format_linear_form(const RingSpec& ring, const LinearForm& f) {
    std::string out;
    for (auto v : f.support()) {
        if (!out.empty()) out += '+';
        out += ring.name(v);
    }
    return out;
}

TermOrder parse_order(const RingSpec& ring, std::string_view text) {
    std::vector<std::size_t> prefix;
    if (!trim(text).empty()) {
        for (auto name : split_on(text, ',')) {
            auto idx = ring.find(name);
            if (!idx) throw Error(Errc::parse, "unknown variable '" + std::string(name) + "' in order");
            prefix.push_back(*idx);
        }
    }
    std::vector<std::size_t> precedence = prefix;
    std::vector<bool> listed(ring.size(), false);
    for (auto v : prefix) {
        if (listed[v]) throw Error(Errc::parse, "variable repeated in order");
        listed[v] = true;
    }
    for (std::size_t v = 0; v < ring.size(); ++v)
        if (!listed[v]) precedence.push_back(v);
    return TermOrder(std::move(precedence));
}

std::string format_order(const RingSpec& ring, const TermOrder& order) {
    std::string out;
    for (auto v : order.precedence()) {
        if (!out.empty()) out += ',';
        out += ring.name(v);
    }
    return out;
}

}  // namespace monoideal

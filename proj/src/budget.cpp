#include "monoideal/budget.hpp"

#include <charconv>
#include <cstdlib>
#include <string>

#include "monoideal/error.hpp"

namespace monoideal {

namespace {

std::uint64_t parse_count(std::string_view text) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
        throw Error(Errc::parse, "bad budget value '" + std::string(text) + "'");
    return value;
}

}  // namespace

Budget Budget::parse(std::string_view spec) {
    Budget b;
    if (spec.find('=') == std::string_view::npos) {
        b.witness_candidates = parse_count(spec);
        return b;
    }
    while (!spec.empty()) {
        auto comma = spec.find(',');
        auto item = spec.substr(0, comma);
        spec = comma == std::string_view::npos ? std::string_view{} : spec.substr(comma + 1);
        auto eq = item.find('=');
        if (eq == std::string_view::npos)
            throw Error(Errc::parse, "budget entry without '=': " + std::string(item));
        auto key = item.substr(0, eq);
        auto value = parse_count(item.substr(eq + 1));
        if (key == "witness") b.witness_candidates = value;
        else if (key == "pvars") b.polarized_vars = static_cast<std::size_t>(value);
        else if (key == "pairs") b.buchberger_pairs = value;
        else throw Error(Errc::parse, "unknown budget key '" + std::string(key) + "'");
    }
    return b;
}

Budget Budget::from_env() {
    const char* env = std::getenv("MONOIDEAL_BUDGET");
    if (env == nullptr || *env == '\0') return {};
    return parse(env);
}

}  // namespace monoideal

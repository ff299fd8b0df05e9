#include "monoideal/ring.hpp"

#include <cctype>

#include "monoideal/error.hpp"

namespace monoideal {

bool is_valid_variable_name(std::string_view name) noexcept {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
    for (char ch : name) {
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
    }
    return true;
}

RingSpec::RingSpec(std::vector<std::string> names) {
    if (names.empty()) throw Error(Errc::domain, "a ring needs at least one variable");
    auto data = std::make_shared<Data>();
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (!is_valid_variable_name(names[i]))
            throw Error(Errc::parse, "invalid variable name '" + names[i] + "'");
        if (!data->lookup.emplace(names[i], i).second)
            throw Error(Errc::parse, "duplicate variable name '" + names[i] + "'");
    }
    data->names = std::move(names);
    data_ = std::move(data);
}

RingSpec RingSpec::indexed(std::string_view prefix, std::size_t count, std::size_t first) {
    std::vector<std::string> names;
    names.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        names.push_back(std::string(prefix) + std::to_string(first + i));
    return RingSpec(std::move(names));
}

std::optional<std::size_t> RingSpec::find(std::string_view name) const {
    auto it = data_->lookup.find(std::string(name));
    if (it == data_->lookup.end()) return std::nullopt;
    return it->second;
}

std::size_t RingSpec::index(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw Error(Errc::domain, "unknown variable '" + std::string(name) + "'");
}

}  // namespace monoideal

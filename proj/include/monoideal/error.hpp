#pragma once

#include <stdexcept>
#include <string>

namespace monoideal {

enum class Errc {
    parse,
    domain,
    unit_ideal,
    zero_ideal,
    ring_mismatch,
    overflow,
    budget_exceeded,
    not_embedded,
    no_decomposition,
    precondition_violated,
    oracle_mismatch,
};

const char* to_string(Errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code), detail_(what) {}

    Errc code() const noexcept { return code_; }
    /// The message without the code prefix.
    const std::string& detail() const noexcept { return detail_; }

private:
    Errc code_;
    std::string detail_;
};

}  // namespace monoideal

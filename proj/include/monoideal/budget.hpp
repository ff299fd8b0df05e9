#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace monoideal {

/// Size limits for the exhaustive oracles. Exceeding one raises
/// Errc::budget_exceeded rather than running unbounded.
struct Budget {
    std::uint64_t witness_candidates = std::uint64_t{1} << 24;
    std::size_t polarized_vars = 22;
    std::uint64_t buchberger_pairs = 100000;

    /// Parses "witness=N,pvars=N,pairs=N" (any subset, any order). A bare
    /// integer sets the witness budget.
    static Budget parse(std::string_view spec);

    /// Defaults overridden by the MONOIDEAL_BUDGET environment variable.
    static Budget from_env();
};

}  // namespace monoideal

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace monoideal::cli {

enum class Status { ok = 0, verification_failed = 1, input_error = 2 };

/// Runs one command line (without the program name). Output goes to `out`,
/// diagnostics to `err`, ideal files named "-" are read from `in`.
Status run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, std::istream& in);

}  // namespace monoideal::cli

#include "monoideal/error.hpp"

namespace monoideal {

const char* to_string(Errc code) noexcept {
    switch (code) {
    case Errc::parse: return "ParseError";
    case Errc::domain: return "DomainError";
    case Errc::unit_ideal: return "UnitIdeal";
    case Errc::zero_ideal: return "ZeroIdeal";
    case Errc::ring_mismatch: return "RingMismatch";
    case Errc::overflow: return "Overflow";
    case Errc::budget_exceeded: return "BudgetExceeded";
    case Errc::not_embedded: return "NotEmbedded";
    case Errc::no_decomposition: return "NoDecomposition";
    case Errc::precondition_violated: return "PreconditionViolated";
    case Errc::oracle_mismatch: return "OracleMismatch";
    }
    return "Error";
}

}  // namespace monoideal

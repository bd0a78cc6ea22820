#include "orbitcert/error.hpp"

namespace orbitcert {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidLetter: return "InvalidLetter";
    case ErrorKind::InvalidPoint: return "InvalidPoint";
    case ErrorKind::InvalidSpec: return "InvalidSpec";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotSimple: return "NotSimple";
    case ErrorKind::NotProper: return "NotProper";
    case ErrorKind::CertificateInvalid: return "CertificateInvalid";
    case ErrorKind::OrbitIsFinite: return "OrbitIsFinite";
    case ErrorKind::BudgetTooSmall: return "BudgetTooSmall";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::MetricBudgetExceeded: return "MetricBudgetExceeded";
    case ErrorKind::WindowDisjoint: return "WindowDisjoint";
    case ErrorKind::NotFinitePerm: return "NotFinitePerm";
  }
  return "Unknown";
}

OrbitIsFiniteError::OrbitIsFiniteError(std::int64_t diameter, std::size_t orbit_size)
    : Error(ErrorKind::OrbitIsFinite,
            "orbit is finite: " + std::to_string(orbit_size) + " points, diameter " +
                std::to_string(diameter)),
      diameter_(diameter),
      orbit_size_(orbit_size) {}

NotSimpleError::NotSimpleError(std::size_t first, std::size_t second)
    : Error(ErrorKind::NotSimple, "path is not simple: prefix points " + std::to_string(first) +
                                      " and " + std::to_string(second) + " coincide"),
      first_(first),
      second_(second) {}

}  // namespace orbitcert

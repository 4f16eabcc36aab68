#include "cspin/error.hpp"

namespace cspin {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::NotPositiveDefinite: return "NotPositiveDefinite";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidSpin: return "InvalidSpin";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::ZeroMass: return "ZeroMass";
    case ErrorCode::ZeroPointOrbit: return "ZeroPointOrbit";
    case ErrorCode::DegenerateFactorization: return "DegenerateFactorization";
    case ErrorCode::OffOrbit: return "OffOrbit";
    case ErrorCode::AntipodalPoint: return "AntipodalPoint";
    case ErrorCode::OffShell: return "OffShell";
    case ErrorCode::NonPositiveEnergy: return "NonPositiveEnergy";
    case ErrorCode::NotRealMassShell: return "NotRealMassShell";
    case ErrorCode::ChartSingular: return "ChartSingular";
    case ErrorCode::CocycleNotDiagonal: return "CocycleNotDiagonal";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UsageError: return "UsageError";
  }
  return "Unknown";
}

}  // namespace cspin

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cspin {

enum class ErrorCode {
  SingularMatrix,
  NotPositiveDefinite,
  IndexOutOfRange,
  InvalidSpin,
  InvalidArgument,
  ZeroMass,
  ZeroPointOrbit,
  DegenerateFactorization,
  OffOrbit,
  AntipodalPoint,
  OffShell,
  NonPositiveEnergy,
  NotRealMassShell,
  ChartSingular,
  CocycleNotDiagonal,
  ParseError,
  UsageError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cspin

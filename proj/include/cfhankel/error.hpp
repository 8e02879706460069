#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cfh {

/// Domain failures reported by the library. The enumerator names are the
/// stable error identifiers surfaced by the CLI.
enum class Errc {
  ZeroConstantTerm,
  NonInvertibleScalar,
  ConstantTermNotOne,
  NonInvertibleLeadingScalar,
  IndexOutOfRange,
  InsufficientTerms,
  NegativePExponent,
  ZeroCoefficient,
  MultiplicityConflict,
  NotInScalarRing,
  InvalidExponent,
  UnknownName,
  MissingParameter,
  ZeroConstantDenominator,
  ParseError,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }
  std::string_view name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace cfh

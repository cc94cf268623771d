#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace sonar {

enum class Errc {
  NotPrime,
  NotOddPrime,
  NotPrimePower,
  DegreeZero,
  OrderOverflow,
  DivisionByZero,
  ZeroElement,
  LogOfZero,
  NotPrimitive,
  NotInField,
  AlphaInBaseField,
  ModulusMismatch,
  CoverageFailure,
  NotSidon,
  ANotInvertible,
  QTooSmall,
  EmptySequence,
  InvalidArgument,
  InternalInvariant,
  Io,
  Parse,
};

constexpr std::string_view errc_name(Errc e) {
  switch (e) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::NotOddPrime: return "NotOddPrime";
    case Errc::NotPrimePower: return "NotPrimePower";
    case Errc::DegreeZero: return "DegreeZero";
    case Errc::OrderOverflow: return "OrderOverflow";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::LogOfZero: return "LogOfZero";
    case Errc::NotPrimitive: return "NotPrimitive";
    case Errc::NotInField: return "NotInField";
    case Errc::AlphaInBaseField: return "AlphaInBaseField";
    case Errc::ModulusMismatch: return "ModulusMismatch";
    case Errc::CoverageFailure: return "CoverageFailure";
    case Errc::NotSidon: return "NotSidon";
    case Errc::ANotInvertible: return "ANotInvertible";
    case Errc::QTooSmall: return "QTooSmall";
    case Errc::EmptySequence: return "EmptySequence";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InternalInvariant: return "InternalInvariant";
    case Errc::Io: return "Io";
    case Errc::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every failure in the library is reported as an Error carrying a code.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace sonar

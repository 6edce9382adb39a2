#pragma once

#include <stdexcept>
#include <string>

namespace diagzeta {

/// Error codes shared by every module. The CLI prints the code name on the
/// diagnostic stream and maps validation/usage errors to exit code 2.
enum class Errc {
  NotPrime,
  DivisionByZero,
  MixedFields,
  ZeroElement,
  NotGenerator,
  LNotOddPrime,
  PNotPrime,
  ENotLOr2L,
  OrderNotEven,
  CongruenceFailure,
  PEvenWith2l,
  ZeroCoefficient,
  Unclassifiable,
  FamilyMismatch,
  BudgetExceeded,
  InexactDivision,
  NotASquare,
  TowerTooDeep,
  DeskScaleExceeded,
  ParseError,
};

const char* errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) +
                           (detail.empty() ? "" : ": " + detail)),
        code_(code) {}

  Errc code() const noexcept { return code_; }
  const char* code_name() const noexcept { return errc_name(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& detail = "") {
  throw Error(code, detail);
}

}  // namespace diagzeta

#include "diagzeta/errors.hpp"

namespace diagzeta {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::NotPrime: return "NotPrime";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::MixedFields: return "MixedFields";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::NotGenerator: return "NotGenerator";
    case Errc::LNotOddPrime: return "LNotOddPrime";
    case Errc::PNotPrime: return "PNotPrime";
    case Errc::ENotLOr2L: return "ENotLOr2L";
    case Errc::OrderNotEven: return "OrderNotEven";
    case Errc::CongruenceFailure: return "CongruenceFailure";
    case Errc::PEvenWith2l: return "PEvenWith2l";
    case Errc::ZeroCoefficient: return "ZeroCoefficient";
    case Errc::Unclassifiable: return "Unclassifiable";
    case Errc::FamilyMismatch: return "FamilyMismatch";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::InexactDivision: return "InexactDivision";
    case Errc::NotASquare: return "NotASquare";
    case Errc::TowerTooDeep: return "TowerTooDeep";
    case Errc::DeskScaleExceeded: return "DeskScaleExceeded";
    case Errc::ParseError: return "ParseError";
  }
  return "UnknownError";
}

}  // namespace diagzeta

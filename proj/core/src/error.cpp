#include "gact/error.hpp"

namespace gact {

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::InvalidGroup: return "InvalidGroup";
    case Errc::InvalidStructure: return "InvalidStructure";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::NotSurjective: return "NotSurjective";
    case Errc::NotNormal: return "NotNormal";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::CapExceeded: return "CapExceeded";
    case Errc::ContradictoryBase: return "ContradictoryBase";
    case Errc::ActionMismatchOnBase: return "ActionMismatchOnBase";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::UnknownGroupElement: return "UnknownGroupElement";
    case Errc::UnboundVariable: return "UnboundVariable";
    case Errc::SignatureMismatch: return "SignatureMismatch";
    case Errc::UnassignedVariable: return "UnassignedVariable";
    case Errc::UnsupportedSignature: return "UnsupportedSignature";
    case Errc::NotGenerating: return "NotGenerating";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::NotSubgroup: return "NotSubgroup";
    case Errc::NotInvariant: return "NotInvariant";
    case Errc::NotProperlyContained: return "NotProperlyContained";
    case Errc::SearchTooLarge: return "SearchTooLarge";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::QEBlowup: return "QEBlowup";
  }
  return "Unknown";
}

}  // namespace gact

#include "surfep/error.hpp"

namespace surfep {

std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidTable: return "InvalidTable";
    case Errc::NotAssociative: return "NotAssociative";
    case Errc::NoIdentity: return "NoIdentity";
    case Errc::NoInverse: return "NoInverse";
    case Errc::NotHomomorphism: return "NotHomomorphism";
    case Errc::InvalidAction: return "InvalidAction";
    case Errc::NotSurjective: return "NotSurjective";
    case Errc::NotSplit: return "NotSplit";
    case Errc::RelationViolated: return "RelationViolated";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::NoRepeatedPair: return "NoRepeatedPair";
    case Errc::PositionOutOfRange: return "PositionOutOfRange";
    case Errc::GenusTooSmall: return "GenusTooSmall";
    case Errc::GenusMismatch: return "GenusMismatch";
    case Errc::BetaNotSurjective: return "BetaNotSurjective";
    case Errc::BetaNRestrictionNotSurjective: return "BetaNRestrictionNotSurjective";
    case Errc::NotASolution: return "NotASolution";
    case Errc::HypothesisViolated: return "HypothesisViolated";
    case Errc::BudgetExceeded: return "BudgetExceeded";
    case Errc::ParseError: return "ParseError";
    case Errc::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(Errc code, const std::string& what, std::vector<std::int64_t> data)
    : std::runtime_error(std::string(to_string(code)) + ": " + what),
      code_(code),
      data_(std::move(data)) {}

}  // namespace surfep

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace surfep {

enum class Errc {
  InvalidTable,
  NotAssociative,
  NoIdentity,
  NoInverse,
  NotHomomorphism,
  InvalidAction,
  NotSurjective,
  NotSplit,
  RelationViolated,
  IndexOutOfRange,
  NoRepeatedPair,
  PositionOutOfRange,
  GenusTooSmall,
  GenusMismatch,
  BetaNotSurjective,
  BetaNRestrictionNotSurjective,
  NotASolution,
  HypothesisViolated,
  BudgetExceeded,
  ParseError,
  InvalidArgument,
};

std::string_view to_string(Errc code) noexcept;

// All library failures are reported through this type. `data` carries the
// numeric witness (element indices, bounds) named in the message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what, std::vector<std::int64_t> data = {});

  Errc code() const noexcept { return code_; }
  const std::vector<std::int64_t>& data() const noexcept { return data_; }

 private:
  Errc code_;
  std::vector<std::int64_t> data_;
};

}  // namespace surfep

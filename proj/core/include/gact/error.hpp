#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gact {

/// Domain error categories. The CLI reports these by name.
enum class Errc {
  InvalidArgument,
  InvalidGroup,
  InvalidStructure,
  UnknownElement,
  NotSurjective,
  NotNormal,
  BudgetExceeded,
  CapExceeded,
  ContradictoryBase,
  ActionMismatchOnBase,
  SyntaxError,
  UnknownGroupElement,
  UnboundVariable,
  SignatureMismatch,
  UnassignedVariable,
  UnsupportedSignature,
  NotGenerating,
  HypothesisViolated,
  BoundExceeded,
  NotSubgroup,
  NotInvariant,
  NotProperlyContained,
  SearchTooLarge,
  ZeroElement,
  QEBlowup,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& what)
      : Error(Errc::SyntaxError, what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace gact

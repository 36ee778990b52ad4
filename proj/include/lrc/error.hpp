#pragma once

#include <stdexcept>
#include <string>

namespace lrc {

enum class ErrorKind {
  MixedRing,
  NotDivisible,
  InexactDivision,
  Overflow,
  Parse,
  InvalidMatrix,
  UnsupportedOrder,
  IndexOutOfRange,
  NotReducedFor,
  NonAdmissibleBase,
  SizeMismatch,
  NotNested,
  NotRepetitionFree,
  TooLarge,
  HypothesisNotMet,
  InfiniteOrderMisuse,
  ResourceCap,
};

const char* to_string(ErrorKind k);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lrc

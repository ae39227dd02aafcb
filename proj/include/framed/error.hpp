#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace framed {

enum class Errc {
  Syntax,
  Format,
  LetterCount,
  MarkMismatch,
  NonSquare,
  Singular,
  IndexOutOfRange,
  SizeMismatch,
  UnknownLetter,
  NotInterlaced,
  InvalidGraph,
  InvalidTour,
  UnknownVertex,
  NoGaussCircuit,
  HasGaussianChord,
  DiagonalNotOne,
  NotSymPlus,
  PreconditionViolated,
  TooLarge,
};

std::string_view errc_name(Errc code) noexcept;

/// Single exception type for the library; `code()` says which contract was broken.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace framed

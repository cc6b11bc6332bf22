#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace diffhopf {

enum class Errc {
  DivisionByZero,
  PresentationMismatch,
  NonUnitDenominatorImage,
  AntipodeRequired,
  ZeroElement,
  BoundsExceeded,
  UnknownComodule,
  IndexOutOfRange,
  SyntaxError,
  UnknownIdentifier,
  IllegalInverse,
  FormatError,
  NotGenerated,
  InvalidArgument,
};

std::string_view errc_name(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace diffhopf

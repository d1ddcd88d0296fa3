#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tck {

enum class Errc {
  ZeroPolynomial,
  EmptyIdeal,
  InvalidSpec,
  NotArithmetic,
  GcdNotOne,
  TooSmall,
  NotIncreasing,
  NotLocalOrder,
  NotGlobalOrder,
  NotHomogeneous,
  ShapeMismatch,
  NotAComplex,
  NotMinimal,
  Parse,
  NotDivisible,
};

std::string_view to_string(Errc code);

/// Every failure raised by the library. The code identifies the contract
/// that was violated; what() carries a human-readable detail.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

/// True for the errors that mean "the curve parameters are not admissible".
inline bool is_spec_error(Errc code) {
  switch (code) {
    case Errc::InvalidSpec:
    case Errc::NotArithmetic:
    case Errc::GcdNotOne:
    case Errc::TooSmall:
    case Errc::NotIncreasing:
      return true;
    default:
      return false;
  }
}

}  // namespace tck

#pragma once

#include <ostream>
#include <string>
#include <string_view>

#include "tck/polynomial.hpp"

namespace tck {

/// Variable names of the canonical tuple: x0, x1, x2, y, and t for the
/// internal elimination variable.
std::string_view variable_name(std::size_t index);

std::string to_string(const Monomial& m);

/// Prints terms joined by +/-, each as `[coeff*]var[^exp]*...`. Terms are
/// listed in ds order (lowest degree first), so `x1^2-x0*x2`, `y^2-x0^2*x2`.
/// The zero polynomial prints as `0`.
std::string to_string(const Polynomial& f);

/// Inverse of to_string(Polynomial). Whitespace is ignored; coefficients may
/// be integers or fractions p/q. Throws Error(Errc::Parse) on bad input.
Polynomial parse_polynomial(std::string_view text);

inline std::ostream& operator<<(std::ostream& os, const Polynomial& f) { return os << to_string(f); }
inline std::ostream& operator<<(std::ostream& os, const Monomial& m) { return os << to_string(m); }

}  // namespace tck

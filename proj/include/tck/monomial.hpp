#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>

#include "tck/error.hpp"

namespace tck {

/// A power product over N variables, stored as a dense exponent vector.
///
/// Index i refers to the i-th variable of the ring's canonical tuple. For the
/// curve ring that tuple is (x0, x1, x2, y); internal elimination rings append
/// one more variable t at index 4.
///
/// The defaulted three-way comparison is plain lexicographic order on the
/// exponent vector. It is only used as the canonical storage order of
/// polynomials and as a key for containers; term orders live in BasicOrder.
template <std::size_t N>
class BasicMonomial {
 public:
  using Exponents = std::array<int, N>;
  static constexpr std::size_t kVars = N;

  BasicMonomial() { exps_.fill(0); }

  explicit BasicMonomial(const Exponents& exps) : exps_(exps) {
    for (int e : exps_) {
      if (e < 0) throw Error(Errc::InvalidSpec, "negative exponent in monomial");
    }
  }

  static BasicMonomial variable(std::size_t index, int power = 1) {
    Exponents e{};
    e[index] = power;
    return BasicMonomial(e);
  }

  int operator[](std::size_t i) const { return exps_[i]; }
  const Exponents& exponents() const { return exps_; }

  int degree() const { return std::accumulate(exps_.begin(), exps_.end(), 0); }

  bool is_one() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int e) { return e == 0; });
  }

  /// *this divides other.
  bool divides(const BasicMonomial& other) const {
    for (std::size_t i = 0; i < N; ++i) {
      if (exps_[i] > other.exps_[i]) return false;
    }
    return true;
  }

  bool coprime(const BasicMonomial& other) const {
    for (std::size_t i = 0; i < N; ++i) {
      if (exps_[i] > 0 && other.exps_[i] > 0) return false;
    }
    return true;
  }

  friend BasicMonomial operator*(const BasicMonomial& u, const BasicMonomial& v) {
    BasicMonomial r;
    for (std::size_t i = 0; i < N; ++i) r.exps_[i] = u.exps_[i] + v.exps_[i];
    return r;
  }

  /// Exact quotient; throws when v does not divide u.
  friend BasicMonomial operator/(const BasicMonomial& u, const BasicMonomial& v) {
    BasicMonomial r;
    for (std::size_t i = 0; i < N; ++i) {
      r.exps_[i] = u.exps_[i] - v.exps_[i];
      if (r.exps_[i] < 0) throw Error(Errc::NotDivisible, "monomial quotient is not exact");
    }
    return r;
  }

  friend BasicMonomial lcm(const BasicMonomial& u, const BasicMonomial& v) {
    BasicMonomial r;
    for (std::size_t i = 0; i < N; ++i) r.exps_[i] = std::max(u.exps_[i], v.exps_[i]);
    return r;
  }

  friend BasicMonomial gcd(const BasicMonomial& u, const BasicMonomial& v) {
    BasicMonomial r;
    for (std::size_t i = 0; i < N; ++i) r.exps_[i] = std::min(u.exps_[i], v.exps_[i]);
    return r;
  }

  friend auto operator<=>(const BasicMonomial&, const BasicMonomial&) = default;
  friend bool operator==(const BasicMonomial&, const BasicMonomial&) = default;

 private:
  Exponents exps_;
};

using Monomial = BasicMonomial<4>;

/// Positions of the curve variables in the canonical tuple.
namespace var {
inline constexpr std::size_t x0 = 0;
inline constexpr std::size_t x1 = 1;
inline constexpr std::size_t x2 = 2;
inline constexpr std::size_t y = 3;
}  // namespace var

}  // namespace tck

template <std::size_t N>
struct std::hash<tck::BasicMonomial<N>> {
  std::size_t operator()(const tck::BasicMonomial<N>& m) const noexcept {
    std::size_t h = 0;
    for (int e : m.exponents()) h = h * 1000003u + static_cast<std::size_t>(e);
    return h;
  }
};

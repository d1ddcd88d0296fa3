#pragma once

#include <array>
#include <string>
#include <vector>

#include "tck/grobner.hpp"
#include "tck/polynomial.hpp"

namespace tck {

/// Degrees m0 < m1 < m2 < m3 in arithmetic progression with common
/// difference d, and the decomposition m0 = 3a + b with a >= 1, b in {1,2,3}.
struct CurveSpec {
  std::array<int, 4> m{};
  int a = 0;
  int b = 0;
  int d = 0;

  friend bool operator==(const CurveSpec&, const CurveSpec&) = default;
};

/// Validates raw degrees. Errors, checked in this order: NotIncreasing
/// (also non-positive entries), NotArithmetic, TooSmall (m0 <= 3), GcdNotOne.
CurveSpec validate_spec(const std::array<long long, 4>& m);

/// Spec with m0 = 3a + b and common difference d, validated.
CurveSpec spec_from_abd(int a, int b, int d);

std::string to_string(const CurveSpec& spec);

/// The binomial generators of the curve's defining ideal.
struct GeneratorSet {
  Polynomial xi11;
  std::array<Polynomial, 2> phi;
  std::vector<Polynomial> psi;  // 2 for b = 1, 1 for b = 2, none for b = 3
  Polynomial theta;

  /// (xi11, phi0, phi1, psi..., theta).
  std::vector<Polynomial> all() const;
  std::vector<std::string> labels() const;
};

GeneratorSet curve_generators(const CurveSpec& spec);

/// Least homogeneous summands of the generators, in the same order.
std::vector<Polynomial> tangent_cone_generators(const CurveSpec& spec);

/// degrevlex with x0 as the lowest-priority variable (x1 > x2 > y > x0).
MonomialOrder cm_order();

/// degrevlex x0 > y > x1 > x2, taken literally. Reported for comparison only.
MonomialOrder cm_literal_order();

struct CMCertificate {
  MonomialOrder order = cm_order();
  std::vector<Monomial> leading_monomials;
  bool is_groebner = false;
  bool x0_free = false;
  bool conclusion = false;

  // Same check under the literal reading of the variable order.
  MonomialOrder literal_order = cm_literal_order();
  std::vector<Monomial> literal_leading_monomials;
  bool literal_is_groebner = false;
  bool literal_x0_free = false;
};

/// Cohen-Macaulay test of k[x0,x1,x2,y]/<gens>: gens must already be a
/// Groebner basis under cm_order() (completion adds nothing) and no leading
/// monomial may involve x0.
CMCertificate cohen_macaulay_certificate(const std::vector<Polynomial>& gens);

CMCertificate cohen_macaulay_certificate(const CurveSpec& spec);

/// u - v vanishes on the curve: exponent vectors of its two terms have the
/// same weighted degree under m.
bool vanishes_on_curve(const Polynomial& f, const std::array<int, 4>& m);

}  // namespace tck

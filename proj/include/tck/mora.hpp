#pragma once

#include <cstddef>
#include <vector>

#include "tck/polynomial.hpp"

namespace tck {

/// One reduction h <- h - (LT h / LT g) g of Mora's weak normal form.
struct ReductionStep {
  /// Index of g in the reducer pool. Indices below the size of the input
  /// basis refer to basis elements; larger ones refer to earlier
  /// intermediate polynomials that were appended to the pool.
  std::size_t reducer = 0;
  int reducer_ecart = 0;
  int current_ecart = 0;
  /// The current h was appended to the pool before this step because the
  /// chosen reducer had larger ecart.
  bool pooled = false;
  Polynomial before;
  Polynomial after;
};

struct NormalFormTrace {
  Polynomial input;
  std::vector<ReductionStep> steps;
  Polynomial result;
};

/// Mora's weak normal form of f with respect to G under a local degree order.
///
/// Among pool elements whose leading monomial divides LM(h), the one of
/// minimal ecart is used, ties going to the earliest inserted element. If its
/// ecart exceeds ecart(h), h joins the pool first. Stops at h = 0 or when no
/// leading monomial divides LM(h). Throws NotLocalOrder for global orders.
NormalFormTrace weak_normal_form_traced(const Polynomial& f, const std::vector<Polynomial>& G,
                                        const MonomialOrder& ord);

Polynomial weak_normal_form(const Polynomial& f, const std::vector<Polynomial>& G, const MonomialOrder& ord);

struct StandardBasis {
  std::vector<Polynomial> elements;
  MonomialOrder order;
};

/// Standard-basis completion: S-pairs processed first-in first-out, each
/// non-zero weak normal form appended to the basis.
StandardBasis standard_basis(const std::vector<Polynomial>& F, const MonomialOrder& ord);

struct PairReport {
  std::size_t i = 0, j = 0;
  Polynomial spoly;
  NormalFormTrace trace;

  bool reduces_to_zero() const { return trace.result.is_zero(); }
};

struct StandardBasisReport {
  bool verdict = false;
  std::vector<PairReport> pairs;
};

/// Checks every S-pair (i < j, in lexicographic pair order) of G and records
/// each reduction chain. The verdict is true iff all weak normal forms vanish.
StandardBasisReport is_standard_basis(const std::vector<Polynomial>& G, const MonomialOrder& ord);

}  // namespace tck

#pragma once

#include <utility>
#include <vector>

#include "tck/polynomial.hpp"

namespace tck::detail {

/// Working representation for reduction loops: terms strictly descending
/// under one fixed order, so the leading term is front() and f - c*m*g is a
/// linear merge.
template <std::size_t N>
struct OrderedPoly {
  std::vector<BasicTerm<N>> terms;

  bool empty() const { return terms.empty(); }
  const BasicTerm<N>& lead() const { return terms.front(); }
};

template <std::size_t N>
OrderedPoly<N> ordered(const BasicPolynomial<N>& f, const BasicOrder<N>& ord) {
  return {f.sorted_terms(ord)};
}

template <std::size_t N>
BasicPolynomial<N> unordered(OrderedPoly<N> f) {
  return BasicPolynomial<N>::from_terms(std::move(f.terms));
}

/// f - c * m * g, all descending under ord.
template <std::size_t N>
OrderedPoly<N> sub_scaled(const OrderedPoly<N>& f, const Rational& c, const BasicMonomial<N>& m,
                          const OrderedPoly<N>& g, const BasicOrder<N>& ord) {
  OrderedPoly<N> r;
  r.terms.reserve(f.terms.size() + g.terms.size());
  auto i = f.terms.begin();
  auto j = g.terms.begin();
  while (i != f.terms.end() || j != g.terms.end()) {
    if (j == g.terms.end()) {
      r.terms.push_back(*i++);
      continue;
    }
    BasicMonomial<N> gm = j->mono * m;
    Cmp cmp = i == f.terms.end() ? Cmp::Less : ord.compare(i->mono, gm);
    if (cmp == Cmp::Greater) {
      r.terms.push_back(*i++);
    } else if (cmp == Cmp::Less) {
      r.terms.push_back({Rational(-c * j->coeff), gm});
      ++j;
    } else {
      Rational v = i->coeff - c * j->coeff;
      if (v != 0) r.terms.push_back({std::move(v), gm});
      ++i;
      ++j;
    }
  }
  return r;
}

template <std::size_t N>
OrderedPoly<N> monic(OrderedPoly<N> f) {
  if (f.empty()) return f;
  Rational inv = 1 / f.lead().coeff;
  for (auto& t : f.terms) t.coeff *= inv;
  return f;
}

}  // namespace tck::detail

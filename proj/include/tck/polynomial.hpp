#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <utility>
#include <vector>

#include "tck/error.hpp"
#include "tck/monomial.hpp"
#include "tck/monomial_order.hpp"

namespace tck {

using Rational = mpq_class;

template <std::size_t N>
struct BasicTerm {
  Rational coeff;
  BasicMonomial<N> mono;

  friend bool operator==(const BasicTerm& a, const BasicTerm& b) {
    return a.mono == b.mono && a.coeff == b.coeff;
  }
};

/// Sparse polynomial with exact rational coefficients.
///
/// Terms are kept in one fixed internal order (descending raw lexicographic
/// order of exponent vectors) no matter which term order the caller works
/// with, so equality is plain term-list equality. Term-order views are
/// produced on demand by leading_term() and sorted_terms().
template <std::size_t N>
class BasicPolynomial {
 public:
  using Mono = BasicMonomial<N>;
  using Term = BasicTerm<N>;

  BasicPolynomial() = default;

  BasicPolynomial(Rational c)  // NOLINT: constants convert implicitly
  {
    c.canonicalize();
    if (c != 0) terms_.push_back({std::move(c), Mono()});
  }
  BasicPolynomial(int c) : BasicPolynomial(Rational(c)) {}

  BasicPolynomial(const Mono& m, Rational c = 1) {
    c.canonicalize();
    if (c != 0) terms_.push_back({std::move(c), m});
  }

  /// Builds from arbitrary terms: merges duplicates and drops zeros.
  static BasicPolynomial from_terms(std::vector<Term> terms) {
    BasicPolynomial p;
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  static BasicPolynomial variable(std::size_t index, int power = 1) {
    return BasicPolynomial(Mono::variable(index, power));
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }

  /// Maximal total degree of a term; -1 for the zero polynomial.
  int degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.mono.degree());
    return d;
  }

  /// Minimal total degree of a term; -1 for the zero polynomial.
  int min_degree() const {
    if (terms_.empty()) return -1;
    int d = terms_[0].mono.degree();
    for (const auto& t : terms_) d = std::min(d, t.mono.degree());
    return d;
  }

  bool is_homogeneous() const { return degree() == min_degree(); }

  Rational coefficient(const Mono& m) const {
    auto it = find(m);
    return it == terms_.end() ? Rational(0) : it->coeff;
  }

  /// Terms sorted strictly descending under `ord`.
  std::vector<Term> sorted_terms(const BasicOrder<N>& ord) const {
    std::vector<Term> out = terms_;
    std::sort(out.begin(), out.end(),
              [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
    return out;
  }

  BasicPolynomial operator-() const {
    BasicPolynomial r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend BasicPolynomial operator+(const BasicPolynomial& f, const BasicPolynomial& g) {
    return merge(f, g, 1);
  }
  friend BasicPolynomial operator-(const BasicPolynomial& f, const BasicPolynomial& g) {
    return merge(f, g, -1);
  }

  friend BasicPolynomial operator*(const BasicPolynomial& f, const BasicPolynomial& g) {
    if (f.is_zero() || g.is_zero()) return {};
    std::vector<Term> prod;
    prod.reserve(f.size() * g.size());
    for (const auto& a : f.terms_) {
      for (const auto& b : g.terms_) prod.push_back({a.coeff * b.coeff, a.mono * b.mono});
    }
    return from_terms(std::move(prod));
  }

  /// c * m * f; keeps canonical order without re-sorting (multiplication by a
  /// monomial preserves lexicographic order).
  BasicPolynomial scaled(const Rational& c, const Mono& m) const {
    BasicPolynomial r;
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.coeff * c, t.mono * m});
    return r;
  }

  BasicPolynomial& operator+=(const BasicPolynomial& g) { return *this = *this + g; }
  BasicPolynomial& operator-=(const BasicPolynomial& g) { return *this = *this - g; }
  BasicPolynomial& operator*=(const BasicPolynomial& g) { return *this = *this * g; }

  friend bool operator==(const BasicPolynomial&, const BasicPolynomial&) = default;

 private:
  static bool canon_before(const Mono& a, const Mono& b) { return a > b; }

  typename std::vector<Term>::const_iterator find(const Mono& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Mono& key) { return canon_before(t.mono, key); });
    return (it != terms_.end() && it->mono == m) ? it : terms_.end();
  }

  void normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return canon_before(a.mono, b.mono); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      t.coeff.canonicalize();
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coeff += t.coeff;
      } else {
        out.push_back(std::move(t));
      }
    }
    std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
    terms_ = std::move(out);
  }

  static BasicPolynomial merge(const BasicPolynomial& f, const BasicPolynomial& g, int sign) {
    BasicPolynomial r;
    r.terms_.reserve(f.size() + g.size());
    auto i = f.terms_.begin(), j = g.terms_.begin();
    while (i != f.terms_.end() || j != g.terms_.end()) {
      if (j == g.terms_.end() || (i != f.terms_.end() && canon_before(i->mono, j->mono))) {
        r.terms_.push_back(*i++);
      } else if (i == f.terms_.end() || canon_before(j->mono, i->mono)) {
        r.terms_.push_back({sign > 0 ? j->coeff : Rational(-j->coeff), j->mono});
        ++j;
      } else {
        Rational c = sign > 0 ? Rational(i->coeff + j->coeff) : Rational(i->coeff - j->coeff);
        if (c != 0) r.terms_.push_back({std::move(c), i->mono});
        ++i;
        ++j;
      }
    }
    return r;
  }

  std::vector<Term> terms_;
};

using Term = BasicTerm<4>;
using Polynomial = BasicPolynomial<4>;

template <std::size_t N>
BasicPolynomial<N> operator*(const Rational& c, const BasicPolynomial<N>& f) {
  return f.scaled(c, BasicMonomial<N>());
}

// --- order-dependent operations -------------------------------------------

/// Maximal term of f under ord. Throws ZeroPolynomial on f = 0.
template <std::size_t N>
BasicTerm<N> leading_term(const BasicPolynomial<N>& f, const BasicOrder<N>& ord) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "leading term of the zero polynomial");
  const auto& ts = f.terms();
  auto best = ts.begin();
  for (auto it = ts.begin() + 1; it != ts.end(); ++it) {
    if (ord.greater(it->mono, best->mono)) best = it;
  }
  return *best;
}

template <std::size_t N>
BasicMonomial<N> leading_monomial(const BasicPolynomial<N>& f, const BasicOrder<N>& ord) {
  return leading_term(f, ord).mono;
}

/// deg(f) - deg(LM(f)).
template <std::size_t N>
int ecart(const BasicPolynomial<N>& f, const BasicOrder<N>& ord) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "ecart of the zero polynomial");
  return f.degree() - leading_monomial(f, ord).degree();
}

/// (L / LT f) * f - (L / LT g) * g with L = lcm(LM f, LM g).
template <std::size_t N>
BasicPolynomial<N> s_polynomial(const BasicPolynomial<N>& f, const BasicPolynomial<N>& g,
                                const BasicOrder<N>& ord) {
  if (f.is_zero() || g.is_zero()) throw Error(Errc::ZeroPolynomial, "S-polynomial of zero");
  auto lf = leading_term(f, ord);
  auto lg = leading_term(g, ord);
  auto l = lcm(lf.mono, lg.mono);
  return f.scaled(Rational(1 / lf.coeff), l / lf.mono) - g.scaled(Rational(1 / lg.coeff), l / lg.mono);
}

/// Sum of the terms of minimal total degree.
template <std::size_t N>
BasicPolynomial<N> least_homogeneous_form(const BasicPolynomial<N>& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "least form of the zero polynomial");
  int d = f.min_degree();
  std::vector<BasicTerm<N>> keep;
  for (const auto& t : f.terms()) {
    if (t.mono.degree() == d) keep.push_back(t);
  }
  return BasicPolynomial<N>::from_terms(std::move(keep));
}

/// f divided by its leading coefficient under ord (zero stays zero).
template <std::size_t N>
BasicPolynomial<N> make_monic(const BasicPolynomial<N>& f, const BasicOrder<N>& ord) {
  if (f.is_zero()) return f;
  return f.scaled(Rational(1 / leading_term(f, ord).coeff), BasicMonomial<N>());
}

}  // namespace tck

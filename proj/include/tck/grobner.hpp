#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <set>
#include <utility>
#include <vector>

#include "tck/detail/ordered_poly.hpp"
#include "tck/error.hpp"
#include "tck/polynomial.hpp"

namespace tck {

/// Generators of an ideal together with the global order they refer to.
/// When `reduced` is set the generators form the reduced Groebner basis:
/// monic, sorted by descending leading monomial, and no leading monomial
/// divides a term of another element.
template <std::size_t N>
struct BasicIdealBasis {
  std::vector<BasicPolynomial<N>> generators;
  BasicOrder<N> order;
  bool reduced = false;

  std::vector<BasicMonomial<N>> leading_monomials() const {
    std::vector<BasicMonomial<N>> out;
    for (const auto& g : generators) out.push_back(leading_monomial(g, order));
    return out;
  }
};

using IdealBasis = BasicIdealBasis<4>;

namespace detail {

template <std::size_t N>
void require_global(const BasicOrder<N>& ord) {
  if (!ord.is_global()) throw Error(Errc::NotGlobalOrder, "operation needs a global order");
}

/// Full reduction of p by `basis` (all ordered under ord).
template <std::size_t N>
OrderedPoly<N> reduce_full(OrderedPoly<N> p, const std::vector<OrderedPoly<N>>& basis,
                           const BasicOrder<N>& ord, std::size_t skip = static_cast<std::size_t>(-1)) {
  OrderedPoly<N> rem;
  while (!p.empty()) {
    const auto& lt = p.lead();
    bool reduced = false;
    for (std::size_t k = 0; k < basis.size(); ++k) {
      if (k == skip || basis[k].empty()) continue;
      const auto& gl = basis[k].lead();
      if (gl.mono.divides(lt.mono)) {
        p = sub_scaled(p, Rational(lt.coeff / gl.coeff), lt.mono / gl.mono, basis[k], ord);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.terms.push_back(std::move(p.terms.front()));
      p.terms.erase(p.terms.begin());
    }
  }
  return rem;
}

}  // namespace detail

/// Remainder of the multivariate division of f by `basis` under the global
/// order ord: no term of the result is divisible by a leading monomial of the
/// basis. Zero iff f is in the ideal when the basis is a Groebner basis.
template <std::size_t N>
BasicPolynomial<N> normal_form_global(const BasicPolynomial<N>& f, const std::vector<BasicPolynomial<N>>& basis,
                                      const BasicOrder<N>& ord) {
  detail::require_global(ord);
  std::vector<detail::OrderedPoly<N>> b;
  for (const auto& g : basis) {
    if (!g.is_zero()) b.push_back(detail::ordered(g, ord));
  }
  return detail::unordered(detail::reduce_full(detail::ordered(f, ord), b, ord));
}

template <std::size_t N>
BasicPolynomial<N> normal_form_global(const BasicPolynomial<N>& f, const BasicIdealBasis<N>& basis) {
  return normal_form_global(f, basis.generators, basis.order);
}

/// Reduced Groebner basis of <F> under a global order.
///
/// Normal selection strategy (smallest lcm degree first, ties by pair age)
/// with Buchberger's coprime and chain criteria. Throws EmptyIdeal when every
/// input is zero.
template <std::size_t N>
BasicIdealBasis<N> buchberger(const std::vector<BasicPolynomial<N>>& F, const BasicOrder<N>& ord) {
  using detail::OrderedPoly;
  detail::require_global(ord);

  std::vector<OrderedPoly<N>> G;
  struct Pair {
    std::size_t i, j;
    BasicMonomial<N> lcm;
    std::size_t age;
  };
  std::vector<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  std::size_t age = 0;

  auto add = [&](OrderedPoly<N> h) {
    h = detail::monic(std::move(h));
    std::size_t k = G.size();
    for (std::size_t i = 0; i < k; ++i) {
      queue.push_back({i, k, lcm(G[i].lead().mono, h.lead().mono), age++});
      pending.emplace(i, k);
    }
    G.push_back(std::move(h));
  };

  for (const auto& f : F) {
    if (f.is_zero()) continue;
    auto r = detail::reduce_full(detail::ordered(f, ord), G, ord);
    if (!r.empty()) add(std::move(r));
  }
  if (G.empty()) throw Error(Errc::EmptyIdeal, "all generators are zero");

  while (!queue.empty()) {
    auto best = std::min_element(queue.begin(), queue.end(), [](const Pair& a, const Pair& b) {
      int da = a.lcm.degree(), db = b.lcm.degree();
      return da != db ? da < db : a.age < b.age;
    });
    Pair p = *best;
    queue.erase(best);
    pending.erase({p.i, p.j});

    const auto& li = G[p.i].lead().mono;
    const auto& lj = G[p.j].lead().mono;
    if (li.coprime(lj)) continue;

    bool chain = false;
    for (std::size_t l = 0; l < G.size() && !chain; ++l) {
      if (l == p.i || l == p.j || !G[l].lead().mono.divides(p.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      chain = !pending.count(key(p.i, l)) && !pending.count(key(p.j, l));
    }
    if (chain) continue;

    const auto& gi = G[p.i];
    const auto& gj = G[p.j];
    auto s = detail::sub_scaled(OrderedPoly<N>{}, Rational(-1 / gi.lead().coeff), p.lcm / li, gi, ord);
    s = detail::sub_scaled(s, Rational(1 / gj.lead().coeff), p.lcm / lj, gj, ord);
    auto r = detail::reduce_full(std::move(s), G, ord);
    if (!r.empty()) add(std::move(r));
  }

  // Minimalize: drop elements whose leading monomial is a multiple of another's.
  std::vector<OrderedPoly<N>> minimal;
  for (std::size_t i = 0; i < G.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
      if (i == j) continue;
      const auto& mi = G[i].lead().mono;
      const auto& mj = G[j].lead().mono;
      redundant = mj.divides(mi) && (mj != mi || j < i);
    }
    if (!redundant) minimal.push_back(G[i]);
  }
  // Interreduce tails.
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    minimal[i] = detail::monic(detail::reduce_full(minimal[i], minimal, ord, i));
  }
  std::sort(minimal.begin(), minimal.end(), [&](const OrderedPoly<N>& a, const OrderedPoly<N>& b) {
    return ord.greater(a.lead().mono, b.lead().mono);
  });

  BasicIdealBasis<N> out{{}, ord, true};
  for (auto& g : minimal) out.generators.push_back(detail::unordered(std::move(g)));
  return out;
}

/// f is in the ideal generated by the (Groebner) basis.
template <std::size_t N>
bool ideal_contains(const BasicIdealBasis<N>& basis, const BasicPolynomial<N>& f) {
  return normal_form_global(f, basis).is_zero();
}

/// Whether <F1> = <F2>, decided by comparing reduced Groebner bases.
template <std::size_t N>
bool ideal_equal(const std::vector<BasicPolynomial<N>>& F1, const std::vector<BasicPolynomial<N>>& F2,
                 const BasicOrder<N>& ord) {
  detail::require_global(ord);
  auto is_zero_ideal = [](const std::vector<BasicPolynomial<N>>& F) {
    return std::all_of(F.begin(), F.end(), [](const auto& f) { return f.is_zero(); });
  };
  bool z1 = is_zero_ideal(F1), z2 = is_zero_ideal(F2);
  if (z1 || z2) return z1 == z2;
  return buchberger(F1, ord).generators == buchberger(F2, ord).generators;
}

// --- elimination -------------------------------------------------------------

/// Copy of f in the ring with one extra variable appended (index N).
template <std::size_t N>
BasicPolynomial<N + 1> lift(const BasicPolynomial<N>& f) {
  std::vector<BasicTerm<N + 1>> ts;
  for (const auto& t : f.terms()) {
    std::array<int, N + 1> e{};
    for (std::size_t i = 0; i < N; ++i) e[i] = t.mono[i];
    ts.push_back({t.coeff, BasicMonomial<N + 1>(e)});
  }
  return BasicPolynomial<N + 1>::from_terms(std::move(ts));
}

/// Inverse of lift; throws if f involves the extra variable.
template <std::size_t N>
BasicPolynomial<N> project(const BasicPolynomial<N + 1>& f) {
  std::vector<BasicTerm<N>> ts;
  for (const auto& t : f.terms()) {
    if (t.mono[N] != 0) throw Error(Errc::InvalidSpec, "projection of a polynomial involving t");
    std::array<int, N> e{};
    for (std::size_t i = 0; i < N; ++i) e[i] = t.mono[i];
    ts.push_back({t.coeff, BasicMonomial<N>(e)});
  }
  return BasicPolynomial<N>::from_terms(std::move(ts));
}

/// Block order on N+1 variables: t (index N) in its own leading block, then
/// degrevlex on the original variables in the priority of `inner`.
template <std::size_t N>
BasicOrder<N + 1> elimination_order(const BasicOrder<N>& inner) {
  std::array<int, N + 1> pri{};
  pri[0] = static_cast<int>(N);
  for (std::size_t k = 0; k < N; ++k) pri[k + 1] = inner.priority()[k];
  return BasicOrder<N + 1>(OrderKind::DegRevLex, pri, 1);
}

/// Generators of <F> ∩ k[x_0..x_{N-1}] for F in N+1 variables, the last being
/// the variable to eliminate.
template <std::size_t N>
std::vector<BasicPolynomial<N>> eliminate_last(const std::vector<BasicPolynomial<N + 1>>& F,
                                               const BasicOrder<N>& inner) {
  auto gb = buchberger(F, elimination_order(inner));
  std::vector<BasicPolynomial<N>> out;
  for (const auto& g : gb.generators) {
    bool has_t = std::any_of(g.terms().begin(), g.terms().end(), [](const auto& t) { return t.mono[N] != 0; });
    if (!has_t) out.push_back(project<N>(g));
  }
  return out;
}

/// Exact quotient h / f; throws NotDivisible if f does not divide h.
template <std::size_t N>
BasicPolynomial<N> divide_exact(const BasicPolynomial<N>& h, const BasicPolynomial<N>& f, const BasicOrder<N>& ord) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "division by zero polynomial");
  auto p = detail::ordered(h, ord);
  auto fo = detail::ordered(f, ord);
  std::vector<BasicTerm<N>> q;
  while (!p.empty()) {
    const auto& lt = p.lead();
    if (!fo.lead().mono.divides(lt.mono)) throw Error(Errc::NotDivisible, "polynomial division is not exact");
    BasicTerm<N> t{Rational(lt.coeff / fo.lead().coeff), lt.mono / fo.lead().mono};
    p = detail::sub_scaled(p, t.coeff, t.mono, fo, ord);
    q.push_back(std::move(t));
  }
  return BasicPolynomial<N>::from_terms(std::move(q));
}

/// Groebner basis of (<B> : f), via <B> ∩ <f> = (t<B> + (1-t)<f>) ∩ k[x],
/// then division of each generator by f.
template <std::size_t N>
BasicIdealBasis<N> ideal_quotient(const BasicIdealBasis<N>& B, const BasicPolynomial<N>& f) {
  if (f.is_zero()) throw Error(Errc::ZeroPolynomial, "ideal quotient by zero");
  detail::require_global(B.order);
  const auto t = BasicPolynomial<N + 1>::variable(N);
  std::vector<BasicPolynomial<N + 1>> F;
  for (const auto& g : B.generators) F.push_back(t * lift(g));
  F.push_back((BasicPolynomial<N + 1>(1) - t) * lift(f));
  auto meet = eliminate_last<N>(F, B.order);
  std::vector<BasicPolynomial<N>> quot;
  for (const auto& h : meet) quot.push_back(divide_exact(h, f, B.order));
  return buchberger(quot, B.order);
}

/// Kernel of x_i -> t^{m_i}: reduced Groebner basis under the default global
/// order. Requires m strictly increasing, positive, with gcd 1.
IdealBasis toric_ideal(const std::array<int, 4>& m);

}  // namespace tck

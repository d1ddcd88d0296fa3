#include "tck/mora.hpp"

#include <algorithm>
#include <deque>
#include <utility>

#include "tck/detail/ordered_poly.hpp"

namespace tck {

namespace {

using detail::OrderedPoly;

void require_local(const MonomialOrder& ord) {
  if (!ord.is_local()) throw Error(Errc::NotLocalOrder, "Mora normal form needs a local order");
}

int ordered_ecart(const OrderedPoly<4>& f) {
  int d = 0;
  for (const auto& t : f.terms) d = std::max(d, t.mono.degree());
  return d - f.lead().mono.degree();
}

struct PoolEntry {
  OrderedPoly<4> poly;
  int ecart;
};

}  // namespace

NormalFormTrace weak_normal_form_traced(const Polynomial& f, const std::vector<Polynomial>& G,
                                        const MonomialOrder& ord) {
  require_local(ord);
  std::vector<PoolEntry> pool;
  pool.reserve(G.size());
  for (const auto& g : G) {
    if (g.is_zero()) throw Error(Errc::ZeroPolynomial, "zero element in reducer set");
    auto o = detail::ordered(g, ord);
    int e = ordered_ecart(o);
    pool.push_back({std::move(o), e});
  }

  NormalFormTrace trace{f, {}, {}};
  auto h = detail::ordered(f, ord);
  while (!h.empty()) {
    const auto& lm = h.lead().mono;
    std::size_t best = pool.size();
    for (std::size_t k = 0; k < pool.size(); ++k) {
      if (!pool[k].poly.lead().mono.divides(lm)) continue;
      if (best == pool.size() || pool[k].ecart < pool[best].ecart) best = k;
    }
    if (best == pool.size()) break;

    ReductionStep step;
    step.reducer = best;
    step.reducer_ecart = pool[best].ecart;
    step.current_ecart = ordered_ecart(h);
    step.before = detail::unordered(h);
    if (step.reducer_ecart > step.current_ecart) {
      pool.push_back({h, step.current_ecart});
      step.pooled = true;
    }
    const auto& g = pool[best].poly;
    h = detail::sub_scaled(h, Rational(h.lead().coeff / g.lead().coeff), h.lead().mono / g.lead().mono, g, ord);
    step.after = detail::unordered(h);
    trace.steps.push_back(std::move(step));
  }
  trace.result = detail::unordered(std::move(h));
  return trace;
}

Polynomial weak_normal_form(const Polynomial& f, const std::vector<Polynomial>& G, const MonomialOrder& ord) {
  return weak_normal_form_traced(f, G, ord).result;
}

StandardBasis standard_basis(const std::vector<Polynomial>& F, const MonomialOrder& ord) {
  require_local(ord);
  StandardBasis sb{{}, ord};
  for (const auto& f : F) {
    if (!f.is_zero()) sb.elements.push_back(f);
  }
  if (sb.elements.empty()) throw Error(Errc::EmptyIdeal, "all generators are zero");

  std::deque<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t j = 1; j < sb.elements.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  while (!pairs.empty()) {
    auto [i, j] = pairs.front();
    pairs.pop_front();
    auto s = s_polynomial(sb.elements[i], sb.elements[j], ord);
    if (s.is_zero()) continue;
    auto h = weak_normal_form(s, sb.elements, ord);
    if (h.is_zero()) continue;
    std::size_t k = sb.elements.size();
    sb.elements.push_back(std::move(h));
    for (std::size_t a = 0; a < k; ++a) pairs.emplace_back(a, k);
  }
  return sb;
}

StandardBasisReport is_standard_basis(const std::vector<Polynomial>& G, const MonomialOrder& ord) {
  require_local(ord);
  StandardBasisReport report;
  report.verdict = true;
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      PairReport pr;
      pr.i = i;
      pr.j = j;
      pr.spoly = s_polynomial(G[i], G[j], ord);
      pr.trace = weak_normal_form_traced(pr.spoly, G, ord);
      report.verdict = report.verdict && pr.reduces_to_zero();
      report.pairs.push_back(std::move(pr));
    }
  }
  return report;
}

}  // namespace tck

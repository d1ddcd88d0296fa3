#include <algorithm>
#include <map>
#include <utility>

#include "tck/grobner.hpp"
#include "tck/resolution.hpp"

namespace tck {

namespace {

// Hard cap on syzygy steps; sorted Schreyer frames over 4 variables stop
// after at most 4.
constexpr std::size_t kMaxLevels = 8;

struct ModuleTerm {
  Rational coeff;
  Monomial mono;
  std::size_t comp;
};

/// Element of a free module, terms strictly descending in the frame's order.
using ModuleVec = std::vector<ModuleTerm>;

/// Basis of one free module F_k of the frame with its induced Schreyer order.
/// The basis element e_i maps to a vector whose leading term is
/// lead_i * e_{parent}; `total` is the product of those leading monomials
/// down to F_0, and `chain` the list of component indices from F_1 up to
/// the element itself.
struct Frame {
  std::vector<Monomial> total;
  std::vector<std::vector<std::size_t>> chain;
};

/// m*e_i vs n*e_j: compare m*total_i with n*total_j; on a tie the element with
/// lexicographically smaller chain is larger.
class FrameOrder {
 public:
  FrameOrder(const MonomialOrder& ord, const Frame& frame) : ord_(ord), frame_(frame) {}

  Cmp compare(const Monomial& m, std::size_t i, const Monomial& n, std::size_t j) const {
    Cmp c = ord_.compare(m * frame_.total[i], n * frame_.total[j]);
    if (c != Cmp::Equal) return c;
    const auto& ci = frame_.chain[i];
    const auto& cj = frame_.chain[j];
    if (ci == cj) return Cmp::Equal;
    return std::lexicographical_compare(ci.begin(), ci.end(), cj.begin(), cj.end()) ? Cmp::Greater : Cmp::Less;
  }

  bool greater(const ModuleTerm& a, const ModuleTerm& b) const {
    return compare(a.mono, a.comp, b.mono, b.comp) == Cmp::Greater;
  }

 private:
  const MonomialOrder& ord_;
  const Frame& frame_;
};

ModuleVec normalize(std::vector<ModuleTerm> terms, const FrameOrder& order) {
  std::map<std::pair<std::size_t, Monomial>, Rational> acc;
  for (auto& t : terms) acc[{t.comp, t.mono}] += t.coeff;
  ModuleVec out;
  for (auto& [key, c] : acc) {
    if (c != 0) out.push_back({c, key.second, key.first});
  }
  std::sort(out.begin(), out.end(), [&](const ModuleTerm& a, const ModuleTerm& b) { return order.greater(a, b); });
  return out;
}

/// f - c * m * g.
ModuleVec sub_scaled(const ModuleVec& f, const Rational& c, const Monomial& m, const ModuleVec& g,
                     const FrameOrder& order) {
  ModuleVec r;
  r.reserve(f.size() + g.size());
  auto i = f.begin();
  auto j = g.begin();
  while (i != f.end() || j != g.end()) {
    if (j == g.end()) {
      r.push_back(*i++);
      continue;
    }
    Monomial gm = j->mono * m;
    Cmp cmp = i == f.end() ? Cmp::Less : order.compare(i->mono, i->comp, gm, j->comp);
    if (cmp == Cmp::Greater) {
      r.push_back(*i++);
    } else if (cmp == Cmp::Less) {
      r.push_back({Rational(-c * j->coeff), gm, j->comp});
      ++j;
    } else {
      Rational v = i->coeff - c * j->coeff;
      if (v != 0) r.push_back({std::move(v), gm, j->comp});
      ++i;
      ++j;
    }
  }
  return r;
}

/// Syzygies of the elements `gens` (a Groebner basis of the submodule they
/// generate, in the frame `prev`), as elements of the next free module.
/// Only pairs whose lead monomials are minimal generators of each colon
/// ideal are used; the result is a Groebner basis of the syzygy module.
std::vector<ModuleVec> syzygies(const std::vector<ModuleVec>& gens, const FrameOrder& prev_order,
                                const FrameOrder& next_order) {
  std::vector<ModuleVec> out;
  const std::size_t n = gens.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& li = gens[i].front();
    std::vector<std::pair<Monomial, std::size_t>> cands;
    for (std::size_t j = i + 1; j < n; ++j) {
      const auto& lj = gens[j].front();
      if (lj.comp != li.comp) continue;
      cands.emplace_back(lcm(li.mono, lj.mono) / li.mono, j);
    }
    for (std::size_t a = 0; a < cands.size(); ++a) {
      bool minimal = true;
      for (std::size_t b = 0; b < cands.size() && minimal; ++b) {
        if (a == b) continue;
        const auto& ma = cands[a].first;
        const auto& mb = cands[b].first;
        if (mb.divides(ma) && (mb != ma || b < a)) minimal = false;
      }
      if (!minimal) continue;

      const std::size_t j = cands[a].second;
      const auto& lj = gens[j].front();
      const Monomial l = lcm(li.mono, lj.mono);
      const Rational ci = 1 / li.coeff;
      const Rational cj = 1 / lj.coeff;

      std::vector<ModuleTerm> syz{{ci, l / li.mono, i}, {Rational(-cj), l / lj.mono, j}};
      ModuleVec s = sub_scaled(ModuleVec{}, Rational(-ci), l / li.mono, gens[i], prev_order);
      s = sub_scaled(s, cj, l / lj.mono, gens[j], prev_order);
      while (!s.empty()) {
        const auto lt = s.front();
        std::size_t u = 0;
        for (; u < n; ++u) {
          const auto& lu = gens[u].front();
          if (lu.comp == lt.comp && lu.mono.divides(lt.mono)) break;
        }
        if (u == n) throw Error(Errc::NotAComplex, "Schreyer frame: S-vector does not reduce to zero");
        const auto& lu = gens[u].front();
        Rational q = lt.coeff / lu.coeff;
        Monomial qm = lt.mono / lu.mono;
        s = sub_scaled(s, q, qm, gens[u], prev_order);
        syz.push_back({Rational(-q), qm, u});
      }
      out.push_back(normalize(std::move(syz), next_order));
    }
  }
  return out;
}

}  // namespace

FreeComplex schreyer_resolution_raw(const std::vector<Polynomial>& gens, const MonomialOrder& ord) {
  if (!ord.is_global()) throw Error(Errc::NotGlobalOrder, "Schreyer resolution needs a global order");
  for (const auto& g : gens) {
    if (!g.is_zero() && !g.is_homogeneous()) throw Error(Errc::NotHomogeneous, "generator is not homogeneous");
  }
  const auto gb = buchberger(gens, ord);
  const MonomialOrder lex(OrderKind::Lex, ord.priority());

  Frame prev{{Monomial()}, {{}}};
  std::vector<ModuleVec> elems;
  {
    FrameOrder order0(ord, prev);
    for (const auto& g : gb.generators) {
      std::vector<ModuleTerm> ts;
      for (const auto& t : g.terms()) ts.push_back({t.coeff, t.mono, 0});
      elems.push_back(normalize(std::move(ts), order0));
    }
  }

  FreeComplex c;
  c.levels.push_back({0});
  for (std::size_t level = 1; !elems.empty(); ++level) {
    if (level > kMaxLevels) throw Error(Errc::NotAComplex, "Schreyer frame did not terminate");
    // Sort so that within each component the lead monomials are lex-descending;
    // this keeps the frame length bounded by the number of variables.
    std::stable_sort(elems.begin(), elems.end(), [&](const ModuleVec& a, const ModuleVec& b) {
      if (a.front().comp != b.front().comp) return a.front().comp < b.front().comp;
      return lex.greater(a.front().mono, b.front().mono);
    });

    Frame next;
    std::vector<int> degrees;
    PolyMatrix map(prev.total.size(), elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) {
      const auto& lt = elems[i].front();
      next.total.push_back(lt.mono * prev.total[lt.comp]);
      auto ch = prev.chain[lt.comp];
      ch.push_back(i);
      next.chain.push_back(std::move(ch));
      degrees.push_back(next.total.back().degree());
      for (const auto& t : elems[i]) map(t.comp, i) += Polynomial(t.mono, t.coeff);
    }
    c.levels.push_back(degrees);
    c.maps.push_back(std::move(map));

    FrameOrder prev_order(ord, prev);
    FrameOrder next_order(ord, next);
    auto syz = syzygies(elems, prev_order, next_order);
    prev = std::move(next);
    elems = std::move(syz);
  }
  return c;
}

FreeComplex minimalize(FreeComplex c) {
  check_shapes(c);
  while (true) {
    bool changed = false;
    for (std::size_t k = 0; k < c.maps.size() && !changed; ++k) {
      auto& m = c.maps[k];
      for (std::size_t i = 0; i < m.rows() && !changed; ++i) {
        for (std::size_t j = 0; j < m.cols() && !changed; ++j) {
          const auto& e = m(i, j);
          if (e.is_zero() || !e.is_constant()) continue;
          // Map k+1 goes F_{k+1} -> F_k: cancel e_i of F_k against e_j of F_{k+1}.
          const Rational unit = e.terms().front().coeff;
          PolyMatrix reduced(m.rows() - 1, m.cols() - 1);
          for (std::size_t r = 0, rr = 0; r < m.rows(); ++r) {
            if (r == i) continue;
            for (std::size_t l = 0, ll = 0; l < m.cols(); ++l) {
              if (l == j) continue;
              Polynomial v = m(r, l);
              if (!m(r, j).is_zero() && !m(i, l).is_zero()) v -= m(r, j) * m(i, l).scaled(Rational(1 / unit), {});
              reduced(rr, ll++) = std::move(v);
            }
            ++rr;
          }
          if (k + 1 < c.maps.size()) c.maps[k + 1] = c.maps[k + 1].without_row(j);
          if (k > 0) c.maps[k - 1] = c.maps[k - 1].without_col(i);
          c.maps[k] = std::move(reduced);
          c.levels[k].erase(c.levels[k].begin() + static_cast<std::ptrdiff_t>(i));
          c.levels[k + 1].erase(c.levels[k + 1].begin() + static_cast<std::ptrdiff_t>(j));
          changed = true;
        }
      }
    }
    if (!changed) break;
  }
  while (!c.maps.empty() && c.levels.back().empty()) {
    c.levels.pop_back();
    c.maps.pop_back();
  }
  return c;
}

FreeComplex schreyer_resolution(const std::vector<Polynomial>& gens, const MonomialOrder& ord) {
  return minimalize(schreyer_resolution_raw(gens, ord));
}

}  // namespace tck

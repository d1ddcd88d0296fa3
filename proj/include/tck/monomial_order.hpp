#pragma once

#include <array>
#include <cstddef>
#include <numeric>
#include <string>

#include "tck/error.hpp"
#include "tck/monomial.hpp"

namespace tck {

enum class OrderKind { Lex, DegLex, DegRevLex, NegDegRevLex };

/// Result of comparing two monomials under a term order.
enum class Cmp { Less, Equal, Greater };

inline Cmp flip(Cmp c) {
  return c == Cmp::Less ? Cmp::Greater : (c == Cmp::Greater ? Cmp::Less : Cmp::Equal);
}

/// A multiplicative total order on monomials.
///
/// `priority` lists variable indices from highest to lowest priority, so the
/// same polynomial can be viewed under orders that rank the variables
/// differently. For the reverse-lexicographic kinds, ties in degree are broken
/// by scanning from the lowest-priority variable: the first position where the
/// exponents differ decides, and the smaller exponent is the larger monomial.
///
/// NegDegRevLex is the local "ds" order: smaller total degree is larger, so
/// 1 > u for every non-constant u.
///
/// A positive `block` turns DegRevLex into a two-block elimination order: the
/// first `block` priority variables are compared by degrevlex first, and only
/// on a tie are the remaining variables compared by degrevlex.
template <std::size_t N>
class BasicOrder {
 public:
  using Priority = std::array<int, N>;

  explicit BasicOrder(OrderKind kind = OrderKind::DegRevLex)
      : BasicOrder(kind, identity()) {}

  BasicOrder(OrderKind kind, const Priority& priority, int block = 0)
      : kind_(kind), priority_(priority), block_(block) {
    std::array<bool, N> seen{};
    for (int p : priority_) {
      if (p < 0 || p >= static_cast<int>(N) || seen[p]) {
        throw Error(Errc::InvalidSpec, "variable priority must be a permutation");
      }
      seen[p] = true;
    }
    if (block_ < 0 || block_ > static_cast<int>(N) ||
        (block_ > 0 && kind_ != OrderKind::DegRevLex)) {
      throw Error(Errc::InvalidSpec, "elimination blocks are only supported for degrevlex");
    }
  }

  OrderKind kind() const { return kind_; }
  const Priority& priority() const { return priority_; }
  int block() const { return block_; }

  bool is_local() const { return kind_ == OrderKind::NegDegRevLex; }
  bool is_global() const { return !is_local(); }

  Cmp compare(const BasicMonomial<N>& u, const BasicMonomial<N>& v) const {
    switch (kind_) {
      case OrderKind::Lex:
        return lex(u, v, 0, N);
      case OrderKind::DegLex: {
        Cmp c = by_degree(u, v, 0, N);
        return c != Cmp::Equal ? c : lex(u, v, 0, N);
      }
      case OrderKind::DegRevLex:
        if (block_ > 0) {
          Cmp c = degrevlex(u, v, 0, block_);
          return c != Cmp::Equal ? c : degrevlex(u, v, block_, N);
        }
        return degrevlex(u, v, 0, N);
      case OrderKind::NegDegRevLex: {
        Cmp c = by_degree(u, v, 0, N);
        if (c != Cmp::Equal) return flip(c);
        return revlex(u, v, 0, N);
      }
    }
    return Cmp::Equal;
  }

  bool greater(const BasicMonomial<N>& u, const BasicMonomial<N>& v) const {
    return compare(u, v) == Cmp::Greater;
  }
  bool less(const BasicMonomial<N>& u, const BasicMonomial<N>& v) const {
    return compare(u, v) == Cmp::Less;
  }

  friend bool operator==(const BasicOrder&, const BasicOrder&) = default;

 private:
  static Priority identity() {
    Priority p{};
    std::iota(p.begin(), p.end(), 0);
    return p;
  }

  // All helpers look at priority positions [from, to).
  Cmp lex(const BasicMonomial<N>& u, const BasicMonomial<N>& v, std::size_t from,
          std::size_t to) const {
    for (std::size_t k = from; k < to; ++k) {
      int ue = u[priority_[k]], ve = v[priority_[k]];
      if (ue != ve) return ue > ve ? Cmp::Greater : Cmp::Less;
    }
    return Cmp::Equal;
  }

  Cmp by_degree(const BasicMonomial<N>& u, const BasicMonomial<N>& v, std::size_t from,
                std::size_t to) const {
    int du = 0, dv = 0;
    for (std::size_t k = from; k < to; ++k) {
      du += u[priority_[k]];
      dv += v[priority_[k]];
    }
    if (du == dv) return Cmp::Equal;
    return du > dv ? Cmp::Greater : Cmp::Less;
  }

  Cmp revlex(const BasicMonomial<N>& u, const BasicMonomial<N>& v, std::size_t from,
             std::size_t to) const {
    for (std::size_t k = to; k-- > from;) {
      int ue = u[priority_[k]], ve = v[priority_[k]];
      if (ue != ve) return ue < ve ? Cmp::Greater : Cmp::Less;
    }
    return Cmp::Equal;
  }

  Cmp degrevlex(const BasicMonomial<N>& u, const BasicMonomial<N>& v, std::size_t from,
                std::size_t to) const {
    Cmp c = by_degree(u, v, from, to);
    return c != Cmp::Equal ? c : revlex(u, v, from, to);
  }

  OrderKind kind_;
  Priority priority_;
  int block_ = 0;
};

using MonomialOrder = BasicOrder<4>;

/// The local order of the standard-basis computation: ds with x0 > x1 > x2 > y.
inline MonomialOrder ds_order() { return MonomialOrder(OrderKind::NegDegRevLex, {0, 1, 2, 3}); }

/// Canonical global order used for ideal comparison: degrevlex, x0 > x1 > x2 > y.
inline MonomialOrder default_global_order() {
  return MonomialOrder(OrderKind::DegRevLex, {0, 1, 2, 3});
}

std::string to_string(OrderKind kind);

}  // namespace tck

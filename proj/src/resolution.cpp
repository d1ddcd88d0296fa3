#include "tck/resolution.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace tck {

PolyMatrix::PolyMatrix(std::initializer_list<std::initializer_list<Polynomial>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  for (const auto& r : rows) {
    if (r.size() != cols_) throw Error(Errc::ShapeMismatch, "ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

bool PolyMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Polynomial& p) { return p.is_zero(); });
}

PolyMatrix PolyMatrix::submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  PolyMatrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
  }
  return out;
}

namespace {

std::vector<std::size_t> all_but(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> v;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != skip) v.push_back(i);
  }
  return v;
}

std::vector<std::size_t> iota_vec(std::size_t n) { return all_but(n, n); }

}  // namespace

PolyMatrix PolyMatrix::without_row(std::size_t r) const { return submatrix(all_but(rows_, r), iota_vec(cols_)); }
PolyMatrix PolyMatrix::without_col(std::size_t c) const { return submatrix(iota_vec(rows_), all_but(cols_, c)); }

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols() != b.rows()) throw Error(Errc::ShapeMismatch, "matrix product shape mismatch");
  PolyMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Polynomial s;
      for (std::size_t k = 0; k < a.cols(); ++k) {
        if (!a(i, k).is_zero() && !b(k, j).is_zero()) s += a(i, k) * b(k, j);
      }
      out(i, j) = std::move(s);
    }
  }
  return out;
}

Polynomial determinant(const PolyMatrix& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw Error(Errc::ShapeMismatch, "determinant of a non-square matrix");
  if (n == 0) return Polynomial(1);
  if (n > 20) throw Error(Errc::ShapeMismatch, "determinant size limit exceeded");
  // det of rows [k, n) restricted to the column set `mask`, k = n - popcount(mask).
  std::vector<Polynomial> memo(std::size_t{1} << n);
  std::vector<bool> known(memo.size(), false);
  memo[0] = Polynomial(1);
  known[0] = true;
  auto rec = [&](auto&& self, std::uint32_t mask) -> const Polynomial& {
    if (known[mask]) return memo[mask];
    const std::size_t row = n - static_cast<std::size_t>(std::popcount(mask));
    Polynomial acc;
    int position = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask >> c & 1u)) continue;
      const Polynomial& entry = m(row, c);
      if (!entry.is_zero()) {
        const Polynomial& rest = self(self, mask & ~(1u << c));
        if (!rest.is_zero()) {
          if (position % 2 == 0) {
            acc += entry * rest;
          } else {
            acc -= entry * rest;
          }
        }
      }
      ++position;
    }
    memo[mask] = std::move(acc);
    known[mask] = true;
    return memo[mask];
  };
  return rec(rec, static_cast<std::uint32_t>((std::uint64_t{1} << n) - 1));
}

namespace {

/// Calls fn(subset) for each r-subset of {0..n-1} in lexicographic order;
/// stops early when fn returns false.
template <typename Fn>
bool for_each_subset(std::size_t n, std::size_t r, Fn&& fn) {
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  if (r > n) return true;
  while (true) {
    if (!fn(idx)) return false;
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == n - r + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < r; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

std::vector<Minor> minors(const PolyMatrix& m, std::size_t r) {
  std::vector<Minor> out;
  for_each_subset(m.rows(), r, [&](const std::vector<std::size_t>& rows) {
    for_each_subset(m.cols(), r, [&](const std::vector<std::size_t>& cols) {
      out.push_back({rows, cols, determinant(m.submatrix(rows, cols))});
      return true;
    });
    return true;
  });
  return out;
}

std::size_t matrix_rank(const PolyMatrix& m) {
  for (std::size_t r = std::min(m.rows(), m.cols()); r > 0; --r) {
    bool nonzero = false;
    for_each_subset(m.rows(), r, [&](const std::vector<std::size_t>& rows) {
      return for_each_subset(m.cols(), r, [&](const std::vector<std::size_t>& cols) {
        nonzero = !determinant(m.submatrix(rows, cols)).is_zero();
        return !nonzero;
      });
    });
    if (nonzero) return r;
  }
  return 0;
}

// --- explicit resolution ---------------------------------------------------

FreeComplex explicit_resolution(const CurveSpec& spec) {
  const int a = spec.a;
  const Polynomial x0 = Polynomial::variable(var::x0);
  const Polynomial x1 = Polynomial::variable(var::x1);
  const Polynomial x2 = Polynomial::variable(var::x2);
  const Polynomial y = Polynomial::variable(var::y);
  const Polynomial ya = Polynomial::variable(var::y, a);
  const Polynomial ya1 = Polynomial::variable(var::y, a + 1);
  const Polynomial o;
  const auto g = tangent_cone_generators(spec);

  FreeComplex c;
  c.levels.push_back({0});
  std::vector<int> gen_degrees;
  PolyMatrix phi1(1, g.size());
  for (std::size_t k = 0; k < g.size(); ++k) {
    phi1(0, k) = g[k];
    gen_degrees.push_back(g[k].degree());
  }
  c.levels.push_back(gen_degrees);
  c.maps.push_back(phi1);

  switch (spec.b) {
    case 1:
      c.maps.push_back(PolyMatrix{
          {x2, ya, -y, o, o, o, o, o},
          {-x1, o, x2, ya, o, o, o, o},
          {x0, o, -x1, o, ya, o, o, o},
          {o, -x1, o, -x2, o, x2, y, o},
          {o, x0, o, o, -x2, -x1, o, y},
          {o, o, o, x0, x1, o, -x1, -x2},
      });
      c.levels.push_back({3, a + 2, 3, a + 2, a + 2, a + 2, a + 2, a + 2});
      c.maps.push_back(PolyMatrix{
          {ya, o, o},
          {-x2, y, o},
          {o, ya, o},
          {x1, -x2, o},
          {-x0, x1, o},
          {o, -x2, y},
          {o, x1, -x2},
          {o, -x0, x1},
      });
      c.levels.push_back({a + 3, a + 3, a + 3});
      break;
    case 2:
      c.maps.push_back(PolyMatrix{
          {x2, -y, o, o, o},
          {-x1, x2, ya, o, o},
          {x0, -x1, o, ya, o},
          {o, o, -x1, -x2, y},
          {o, o, x0, x1, -x2},
      });
      c.levels.push_back({3, 3, a + 2, a + 2, a + 2});
      c.maps.push_back(PolyMatrix{{g[4]}, {g[3]}, {-g[2]}, {g[1]}, {g[0]}});
      c.levels.push_back({a + 4});
      break;
    case 3:
      c.maps.push_back(PolyMatrix{
          {x2, ya1, -y, o, o},
          {-x1, o, x2, ya1, o},
          {x0, o, -x1, o, ya1},
          {o, -g[0], o, -g[1], -g[2]},
      });
      c.levels.push_back({3, a + 3, 3, a + 3, a + 3});
      c.maps.push_back(PolyMatrix{
          {ya1, o},
          {-x2, y},
          {o, ya1},
          {x1, -x2},
          {-x0, x1},
      });
      c.levels.push_back({a + 4, a + 4});
      break;
    default:
      throw Error(Errc::InvalidSpec, "b must be 1, 2 or 3");
  }
  return c;
}

BettiTable expected_betti(const CurveSpec& spec) {
  const int a = spec.a;
  auto rep = [](std::vector<int>& v, int value, int count) { v.insert(v.end(), count, value); };
  BettiTable t;
  t.shifts.assign(4, {});
  t.shifts[0] = {0};
  switch (spec.b) {
    case 1:
      rep(t.shifts[1], 2, 3), rep(t.shifts[1], a + 1, 3);
      rep(t.shifts[2], 3, 2), rep(t.shifts[2], a + 2, 6);
      rep(t.shifts[3], a + 3, 3);
      break;
    case 2:
      rep(t.shifts[1], 2, 3), rep(t.shifts[1], a + 1, 2);
      rep(t.shifts[2], 3, 2), rep(t.shifts[2], a + 2, 3);
      rep(t.shifts[3], a + 4, 1);
      break;
    case 3:
      rep(t.shifts[1], 2, 3), rep(t.shifts[1], a + 1, 1);
      rep(t.shifts[2], 3, 2), rep(t.shifts[2], a + 3, 3);
      rep(t.shifts[3], a + 4, 2);
      break;
    default:
      throw Error(Errc::InvalidSpec, "b must be 1, 2 or 3");
  }
  for (auto& s : t.shifts) {
    std::sort(s.begin(), s.end());
    t.beta.push_back(s.size());
  }
  return t;
}

// --- checks -------------------------------------------------------------------

void check_shapes(const FreeComplex& c) {
  if (c.levels.empty()) throw Error(Errc::ShapeMismatch, "complex has no levels");
  if (c.maps.size() + 1 != c.levels.size()) {
    throw Error(Errc::ShapeMismatch, "complex needs exactly one map per level above 0");
  }
  for (std::size_t j = 1; j < c.levels.size(); ++j) {
    const auto& m = c.maps[j - 1];
    if (m.rows() != c.levels[j - 1].size() || m.cols() != c.levels[j].size()) {
      throw Error(Errc::ShapeMismatch, "map " + std::to_string(j) + " has shape " + std::to_string(m.rows()) +
                                           "x" + std::to_string(m.cols()) + " but levels need " +
                                           std::to_string(c.levels[j - 1].size()) + "x" +
                                           std::to_string(c.levels[j].size()));
    }
  }
}

bool verify_complex(const FreeComplex& c) {
  check_shapes(c);
  for (std::size_t j = 1; j < c.levels.size(); ++j) {
    const auto& m = c.maps[j - 1];
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t k = 0; k < m.cols(); ++k) {
        const auto& e = m(r, k);
        if (e.is_zero()) continue;
        int want = c.levels[j][k] - c.levels[j - 1][r];
        if (!e.is_homogeneous() || e.degree() != want) return false;
      }
    }
  }
  for (std::size_t j = 1; j < c.maps.size(); ++j) {
    if (!(c.maps[j - 1] * c.maps[j]).is_zero()) return false;
  }
  return true;
}

BettiTable betti_numbers(const FreeComplex& c) {
  check_shapes(c);
  for (const auto& m : c.maps) {
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t k = 0; k < m.cols(); ++k) {
        if (!m(r, k).is_zero() && m(r, k).is_constant()) {
          throw Error(Errc::NotMinimal, "complex has a unit entry");
        }
      }
    }
  }
  BettiTable t;
  for (auto s : c.levels) {
    std::sort(s.begin(), s.end());
    t.beta.push_back(s.size());
    t.shifts.push_back(std::move(s));
  }
  return t;
}

}  // namespace tck

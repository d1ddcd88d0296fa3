#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "tck/curves.hpp"
#include "tck/polynomial.hpp"

namespace tck {

/// Dense matrix over the polynomial ring.
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  PolyMatrix(std::initializer_list<std::initializer_list<Polynomial>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Polynomial& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Polynomial& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;

  PolyMatrix submatrix(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  PolyMatrix without_row(std::size_t r) const;
  PolyMatrix without_col(std::size_t c) const;

  /// Throws ShapeMismatch when the inner dimensions differ.
  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Polynomial> data_;
};

/// Determinant of a square matrix (expansion by minors, memoized over column
/// subsets).
Polynomial determinant(const PolyMatrix& m);

struct Minor {
  std::vector<std::size_t> rows, cols;
  Polynomial value;
};

/// All r x r minors in lexicographic order of (row subset, column subset).
std::vector<Minor> minors(const PolyMatrix& m, std::size_t r);

/// Rank over the fraction field: the largest r with a non-zero r x r minor.
std::size_t matrix_rank(const PolyMatrix& m);

/// Graded free complex 0 -> F_s -> ... -> F_1 -> F_0.
///
/// levels[j] lists the degrees of the basis elements of F_j, i.e. F_j is the
/// sum of R(-levels[j][k]); levels[0] = {0}. maps[j-1] is the matrix of
/// F_j -> F_{j-1}, with levels[j-1].size() rows and levels[j].size() columns.
struct FreeComplex {
  std::vector<std::vector<int>> levels;
  std::vector<PolyMatrix> maps;

  std::size_t length() const { return maps.size(); }
  friend bool operator==(const FreeComplex&, const FreeComplex&) = default;
};

/// The explicit resolution of the tangent cone of the curve, with phi_1 the
/// row of tangent-cone generators.
FreeComplex explicit_resolution(const CurveSpec& spec);

/// Consecutive maps compose to zero and every non-zero entry of map j in row
/// i, column k is homogeneous of degree levels[j][k] - levels[j-1][i].
/// Throws ShapeMismatch when matrix shapes disagree with the levels.
bool verify_complex(const FreeComplex& c);

/// Basis-level shape check used by verify_complex and the JSON reader.
void check_shapes(const FreeComplex& c);

// --- exactness ---------------------------------------------------------------

struct RegularSequenceSearch {
  std::size_t map_index = 0;        // i, 1-based
  std::size_t required_length = 0;  // min(i, 3)
  std::vector<Polynomial> sequence;
  std::vector<std::string> transcript;
  bool found = false;
};

struct ExactnessReport {
  std::vector<std::size_t> ranks;        // ranks[i-1] = rank of map i
  std::vector<std::size_t> level_ranks;  // free rank of each level
  std::vector<bool> rank_conditions;     // [i-1]: rank F_i == r_i + r_{i+1}
  std::vector<RegularSequenceSearch> sequences;
  bool verdict = false;
};

/// Candidate witnesses per map: seeds[i-1] is tried first for map i.
using WitnessSeeds = std::vector<std::vector<Polynomial>>;

/// The explicit regular sequences named for the explicit complexes.
WitnessSeeds named_witnesses(const CurveSpec& spec);

/// f is a non-zerodivisor modulo <seq>: (<seq> : f) = <seq>. For an empty
/// sequence this is f != 0.
bool extends_regular_sequence(const std::vector<Polynomial>& seq, const Polynomial& f);

/// Buchsbaum-Eisenbud test: rank additivity, and for each map i the ideal of
/// its rank-sized minors contains a regular sequence of length min(i, 3).
/// Throws NotAComplex when verify_complex fails.
ExactnessReport exactness_certificate(const FreeComplex& c, const WitnessSeeds& seeds = {});

// --- generic resolution --------------------------------------------------------

/// Non-minimal free resolution of R/<gens> from Schreyer's syzygy theorem.
/// gens must be homogeneous; ord must be global.
FreeComplex schreyer_resolution_raw(const std::vector<Polynomial>& gens, const MonomialOrder& ord);

/// Cancels unit entries (non-zero constants) until none are left.
FreeComplex minimalize(FreeComplex c);

/// Minimal graded free resolution of R/<gens>.
FreeComplex schreyer_resolution(const std::vector<Polynomial>& gens, const MonomialOrder& ord);

struct BettiTable {
  std::vector<std::size_t> beta;          // (beta_0, beta_1, ...)
  std::vector<std::vector<int>> shifts;   // sorted degree multiset per level

  friend bool operator==(const BettiTable&, const BettiTable&) = default;
};

/// Throws NotMinimal if any map has a non-zero constant entry.
BettiTable betti_numbers(const FreeComplex& c);

/// The twists of the explicit resolution, sorted per level.
BettiTable expected_betti(const CurveSpec& spec);

}  // namespace tck

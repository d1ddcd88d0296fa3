#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "tck/curves.hpp"
#include "tck/resolution.hpp"

namespace tck {

/// C(n, 3), taken as 0 for n < 3.
std::int64_t binom3(std::int64_t n);

/// Closed binomial formula for the Hilbert function of the associated graded
/// ring, case split on b.
std::int64_t hilbert_formula(const CurveSpec& spec, int i);

/// Alternating sum over the twists of a graded resolution of R/I over the
/// 4-variable ring: sum_j (-1)^j sum_k C(i - s_jk + 3, 3).
std::int64_t hilbert_from_complex(const FreeComplex& c, int i);

/// Number of semigroup elements s whose longest factorization into
/// m0..m3 has length exactly i.
std::int64_t hilbert_semigroup_oracle(const CurveSpec& spec, int i);

struct HilbertValues {
  CurveSpec spec;
  std::map<int, std::int64_t> values;
  std::string method;
};

HilbertValues hilbert_table(const CurveSpec& spec, int max_degree, const std::string& method);

/// Smallest i0 <= max_degree with H(i) = m0 for all i0 <= i <= max_degree,
/// or -1 if H(max_degree) != m0.
int stabilization_index(const HilbertValues& h);

}  // namespace tck

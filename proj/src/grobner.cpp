#include "tck/grobner.hpp"

#include <numeric>

namespace tck {

IdealBasis toric_ideal(const std::array<int, 4>& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] <= 0 || (i > 0 && m[i] <= m[i - 1])) {
      throw Error(Errc::InvalidSpec, "toric ideal needs strictly increasing positive degrees");
    }
  }
  if (std::gcd(std::gcd(m[0], m[1]), std::gcd(m[2], m[3])) != 1) {
    throw Error(Errc::InvalidSpec, "toric ideal needs gcd(m) = 1");
  }
  using P5 = BasicPolynomial<5>;
  std::vector<P5> F;
  for (std::size_t i = 0; i < 4; ++i) F.push_back(P5::variable(i) - P5::variable(4, m[i]));
  const auto ord = default_global_order();
  return buchberger(eliminate_last<4>(F, ord), ord);
}

}  // namespace tck

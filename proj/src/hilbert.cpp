#include "tck/hilbert.hpp"

#include <algorithm>
#include <vector>

namespace tck {

std::int64_t binom3(std::int64_t n) { return n < 3 ? 0 : n * (n - 1) * (n - 2) / 6; }

std::int64_t hilbert_formula(const CurveSpec& spec, int i) {
  const std::int64_t a = spec.a;
  const std::int64_t n = i;
  const std::int64_t common = binom3(n + 3) - 3 * binom3(n + 1) + 2 * binom3(n);
  switch (spec.b) {
    case 1:
      return common - 3 * binom3(n - a + 2) + 6 * binom3(n - a + 1) - 3 * binom3(n - a);
    case 2:
      return common - 2 * binom3(n - a + 2) + 3 * binom3(n - a + 1) - binom3(n - a - 1);
    case 3:
      return common - binom3(n - a + 2) + 3 * binom3(n - a) - 2 * binom3(n - a - 1);
    default:
      throw Error(Errc::InvalidSpec, "b must be 1, 2 or 3");
  }
}

std::int64_t hilbert_from_complex(const FreeComplex& c, int i) {
  std::int64_t h = 0;
  for (std::size_t j = 0; j < c.levels.size(); ++j) {
    std::int64_t level = 0;
    for (int s : c.levels[j]) level += binom3(static_cast<std::int64_t>(i) - s + 3);
    h += (j % 2 == 0) ? level : -level;
  }
  return h;
}

std::int64_t hilbert_semigroup_oracle(const CurveSpec& spec, int i) {
  if (i < 0) return 0;
  // Any s with a factorization of length i is at most i * m3, and every
  // factorization of a larger s is longer than i.
  const std::size_t bound = static_cast<std::size_t>(i) * spec.m[3];
  constexpr int kAbsent = -1;
  std::vector<int> maxord(bound + 1, kAbsent);
  maxord[0] = 0;
  std::int64_t count = i == 0 ? 1 : 0;
  for (std::size_t s = 1; s <= bound; ++s) {
    for (int g : spec.m) {
      if (static_cast<std::size_t>(g) <= s && maxord[s - g] != kAbsent) {
        maxord[s] = std::max(maxord[s], maxord[s - g] + 1);
      }
    }
    if (maxord[s] == i) ++count;
  }
  return count;
}

HilbertValues hilbert_table(const CurveSpec& spec, int max_degree, const std::string& method) {
  HilbertValues h{spec, {}, method};
  FreeComplex c;
  if (method == "complex") c = explicit_resolution(spec);
  for (int i = 0; i <= max_degree; ++i) {
    if (method == "formula") {
      h.values[i] = hilbert_formula(spec, i);
    } else if (method == "complex") {
      h.values[i] = hilbert_from_complex(c, i);
    } else if (method == "oracle") {
      h.values[i] = hilbert_semigroup_oracle(spec, i);
    } else {
      throw Error(Errc::InvalidSpec, "unknown Hilbert method: " + method);
    }
  }
  return h;
}

int stabilization_index(const HilbertValues& h) {
  if (h.values.empty()) return -1;
  int first = -1;
  for (auto it = h.values.rbegin(); it != h.values.rend(); ++it) {
    if (it->second != h.spec.m[0]) break;
    first = it->first;
  }
  return first;
}

}  // namespace tck

#include <algorithm>
#include <functional>
#include <optional>

#include "tck/grobner.hpp"
#include "tck/poly_io.hpp"
#include "tck/resolution.hpp"

namespace tck {

namespace {

// Upper bound on ideal-quotient tests per map before the search gives up.
constexpr std::size_t kMaxQuotientTests = 4000;

std::string join(const std::vector<Polynomial>& fs) {
  std::string out;
  for (const auto& f : fs) out += (out.empty() ? "" : ", ") + to_string(f);
  return "<" + out + ">";
}

}  // namespace

WitnessSeeds named_witnesses(const CurveSpec& spec) {
  const auto g = tangent_cone_generators(spec);
  const Polynomial x0 = Polynomial::variable(var::x0);
  const Polynomial x1 = Polynomial::variable(var::x1);
  const Polynomial x2 = Polynomial::variable(var::x2);
  switch (spec.b) {
    case 1:
      return {{}, {x0 * g[5] * g[5], x1 * g[1] * g[1]}, {x0 * g[0], x1 * g[1], x2 * g[2]}};
    case 2:
      return {{}, {-(g[0] * g[0]), -(g[1] * g[1])}, {}};
    case 3:
      return {{}, {g[0] * g[0], g[1] * g[1]}, {g[0], -g[1], g[2]}};
    default:
      return {};
  }
}

bool extends_regular_sequence(const std::vector<Polynomial>& seq, const Polynomial& f) {
  if (f.is_zero()) return false;
  if (seq.empty()) return true;
  auto ideal = buchberger(seq, default_global_order());
  if (ideal_contains(ideal, f)) return false;
  auto quotient = ideal_quotient(ideal, f);
  return std::all_of(quotient.generators.begin(), quotient.generators.end(),
                     [&](const Polynomial& q) { return ideal_contains(ideal, q); });
}

namespace {

RegularSequenceSearch search_sequence(const PolyMatrix& map, std::size_t index, std::size_t rank,
                                      const std::vector<Polynomial>& seeds) {
  RegularSequenceSearch s;
  s.map_index = index;
  s.required_length = std::min<std::size_t>(index, 3);
  if (rank == 0) {
    s.transcript.push_back("rank 0: no minors to search");
    return s;
  }
  const auto ord = default_global_order();

  // Candidate pool: distinct (up to scalars) non-zero minors of size `rank`.
  std::vector<Polynomial> minor_pool;
  for (auto& m : minors(map, rank)) {
    if (m.value.is_zero()) continue;
    auto key = make_monic(m.value, ord);
    if (std::find(minor_pool.begin(), minor_pool.end(), key) == minor_pool.end()) {
      minor_pool.push_back(std::move(key));
    }
  }
  std::stable_sort(minor_pool.begin(), minor_pool.end(),
                   [](const Polynomial& p, const Polynomial& q) { return p.degree() < q.degree(); });

  std::vector<Polynomial> pool;
  std::optional<IdealBasis> minor_ideal;
  for (const auto& w : seeds) {
    auto key = make_monic(w, ord);
    bool is_minor = std::find(minor_pool.begin(), minor_pool.end(), key) != minor_pool.end();
    bool in_ideal = is_minor;
    if (!is_minor && !key.is_zero()) {
      if (!minor_ideal) minor_ideal = buchberger(minor_pool, ord);
      in_ideal = ideal_contains(*minor_ideal, key);
    }
    s.transcript.push_back("seed " + to_string(w) +
                           (is_minor ? ": is a minor" : (in_ideal ? ": in the ideal of minors" : ": rejected")));
    if (in_ideal) pool.push_back(key);
  }
  for (const auto& p : minor_pool) {
    if (std::find(pool.begin(), pool.end(), p) == pool.end()) pool.push_back(p);
  }

  std::size_t tests = 0;
  std::vector<Polynomial> seq;
  std::function<bool(std::size_t)> dfs = [&](std::size_t start) -> bool {
    if (seq.size() == s.required_length) return true;
    for (std::size_t k = start; k < pool.size(); ++k) {
      if (tests >= kMaxQuotientTests) return false;
      ++tests;
      bool ok = extends_regular_sequence(seq, pool[k]);
      s.transcript.push_back("(" + join(seq) + " : " + to_string(pool[k]) + ") " +
                             (ok ? "= " + join(seq) + " -> accept" : "!= " + join(seq) + " -> reject"));
      if (!ok) continue;
      seq.push_back(pool[k]);
      if (dfs(k + 1)) return true;
      seq.pop_back();
    }
    return false;
  };
  s.found = dfs(0);
  if (s.found) {
    s.sequence = seq;
  } else if (tests >= kMaxQuotientTests) {
    s.transcript.push_back("search budget exhausted");
  }
  return s;
}

}  // namespace

ExactnessReport exactness_certificate(const FreeComplex& c, const WitnessSeeds& seeds) {
  if (!verify_complex(c)) throw Error(Errc::NotAComplex, "maps do not form a graded complex");
  ExactnessReport report;
  for (const auto& lvl : c.levels) report.level_ranks.push_back(lvl.size());
  for (const auto& m : c.maps) report.ranks.push_back(matrix_rank(m));

  bool ok = true;
  for (std::size_t i = 1; i < c.levels.size(); ++i) {
    std::size_t next = i < report.ranks.size() ? report.ranks[i] : 0;
    bool holds = report.level_ranks[i] == report.ranks[i - 1] + next;
    report.rank_conditions.push_back(holds);
    ok = ok && holds;
  }
  for (std::size_t i = 1; i <= c.maps.size(); ++i) {
    static const std::vector<Polynomial> kNone;
    const auto& seed = i - 1 < seeds.size() ? seeds[i - 1] : kNone;
    report.sequences.push_back(search_sequence(c.maps[i - 1], i, report.ranks[i - 1], seed));
    ok = ok && report.sequences.back().found;
  }
  report.verdict = ok;
  return report;
}

}  // namespace tck

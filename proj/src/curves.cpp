#include "tck/curves.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace tck {

namespace {

Polynomial x(std::size_t i, int e = 1) { return Polynomial::variable(i, e); }

}  // namespace

CurveSpec validate_spec(const std::array<long long, 4>& m) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (m[i] <= 0 || (i > 0 && m[i] <= m[i - 1])) {
      throw Error(Errc::NotIncreasing, "degrees must be positive and strictly increasing");
    }
    if (m[i] > 1'000'000) throw Error(Errc::InvalidSpec, "degrees are too large");
  }
  long long d = m[1] - m[0];
  if (m[2] - m[1] != d || m[3] - m[2] != d) {
    throw Error(Errc::NotArithmetic, "degrees do not form an arithmetic progression");
  }
  if (m[0] <= 3) throw Error(Errc::TooSmall, "m0 must be at least 4 (m0 = 3a + b with a >= 1)");
  if (std::gcd(m[0], d) != 1) throw Error(Errc::GcdNotOne, "gcd(m0, m1, m2, m3) must be 1");

  CurveSpec spec;
  for (std::size_t i = 0; i < 4; ++i) spec.m[i] = static_cast<int>(m[i]);
  spec.d = static_cast<int>(d);
  spec.a = (spec.m[0] - 1) / 3;
  spec.b = spec.m[0] - 3 * spec.a;
  return spec;
}

CurveSpec spec_from_abd(int a, int b, int d) {
  if (a < 1) throw Error(Errc::TooSmall, "a must be at least 1");
  if (b < 1 || b > 3) throw Error(Errc::InvalidSpec, "b must be 1, 2 or 3");
  if (d < 1) throw Error(Errc::NotIncreasing, "common difference must be positive");
  long long m0 = 3LL * a + b;
  return validate_spec({m0, m0 + d, m0 + 2LL * d, m0 + 3LL * d});
}

std::string to_string(const CurveSpec& spec) {
  return "m=(" + std::to_string(spec.m[0]) + "," + std::to_string(spec.m[1]) + "," + std::to_string(spec.m[2]) +
         "," + std::to_string(spec.m[3]) + ") a=" + std::to_string(spec.a) + " b=" + std::to_string(spec.b) +
         " d=" + std::to_string(spec.d);
}

std::vector<Polynomial> GeneratorSet::all() const {
  std::vector<Polynomial> out{xi11, phi[0], phi[1]};
  out.insert(out.end(), psi.begin(), psi.end());
  out.push_back(theta);
  return out;
}

std::vector<std::string> GeneratorSet::labels() const {
  std::vector<std::string> out{"xi11", "phi0", "phi1"};
  for (std::size_t j = 0; j < psi.size(); ++j) out.push_back("psi" + std::to_string(j));
  out.push_back("theta");
  return out;
}

GeneratorSet curve_generators(const CurveSpec& spec) {
  const int a = spec.a, b = spec.b, d = spec.d;
  GeneratorSet g;
  g.xi11 = x(var::x1, 2) - x(var::x0) * x(var::x2);
  for (std::size_t i = 0; i < 2; ++i) g.phi[i] = x(i + 1) * x(var::x2) - x(i) * x(var::y);
  if (b <= 2) {
    for (int j = 0; j <= 2 - b; ++j) {
      g.psi.push_back(x(b + j) * x(var::y, a) - x(var::x0, a + d) * x(j));
    }
  }
  g.theta = x(var::y, a + 1) - x(var::x0, a + d) * x(3 - b);
  return g;
}

std::vector<Polynomial> tangent_cone_generators(const CurveSpec& spec) {
  std::vector<Polynomial> out;
  for (const auto& g : curve_generators(spec).all()) out.push_back(least_homogeneous_form(g));
  return out;
}

MonomialOrder cm_order() {
  return MonomialOrder(OrderKind::DegRevLex, {var::x1, var::x2, var::y, var::x0});
}

MonomialOrder cm_literal_order() {
  return MonomialOrder(OrderKind::DegRevLex, {var::x0, var::y, var::x1, var::x2});
}

namespace {

struct GbCheck {
  std::vector<Monomial> lms;
  bool is_groebner = false;
  bool x0_free = false;
};

GbCheck check_under(const std::vector<Polynomial>& gens, const MonomialOrder& ord) {
  GbCheck c;
  for (const auto& g : gens) c.lms.push_back(leading_monomial(g, ord));
  auto gb = buchberger(gens, ord);
  c.is_groebner = std::all_of(gb.generators.begin(), gb.generators.end(), [&](const Polynomial& g) {
    auto lm = leading_monomial(g, ord);
    return std::any_of(c.lms.begin(), c.lms.end(), [&](const Monomial& u) { return u.divides(lm); });
  });
  c.x0_free = std::none_of(c.lms.begin(), c.lms.end(), [](const Monomial& u) { return u[var::x0] > 0; });
  return c;
}

}  // namespace

CMCertificate cohen_macaulay_certificate(const std::vector<Polynomial>& gens) {
  CMCertificate cert;
  auto main = check_under(gens, cert.order);
  cert.leading_monomials = main.lms;
  cert.is_groebner = main.is_groebner;
  cert.x0_free = main.x0_free;
  cert.conclusion = cert.is_groebner && cert.x0_free;

  auto literal = check_under(gens, cert.literal_order);
  cert.literal_leading_monomials = literal.lms;
  cert.literal_is_groebner = literal.is_groebner;
  cert.literal_x0_free = literal.x0_free;
  return cert;
}

CMCertificate cohen_macaulay_certificate(const CurveSpec& spec) {
  return cohen_macaulay_certificate(tangent_cone_generators(spec));
}

bool vanishes_on_curve(const Polynomial& f, const std::array<int, 4>& m) {
  std::map<long long, Rational> by_weight;
  for (const auto& t : f.terms()) {
    long long w = 0;
    for (std::size_t i = 0; i < 4; ++i) w += static_cast<long long>(t.mono[i]) * m[i];
    by_weight[w] += t.coeff;
  }
  return std::all_of(by_weight.begin(), by_weight.end(), [](const auto& kv) { return kv.second == 0; });
}

}  // namespace tck

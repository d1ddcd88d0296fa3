#include <doctest.h>

#include <numeric>

#include "tck/curves.hpp"
#include "tck/grobner.hpp"
#include "test_util.hpp"

using namespace tck;
using namespace tck::testing;

namespace {

Errc code_of(const std::array<long long, 4>& m) {
  try {
    validate_spec(m);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return Errc::Parse;
}

}  // namespace

TEST_CASE("spec validation") {
  auto s = validate_spec({4, 5, 6, 7});
  CHECK((s.a == 1 && s.b == 1 && s.d == 1));
  s = validate_spec({5, 6, 7, 8});
  CHECK((s.a == 1 && s.b == 2 && s.d == 1));
  s = validate_spec({12, 19, 26, 33});
  CHECK((s.a == 3 && s.b == 3 && s.d == 7));
  CHECK(code_of({4, 6, 8, 10}) == Errc::GcdNotOne);
  CHECK(code_of({4, 5, 7, 8}) == Errc::NotArithmetic);
  CHECK(code_of({3, 4, 5, 6}) == Errc::TooSmall);
  CHECK(code_of({5, 5, 5, 5}) == Errc::NotIncreasing);
  CHECK(code_of({7, 6, 5, 4}) == Errc::NotIncreasing);
  CHECK(code_of({0, 1, 2, 3}) == Errc::NotIncreasing);
  CHECK(is_spec_error(Errc::GcdNotOne));
  CHECK_FALSE(is_spec_error(Errc::Parse));

  auto t = spec_from_abd(2, 3, 5);
  CHECK(t.m == std::array<int, 4>{9, 14, 19, 24});
  CHECK_THROWS_AS(spec_from_abd(1, 4, 1), Error);
  CHECK_THROWS_AS(spec_from_abd(0, 1, 1), Error);
  CHECK_THROWS_AS(spec_from_abd(1, 1, 2), Error);
}

TEST_CASE("generators") {
  auto g = curve_generators(validate_spec({4, 5, 6, 7}));
  CHECK(g.xi11 == P("x1^2 - x0*x2"));
  CHECK(g.phi[0] == P("x1*x2 - x0*y"));
  CHECK(g.phi[1] == P("x2^2 - x1*y"));
  REQUIRE(g.psi.size() == 2);
  CHECK(g.psi[0] == P("x1*y - x0^3"));
  CHECK(g.psi[1] == P("x2*y - x0^2*x1"));
  CHECK(g.theta == P("y^2 - x0^2*x2"));
  CHECK(g.labels() == std::vector<std::string>{"xi11", "phi0", "phi1", "psi0", "psi1", "theta"});

  auto g2 = curve_generators(validate_spec({5, 7, 9, 11}));
  REQUIRE(g2.psi.size() == 1);
  CHECK(g2.psi[0] == P("x2*y - x0^4"));
  CHECK(g2.theta == P("y^2 - x0^3*x1"));

  auto g3 = curve_generators(validate_spec({6, 7, 8, 9}));
  CHECK(g3.psi.empty());
  CHECK(g3.theta == P("y^2 - x0^3"));
  CHECK(g3.all().size() == 4);
}

TEST_CASE("generators vanish on the curve and are minimal") {
  const auto ord = default_global_order();
  for (int a = 1; a <= 3; ++a) {
    for (int b = 1; b <= 3; ++b) {
      for (int d : {1, 2, 4}) {
        if (std::gcd(3 * a + b, d) != 1) continue;
        auto spec = spec_from_abd(a, b, d);
        CAPTURE(to_string(spec));
        auto G = curve_generators(spec).all();
        for (const auto& g : G) CHECK(vanishes_on_curve(g, spec.m));
        CHECK(ideal_equal(G, toric_ideal(spec.m).generators, ord));
      }
    }
  }
  CHECK_FALSE(vanishes_on_curve(P("x1^2 - x0*x1"), {4, 5, 6, 7}));
}

TEST_CASE("tangent cone generators") {
  CHECK(tangent_cone_generators(validate_spec({4, 5, 6, 7})) ==
        std::vector<Polynomial>{P("x1^2-x0*x2"), P("x1*x2-x0*y"), P("x2^2-x1*y"), P("x1*y"), P("x2*y"), P("y^2")});
  CHECK(tangent_cone_generators(validate_spec({5, 6, 7, 8})) ==
        std::vector<Polynomial>{P("x1^2-x0*x2"), P("x1*x2-x0*y"), P("x2^2-x1*y"), P("x2*y"), P("y^2")});
  CHECK(tangent_cone_generators(validate_spec({6, 7, 8, 9})) ==
        std::vector<Polynomial>{P("x1^2-x0*x2"), P("x1*x2-x0*y"), P("x2^2-x1*y"), P("y^2")});
  for (int a = 1; a <= 4; ++a) {
    for (int b = 1; b <= 3; ++b) {
      auto tc = tangent_cone_generators(spec_from_abd(a, b, 1));
      int quadrics = 0, high = 0;
      for (const auto& f : tc) {
        CHECK(f.is_homogeneous());
        quadrics += f.degree() == 2;
        high += f.degree() == a + 1;
      }
      if (a > 1) {
        CHECK(quadrics == 3);
        CHECK(high == 4 - b);
      }
      CHECK(tc.size() == static_cast<std::size_t>(7 - b));
    }
  }
}

TEST_CASE("Cohen-Macaulay certificate") {
  auto c = cohen_macaulay_certificate(validate_spec({4, 5, 6, 7}));
  CHECK(c.conclusion);
  CHECK(c.is_groebner);
  CHECK(c.x0_free);
  CHECK(c.leading_monomials == std::vector<Monomial>{mono(0, 2, 0, 0), mono(0, 1, 1, 0), mono(0, 0, 2, 0),
                                                     mono(0, 1, 0, 1), mono(0, 0, 1, 1), mono(0, 0, 0, 2)});
  // The literal priority x0 > y > x1 > x2 puts x0*y first in phi0.
  CHECK_FALSE(c.literal_x0_free);

  auto c3 = cohen_macaulay_certificate(validate_spec({6, 7, 8, 9}));
  CHECK(c3.conclusion);
  CHECK(c3.leading_monomials ==
        std::vector<Monomial>{mono(0, 2, 0, 0), mono(0, 1, 1, 0), mono(0, 0, 2, 0), mono(0, 0, 0, 2)});

  // Under degrevlex with x0 last, a degree tie never leaves x0 in the leading monomial.
  auto tie = cohen_macaulay_certificate(std::vector<Polynomial>{P("x0*x1 - y^2")});
  CHECK(tie.leading_monomials == std::vector<Monomial>{mono(0, 0, 0, 2)});
  auto adv = cohen_macaulay_certificate(std::vector<Polynomial>{P("x0^2*x1 - y^2")});
  CHECK_FALSE(adv.x0_free);
  CHECK_FALSE(adv.conclusion);

  // Not a Groebner basis as given: completion adds a new leading monomial.
  auto ng = cohen_macaulay_certificate(std::vector<Polynomial>{P("x1^2 - x2*y"), P("x1*x2 - y^2")});
  CHECK_FALSE(ng.is_groebner);
  CHECK_FALSE(ng.conclusion);
}

TEST_CASE("spec formatting") {
  CHECK(to_string(validate_spec({4, 5, 6, 7})) == "m=(4,5,6,7) a=1 b=1 d=1");
  CHECK(cm_order().priority() == MonomialOrder::Priority{1, 2, 3, 0});
}

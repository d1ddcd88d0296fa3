#include <doctest.h>

#include "tck/curves.hpp"
#include "tck/grobner.hpp"
#include "test_util.hpp"

using namespace tck;
using namespace tck::testing;

namespace {

// Buchberger's criterion checked directly on the output.
bool s_pairs_reduce(const IdealBasis& B) {
  const auto& G = B.generators;
  for (std::size_t i = 0; i < G.size(); ++i) {
    for (std::size_t j = i + 1; j < G.size(); ++j) {
      if (!normal_form_global(s_polynomial(G[i], G[j], B.order), B).is_zero()) return false;
    }
  }
  return true;
}

std::vector<MonomialOrder> global_orders() {
  return {default_global_order(), MonomialOrder(OrderKind::Lex), MonomialOrder(OrderKind::DegLex),
          cm_order(), MonomialOrder(OrderKind::Lex, {3, 2, 1, 0})};
}

}  // namespace

TEST_CASE("normal form") {
  auto tc = tangent_cone_generators(validate_spec({4, 5, 6, 7}));
  auto B = buchberger(tc, cm_order());
  RandomPolys rnd(2);
  for (int k = 0; k < 10; ++k) {
    CHECK(normal_form_global(P("x1^2 - x0*x2") * rnd.polynomial(), B).is_zero());
  }
  CHECK(normal_form_global(P("x0"), B) == P("x0"));
  CHECK(normal_form_global(Polynomial(), B).is_zero());
  CHECK_THROWS_AS(normal_form_global(P("x0"), tc, ds_order()), Error);
}

TEST_CASE("buchberger basics") {
  auto tc = tangent_cone_generators(validate_spec({4, 5, 6, 7}));
  auto B = buchberger(tc, cm_order());
  CHECK(B.reduced);
  CHECK(B.generators.size() == tc.size());
  CHECK(ideal_equal(B.generators, tc, cm_order()));

  auto single = buchberger(std::vector<Polynomial>{P("3*x1^2 - 6*x0*x2")}, default_global_order());
  REQUIRE(single.generators.size() == 1);
  CHECK(single.generators[0] == P("x1^2 - 2*x0*x2"));

  // x0 > x1 > x2 > y degrevlex: LM(xi11) = x1^2, LM(phi0) = x1*x2, so the pair yields x0*x2^2 - x0*x1*y.
  auto two = buchberger(std::vector<Polynomial>{P("x1^2 - x0*x2"), P("x1*x2 - x0*y")}, default_global_order());
  CHECK(two.generators.size() == 3);
  CHECK(ideal_contains(two, P("x0*x2^2 - x0*x1*y")));
  bool found = false;
  for (const auto& g : two.generators) found = found || g == P("x0*x2^2 - x0*x1*y") || g == P("x0*x1*y - x0*x2^2");
  CHECK(found);

  CHECK_THROWS_AS(buchberger(std::vector<Polynomial>{Polynomial(), Polynomial()}, default_global_order()), Error);
  CHECK_THROWS_AS(buchberger(tc, ds_order()), Error);
}

TEST_CASE("buchberger properties on random ideals") {
  RandomPolys rnd(7);
  for (const auto& ord : global_orders()) {
    for (int k = 0; k < 6; ++k) {
      std::vector<Polynomial> F{rnd.polynomial(2, 2), rnd.polynomial(2, 2), rnd.polynomial(2, 2)};
      if (F[0].is_zero() && F[1].is_zero() && F[2].is_zero()) continue;
      auto B = buchberger(F, ord);
      CHECK(s_pairs_reduce(B));
      // Idempotence: a reduced basis is a fixed point.
      auto again = buchberger(B.generators, ord);
      CHECK(again.generators == B.generators);
      // Membership is sound for combinations of the inputs.
      auto comb = F[0] * rnd.polynomial(2, 1) + F[1] * rnd.polynomial(2, 1) + F[2];
      CHECK(ideal_contains(B, comb));
      for (const auto& f : F) CHECK(normal_form_global(f, B).is_zero());
    }
  }
}

TEST_CASE("ideal equality") {
  const auto ord = default_global_order();
  auto spec = validate_spec({4, 5, 6, 7});
  CHECK(ideal_equal(curve_generators(spec).all(), toric_ideal(spec.m).generators, ord));
  CHECK_FALSE(ideal_equal(std::vector<Polynomial>{P("x0")}, std::vector<Polynomial>{P("x0^2")}, ord));
  auto F = tangent_cone_generators(spec);
  CHECK(ideal_equal(F, F, ord));
  CHECK(ideal_equal(std::vector<Polynomial>{Polynomial()}, std::vector<Polynomial>{}, ord));
  CHECK_FALSE(ideal_equal(std::vector<Polynomial>{Polynomial()}, std::vector<Polynomial>{P("x1")}, ord));
}

TEST_CASE("ideal quotient") {
  const auto ord = default_global_order();
  auto B = [&](std::vector<Polynomial> F) { return buchberger(F, ord); };
  CHECK(ideal_equal(ideal_quotient(B({P("x0")}), P("x1")).generators, {P("x0")}, ord));
  CHECK(ideal_equal(ideal_quotient(B({P("x0*x1")}), P("x1")).generators, {P("x0")}, ord));
  auto g1 = P("x1^2 - x0*x2"), g2 = P("x1*x2 - x0*y");
  CHECK(ideal_equal(ideal_quotient(B({g1 * g1}), g2 * g2).generators, {g1 * g1}, ord));
  CHECK(ideal_equal(ideal_quotient(B({g1 * g2}), g2).generators, {g1}, ord));
  CHECK_THROWS_AS(ideal_quotient(B({P("x0")}), Polynomial()), Error);

  // Soundness: every element of (I : f) times f lies in I.
  auto tc = B(tangent_cone_generators(validate_spec({5, 6, 7, 8})));
  for (const auto& f : {P("x1"), P("y"), P("x0"), P("x2 + y")}) {
    auto Q = ideal_quotient(tc, f);
    for (const auto& h : Q.generators) CHECK(ideal_contains(tc, h * f));
    for (const auto& g : tc.generators) CHECK(ideal_contains(Q, g));
  }
  // x0 is a non-zerodivisor on the tangent cone ring.
  CHECK(ideal_equal(ideal_quotient(tc, P("x0")).generators, tc.generators, ord));
}

TEST_CASE("elimination") {
  // Eliminating t from <x0 - t, x1 - t^2> leaves <x1 - x0^2>.
  using P5 = BasicPolynomial<5>;
  auto t = P5::variable(4);
  std::vector<P5> F{P5::variable(0) - t, P5::variable(1) - t * t};
  auto E = eliminate_last<4>(F, default_global_order());
  CHECK(ideal_equal(E, {P("x1 - x0^2")}, default_global_order()));
  CHECK(project<4>(lift<4>(P("x0*y - 3"))) == P("x0*y - 3"));
}

TEST_CASE("toric ideal") {
  const auto ord = default_global_order();
  auto T = toric_ideal({4, 5, 6, 7});
  for (const auto& g : T.generators) CHECK(vanishes_on_curve(g, {4, 5, 6, 7}));
  CHECK(ideal_equal(T.generators, curve_generators(validate_spec({4, 5, 6, 7})).all(), ord));
  CHECK(ideal_equal(toric_ideal({6, 7, 8, 9}).generators, curve_generators(validate_spec({6, 7, 8, 9})).all(), ord));
  CHECK_THROWS_AS(toric_ideal({4, 6, 8, 10}), Error);
  CHECK_THROWS_AS(toric_ideal({5, 4, 6, 7}), Error);
}

TEST_CASE("divide_exact") {
  const auto ord = default_global_order();
  auto f = P("x1 - x0"), g = P("x2^2 + y");
  CHECK(divide_exact(f * g, f, ord) == g);
  CHECK_THROWS_AS(divide_exact(g + P("1"), f, ord), Error);
}

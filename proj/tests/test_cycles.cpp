#include <doctest.h>

#include <string>
#include <vector>

#include "hodge/cycles.hpp"
#include "hodge/groebner.hpp"
#include "hodge/parser.hpp"
#include "hodge/scenarios.hpp"
#include "hodge/util.hpp"

using namespace hodge;

TEST_CASE("binomial coefficients") {
  CHECK(binom(5, 2) == BigInt(10));
  CHECK(binom(7, 0) == BigInt(1));
  CHECK(binom(7, 7) == BigInt(1));
  CHECK(binom(3, 5) == BigInt(0));
  CHECK(binom(-1, 0) == BigInt(0));
  CHECK(binom(4, -1) == BigInt(0));
  CHECK(binom(40, 20) == BigInt("137846528820"));
  for (int n = 1; n < 12; ++n)
    for (int k = 1; k < n; ++k)
      CHECK(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
}

TEST_CASE("regime classification") {
  RegimeClassification a = classify_regime(3, 3, 5);
  CHECK(a.regime == RegimeCase::XDependent);
  CHECK(a.hSumAtTop == BigInt(1));
  CHECK(classify_regime(3, 3, 3).regime == RegimeCase::KernelForcedAllX);
  CHECK(classify_regime(5, 2, 2).regime == RegimeCase::NoKernelForced);
  RegimeClassification d = classify_regime(4, 2, 3);
  CHECK(d.regime == RegimeCase::XDependent);
  CHECK(d.hSumAtTop == BigInt(1));
  CHECK(std::string(regime_name(RegimeCase::NoKernelForced)) == "NO_KERNEL_FORCED");
  CHECK(std::string(regime_name(RegimeCase::KernelForcedAllX)) == "KERNEL_FORCED_ALL_X");
  CHECK(std::string(regime_name(RegimeCase::XDependent)) == "X_DEPENDENT");
}

TEST_CASE("smoothness codimension report") {
  SmoothnessReport sr = smoothness_codim_report(3, 4, 2);
  CHECK(sr.familyDim == BigInt(28));
  CHECK(sr.containmentCodim == BigInt(65));
  CHECK(sr.tangentCodim == BigInt(37));

  for (int k = 2; k <= 4; ++k)
    for (int c = 1; c <= k + 1; ++c)
      for (int d = 3; d <= 4; ++d) {
        SmoothnessReport rep = smoothness_codim_report(k, d, c);
        CHECK(rep.familyDim ==
              BigInt((k + 1) * (k + 1) - c * c + 2 * c * (k + 1)));
        CHECK(rep.containmentCodim ==
              BigInt(2) * binom(k + d, d) - binom(k - c + d, k - c));
        CHECK(rep.familyDim + rep.tangentCodim == rep.containmentCodim);
      }

  CHECK_THROWS_AS(smoothness_codim_report(1, 3, 1), Error);  // d < 2 + 2/k
  CHECK_THROWS_AS(smoothness_codim_report(2, 3, 4), Error);  // c > k+1
  CHECK_THROWS_AS(smoothness_codim_report(0, 4, 1), Error);
}

TEST_CASE("tangent codimension from ideals") {
  FermatPlaneIdeals fp = fermat_plane_ideals(4, 2, 3);
  CHECK(tangent_codim(fp.i1, 4) == 19);  // binom(7,3) - 16
  Ideal iint = monomial_ideal_intersection(fp.i1, fp.i2);
  CHECK(tangent_codim(iint, 4) == 37);
  SmoothnessReport sr = smoothness_codim_report(3, 4, 2);
  CHECK(sr.tangentCodim == BigInt(tangent_codim(iint, 4)));

  Ring r = RingCtx::make({"x", "y"});
  Ideal whole = Ideal::make(r, {Polynomial::variable(r, 0), Polynomial::variable(r, 1)});
  CHECK(tangent_codim(whole, 1) == 0);
}

TEST_CASE("complete intersection cycle datum") {
  Ring r = RingCtx::make({"x0", "x1", "x2", "x3"});
  std::vector<Polynomial> g = {Polynomial::variable(r, 0), Polynomial::variable(r, 1)};
  std::vector<Polynomial> h = {parse_polynomial(r, "x2^2"), parse_polynomial(r, "x3^2")};
  CIHodgeDatum datum = CIHodgeDatum::make(1, 3, g, h);
  CHECK(datum.f == parse_polynomial(r, "x0*x2^2 + x1*x3^2"));
  Ideal hi = hodge_ideal_of_ci(datum);
  GradedQuotient q = GradedQuotient::make(hi);
  CHECK(q.socle_degree() == std::optional<int>(2));  // (d-2)(k+1)
  CHECK(q.hilbert(0) == 1);
  CHECK(q.hilbert(1) == 2);
  CHECK(q.hilbert(2) == 1);

  CHECK_THROWS_AS(CIHodgeDatum::make(1, 3, g, {h[0]}), Error);
  CHECK_THROWS_AS(CIHodgeDatum::make(1, 4, g, h), Error);  // degrees sum to 3, not 4
  // not a regular sequence: repeated equation
  CHECK_THROWS_AS(CIHodgeDatum::make(1, 3, {g[0], g[0]}, h), Error);
}

TEST_CASE("plane pair datum and its four ideals") {
  int k = 2, c = 1, d = 3;
  Ring r = RingCtx::make({"x0", "x1", "x2", "x3", "x4", "x5"});
  std::vector<std::vector<Polynomial>> q = {{parse_polynomial(r, "x2")}};
  std::vector<Polynomial> p = {parse_polynomial(r, "x0^2 + x1^2 + x2^2"),
                               parse_polynomial(r, "x3^2")};
  PlanePairDatum datum = PlanePairDatum::make(k, c, d, r, q, p);
  CHECK(datum.f ==
        parse_polynomial(r, "x0*x1*x2 + x4*(x0^2 + x1^2 + x2^2) + x5*x3^2"));

  // the equation vanishes on both planes
  for (int which = 1; which <= 2; ++which) {
    CIHodgeDatum cyc = datum.cycle_datum(which);
    CHECK(cyc.f == datum.f);
    CHECK(cyc.g.size() == 3);
  }

  PlanePairIdeals ide = plane_pair_ideals(datum);
  CHECK(same_ideal(ide.isum, ideal_sum(ide.i1, ide.i2)));
  CHECK(normal_form(datum.f, ide.i1.basis()).is_zero());
  CHECK(normal_form(datum.f, ide.i2.basis()).is_zero());
  GradedQuotient q1 = GradedQuotient::make(ide.i1);
  GradedQuotient q2 = GradedQuotient::make(ide.i2);
  GradedQuotient qs = GradedQuotient::make(ide.isum);
  GradedQuotient qi = GradedQuotient::make(ide.iint);
  int socle = (d - 2) * (k + 1);
  CHECK(q1.socle_degree() == std::optional<int>(socle));
  for (int e = 0; e <= socle; ++e) {
    CHECK(qi.hilbert(e) == q1.hilbert(e) + q2.hilbert(e) - qs.hilbert(e));
    CHECK(q1.hilbert(e) == q1.hilbert(socle - e));
  }
  CHECK(same_ideal(hodge_ideal_of_ci(datum.cycle_datum(1)), ide.i1));

  CHECK_THROWS_AS(PlanePairDatum::make(k, c, d, r, q, {p[0]}), Error);
}

TEST_CASE("fermat coordinate plane ideals") {
  FermatPlaneIdeals fp = fermat_plane_ideals(3, 2, 2);
  CHECK(fp.ring->nvars() == 6);
  CHECK(fp.i1.gens().size() == 6);
  CHECK(fp.i2.gens().size() == 6);
  GradedQuotient q2 = GradedQuotient::make(fp.i2);
  int socle = (3 - 2) * (2 + 1);
  auto top = q2.kbase(socle);
  REQUIRE(top.size() == 1);
  CHECK(top[0] == fp.socle);
  CHECK(same_ideal(fp.isum, ideal_sum(fp.i1, fp.i2)));

  // documented generator shape for i1: c linears, k+1 powers, k+1-c linears
  int linear = 0, powers = 0;
  for (const Polynomial& g : fp.i1.gens()) {
    CHECK(g.terms().size() == 1);
    if (g.degree() == 1)
      ++linear;
    else {
      CHECK(g.degree() == 2);
      ++powers;
    }
  }
  CHECK(linear == 3);  // c + (k+1-c)
  CHECK(powers == 3);  // k+1
}

TEST_CASE("excess criterion") {
  for (int k = 1; k <= 4; ++k)
    for (int c = 1; c <= k + 1; ++c)
      for (int d = 3; d <= 6; ++d) {
        if (static_cast<long>(k) * d < 2L * k + 2) continue;
        bool got = excess_criterion_ci(std::vector<int>(k + 1, 1),
                                       std::vector<int>(c, 1), d);
        CHECK(got == ((c - 1) * (d - 2) > 2));
      }
  CHECK(!excess_criterion_ci({1, 1}, {1}, 9));  // c = 1 never satisfies it
  CHECK(excess_criterion_ci({1, 1, 1}, {1, 1}, 5));
  CHECK(!excess_criterion_ci({1, 1, 1}, {1, 1}, 4));
  CHECK_THROWS_AS(excess_criterion_ci({}, {}, 3), Error);
  CHECK_THROWS_AS(excess_criterion_ci({1}, {1, 1, 1}, 3), Error);
}

TEST_CASE("monomial ideal intersection") {
  Ring r = RingCtx::make({"x", "y", "z"});
  Ideal a = Ideal::make(r, {parse_polynomial(r, "x^2"), parse_polynomial(r, "y")});
  Ideal b = Ideal::make(r, {parse_polynomial(r, "x"), parse_polynomial(r, "z^2")});
  Ideal meet = monomial_ideal_intersection(a, b);
  CHECK(same_ideal(meet, ideal_intersection(a, b)));
  CHECK_THROWS_AS(
      monomial_ideal_intersection(
          Ideal::make(r, {parse_polynomial(r, "x + y")}), b),
      Error);
}

TEST_CASE("deleting variables") {
  Ring r = RingCtx::make({"x", "y", "z"});
  Ideal id = Ideal::make(r, {parse_polynomial(r, "x*y - z^2"),
                             parse_polynomial(r, "y^3")});
  auto [small, image] = reduce_mod_variables(id, {1});
  CHECK(small->nvars() == 2);
  CHECK(small->var_name(0) == "x");
  CHECK(small->var_name(1) == "z");
  CHECK(same_ideal(image, Ideal::make(small, {parse_polynomial(small, "z^2")})));
  CHECK_THROWS_AS(reduce_mod_variables(id, {0, 1, 2}), Error);
  CHECK_THROWS_AS(reduce_mod_variables(id, {7}), Error);
}

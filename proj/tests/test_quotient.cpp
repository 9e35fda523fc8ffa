#include <doctest.h>

#include <vector>

#include "hodge/parser.hpp"
#include "hodge/quotient.hpp"

using namespace hodge;

namespace {

long binom_small(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  long v = 1;
  for (int i = 0; i < k; ++i) v = v * (n - i) / (i + 1);
  return v;
}

}  // namespace

TEST_CASE("monomials of a degree") {
  Ring r = RingCtx::make({"x", "y", "z"});
  for (int d = 0; d <= 5; ++d)
    CHECK(monomials_of_degree(r, d).size() ==
          static_cast<std::size_t>(binom_small(d + 2, 2)));
  auto deg2 = monomials_of_degree(r, 2);
  for (std::size_t i = 0; i + 1 < deg2.size(); ++i)
    CHECK(MonomialOrder::degrevlex().greater(deg2[i], deg2[i + 1], *r));
  for (const Monomial& m : deg2) CHECK(m.deg == 2);

  Ring w = RingCtx::make({"x", "y"}, {1, 2});
  CHECK(monomials_of_degree(w, 4).size() == 3);  // x^4, x^2 y, y^2
}

TEST_CASE("complete intersection quotient") {
  Ring r = RingCtx::make({"x", "y", "z"});
  Ideal ci = Ideal::make(r, {parse_polynomial(r, "x^2"), parse_polynomial(r, "y^3"),
                             parse_polynomial(r, "z^4")});
  GradedQuotient q = GradedQuotient::make(ci);
  CHECK(q.artinian());
  CHECK(q.socle_degree() == std::optional<int>(6));
  auto series = ci_hilbert_series({2, 3, 4}, 3);
  REQUIRE(series.size() == 7);
  std::vector<long> expect = {1, 3, 5, 6, 5, 3, 1};
  for (int e = 0; e <= 6; ++e) {
    CHECK(series[e] == BigInt(expect[e]));
    CHECK(q.hilbert(e) == expect[e]);
    CHECK(q.kbase(e).size() == static_cast<std::size_t>(expect[e]));
  }
  CHECK(q.hilbert(7) == 0);
  CHECK(q.kbase(7).empty());
  REQUIRE(q.kbase(6).size() == 1);
  CHECK(q.kbase(6)[0] == Monomial::from_exponents(*r, {1, 2, 3}));
}

TEST_CASE("hilbert series with fewer degrees than variables") {
  auto s = ci_hilbert_series({2}, 2, 4);
  REQUIRE(s.size() == 5);
  CHECK(s[0] == BigInt(1));
  CHECK(s[1] == BigInt(2));
  CHECK(s[4] == BigInt(2));
  CHECK_THROWS_AS(ci_hilbert_series({2}, 2), Error);
}

TEST_CASE("non artinian quotient") {
  Ring r = RingCtx::make({"x", "y"});
  GradedQuotient q = GradedQuotient::make(Ideal::make(r, {Polynomial::variable(r, 0)}));
  CHECK(!q.artinian());
  CHECK_THROWS_AS(q.socle_degree(), Error);
  CHECK(q.hilbert(5) == 1);  // y^5
  CHECK(q.kbase(3) == std::vector<Monomial>{Monomial::var(*r, 1, 3)});
}

TEST_CASE("quotient by the unit ideal") {
  Ring r = RingCtx::make({"x", "y"});
  GradedQuotient q = GradedQuotient::make(
      Ideal::make(r, {Polynomial::constant(r, Rational(1))}));
  CHECK(q.artinian());
  CHECK(q.hilbert(0) == 0);
  CHECK(!q.socle_degree().has_value());
}

TEST_CASE("largest ideal below a prescribed top") {
  Ring r = RingCtx::make({"x", "y"});
  std::vector<Polynomial> w = {parse_polynomial(r, "x*y")};
  auto pieces = largest_ideal_with_top(w, 2);
  REQUIRE(pieces.size() == 3);
  CHECK(pieces[0].empty());
  CHECK(pieces[1].empty());
  REQUIRE(pieces[2].size() == 1);
  CHECK(pieces[2][0].monic() == parse_polynomial(r, "x*y"));

  // brute force contract at each piece: g * S_{t-e} stays in span(w)
  for (int e = 0; e <= 2; ++e)
    for (const Polynomial& g : pieces[e])
      for (const Monomial& m : monomials_of_degree(r, 2 - e)) {
        Polynomial prod = g.mul_term(m, Rational(1));
        CHECK(prod.coeff_of(Monomial::var(*r, 0, 2)).is_zero());
        CHECK(prod.coeff_of(Monomial::var(*r, 1, 2)).is_zero());
      }

  std::vector<Polynomial> full;
  for (const Monomial& m : monomials_of_degree(r, 2))
    full.push_back(Polynomial::monomial(r, m));
  auto wholePieces = largest_ideal_with_top(full, 2);
  CHECK(wholePieces[0].size() == 1);
  CHECK(wholePieces[1].size() == 2);
  CHECK(wholePieces[2].size() == 3);
}

TEST_CASE("gorenstein top detection") {
  Ring r = RingCtx::make({"x", "y"});
  GradedQuotient ci = GradedQuotient::make(
      Ideal::make(r, {parse_polynomial(r, "x^2"), parse_polynomial(r, "y^3")}));
  CHECK(is_gorenstein_top(ci));
  GradedQuotient lopsided = GradedQuotient::make(
      Ideal::make(r, {parse_polynomial(r, "x^2"), parse_polynomial(r, "x*y"),
                      parse_polynomial(r, "y^3")}));
  CHECK(!is_gorenstein_top(lopsided));
}

TEST_CASE("quotient cache shared between copies") {
  Ring r = RingCtx::make({"x", "y", "z"});
  GradedQuotient q = GradedQuotient::make(Ideal::make(
      r, {parse_polynomial(r, "x^2"), parse_polynomial(r, "y^2"),
          parse_polynomial(r, "z^2")}));
  GradedQuotient copy = q;
  CHECK(copy.hilbert(2) == 3);
  CHECK(q.hilbert(2) == 3);
  CHECK(q.order() == MonomialOrder::degrevlex());
  CHECK(q.basis().elems.size() == 3);
}

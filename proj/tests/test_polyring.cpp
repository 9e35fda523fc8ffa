#include <doctest.h>

#include <vector>

#include "hodge/parser.hpp"
#include "hodge/polynomial.hpp"
#include "hodge/ring.hpp"
#include "hodge/util.hpp"

using namespace hodge;

namespace {

Monomial rand_mono(Rng& rng, const Ring& r, int maxExp = 3) {
  std::vector<int> e(r->nvars());
  for (int i = 0; i < r->nvars(); ++i) e[i] = static_cast<int>(rng.range(0, maxExp));
  return Monomial::from_exponents(*r, e);
}

Polynomial rand_poly(Rng& rng, const Ring& r) {
  std::vector<Term> terms;
  long n = rng.range(1, 5);
  for (long i = 0; i < n; ++i)
    terms.push_back({rand_mono(rng, r), Rational(rng.range(-9, 9), rng.range(1, 4))});
  return Polynomial::make(r, std::move(terms));
}

int sign_of(int v) { return v > 0 ? 1 : v < 0 ? -1 : 0; }

}  // namespace

TEST_CASE("ring construction") {
  Ring r = RingCtx::make({"x", "y", "z"});
  CHECK(r->nvars() == 3);
  CHECK(r->var_name(1) == "y");
  CHECK(r->var_index("z") == 2);
  CHECK(r->all_weights_one());
  Ring w = RingCtx::make({"a", "b"}, {1, 2});
  CHECK(!w->all_weights_one());
  CHECK(w->weight(1) == 2);
  Ring ext = RingCtx::extend(r, "u");
  CHECK(ext->nvars() == 4);
  CHECK(ext->var_name(3) == "u");
  CHECK_THROWS_AS(RingCtx::make({"x", "x"}), Error);
}

TEST_CASE("monomial operations") {
  Ring r = RingCtx::make({"x", "y", "z"});
  Monomial x2 = Monomial::var(*r, 0, 2);
  Monomial y = Monomial::var(*r, 1);
  Monomial m = Monomial::mul(x2, y);
  CHECK(m.deg == 3);
  CHECK(m.total_exponent() == 3);
  CHECK(m.str(*r) == "x^2*y");
  CHECK(Monomial::one().is_one());
  CHECK(Monomial::divides(y, m, 3));
  CHECK(!Monomial::divides(m, y, 3));
  CHECK(Monomial::quotient(m, y) == x2);
  CHECK(Monomial::lcm(*r, x2, m) == m);
  CHECK(Monomial::coprime(x2, Monomial::var(*r, 2), 3));
  CHECK(!Monomial::coprime(m, y, 3));
  CHECK(Monomial::from_exponents(*r, {2, 1, 0}) == m);

  Ring w = RingCtx::make({"a", "b"}, {1, 3});
  Monomial ab = Monomial::from_exponents(*w, {1, 2});
  CHECK(ab.deg == 7);
  CHECK(ab.total_exponent() == 3);
}

TEST_CASE("monomial order properties") {
  Ring r = RingCtx::make({"x0", "x1", "x2", "x3"});
  Rng rng(21);
  std::vector<MonomialOrder> orders = {MonomialOrder::degrevlex(), MonomialOrder::lex(),
                                       MonomialOrder::block(2)};
  for (int iter = 0; iter < 60; ++iter) {
    Monomial a = rand_mono(rng, r), b = rand_mono(rng, r), c = rand_mono(rng, r);
    for (const MonomialOrder& o : orders) {
      CHECK(o.cmp(a, a, *r) == 0);
      CHECK(sign_of(o.cmp(a, b, *r)) == -sign_of(o.cmp(b, a, *r)));
      CHECK(sign_of(o.cmp(a, b, *r)) ==
            sign_of(o.cmp(Monomial::mul(a, c), Monomial::mul(b, c), *r)));
      if (o.greater(a, b, *r) && o.greater(b, c, *r)) CHECK(o.greater(a, c, *r));
    }
    if (a.deg > b.deg) CHECK(MonomialOrder::degrevlex().greater(a, b, *r));
  }

  // the block order eliminates the tail variables
  Monomial tailful = Monomial::var(*r, 3);
  Monomial headOnly = Monomial::from_exponents(*r, {5, 5, 0, 0});
  CHECK(MonomialOrder::block(2).greater(tailful, headOnly, *r));
  CHECK(MonomialOrder::degrevlex().greater(headOnly, tailful, *r));

  // lex compares the first differing exponent
  Monomial x = Monomial::var(*r, 0);
  Monomial y5 = Monomial::var(*r, 1, 5);
  CHECK(MonomialOrder::lex().greater(x, y5, *r));
  CHECK(MonomialOrder::degrevlex().greater(y5, x, *r));
  CHECK(MonomialOrder::degrevlex().str() == "degrevlex");
}

TEST_CASE("polynomial construction and queries") {
  Ring r = RingCtx::make({"x", "y"});
  Monomial mx = Monomial::var(*r, 0);
  Polynomial p = Polynomial::make(r, {{mx, Rational(1)}, {mx, Rational(2)}});
  CHECK(p.size() == 1);
  CHECK(p.coeff_of(mx) == Rational(3));
  CHECK(p.degree() == 1);
  CHECK(Polynomial::zero(r).is_zero());
  CHECK(Polynomial::zero(r).degree() == -1);
  CHECK(Polynomial::constant(r, Rational(5)).degree() == 0);
  Polynomial q = Polynomial::variable(r, 1);
  CHECK(q.leading().m == Monomial::var(*r, 1));

  Polynomial f = parse_polynomial(r, "x^2 + x*y + y + 3");
  CHECK(!f.is_homogeneous());
  CHECK(f.homogeneous_component(2) == parse_polynomial(r, "x^2 + x*y"));
  CHECK(f.homogeneous_component(1) == parse_polynomial(r, "y"));
  CHECK(f.homogeneous_component(5).is_zero());
  Polynomial back = Polynomial::zero(r);
  for (int e = 0; e <= f.degree(); ++e) back = back + f.homogeneous_component(e);
  CHECK(back == f);
  CHECK(parse_polynomial(r, "x^2 + y^2").is_homogeneous());
}

TEST_CASE("polynomial arithmetic properties") {
  Ring r = RingCtx::make({"x", "y", "z"});
  Rng rng(22);
  for (int iter = 0; iter < 25; ++iter) {
    Polynomial a = rand_poly(rng, r), b = rand_poly(rng, r), c = rand_poly(rng, r);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a - a).is_zero());
    CHECK(a.scaled(Rational(2)) == a + a);
    CHECK(Polynomial::pow(a, 3) == a * a * a);
    CHECK((a * b).derivative(0) == a.derivative(0) * b + a * b.derivative(0));
    Monomial m = rand_mono(rng, r);
    CHECK(a.mul_term(m, Rational(3)) ==
          a * Polynomial::monomial(r, m, Rational(3)));
    if (!a.is_zero()) CHECK(a.monic().leading().c == Rational(1));
  }
}

TEST_CASE("euler identity") {
  Ring r = RingCtx::make({"x", "y", "z"});
  Rng rng(23);
  for (int iter = 0; iter < 10; ++iter) {
    Polynomial f = rand_poly(rng, r).homogeneous_component(3);
    Polynomial sum = Polynomial::zero(r);
    for (int i = 0; i < 3; ++i)
      sum = sum + Polynomial::variable(r, i) * f.derivative(i);
    CHECK(sum == f.scaled(Rational(3)));
  }
}

TEST_CASE("substitution") {
  Ring r = RingCtx::make({"x", "y"});
  Polynomial f = parse_polynomial(r, "x^2 - y^2");
  std::vector<Polynomial> idImgs = {Polynomial::variable(r, 0), Polynomial::variable(r, 1)};
  CHECK(substitute(f, r, idImgs) == f);
  std::vector<Polynomial> swapImgs = {Polynomial::variable(r, 1), Polynomial::variable(r, 0)};
  CHECK(substitute(f, r, swapImgs) == -f);
  std::vector<Polynomial> shear = {parse_polynomial(r, "x + y"), Polynomial::variable(r, 1)};
  CHECK(substitute(f, r, shear) == parse_polynomial(r, "x^2 + 2*x*y"));

  Ring big = RingCtx::make({"x", "y", "u"});
  std::vector<Polynomial> embed = {Polynomial::variable(big, 0), Polynomial::variable(big, 1)};
  CHECK(substitute(f, big, embed) == parse_polynomial(big, "x^2 - y^2"));
}

TEST_CASE("jacobian generators") {
  Ring r = RingCtx::make({"x", "y", "z"});
  Polynomial f = parse_polynomial(r, "x^3 + y^3 + z^3");
  auto gens = jacobian_ideal_gens(f);
  REQUIRE(gens.size() == 3);
  CHECK(gens[0] == parse_polynomial(r, "3*x^2"));
  CHECK(gens[2] == parse_polynomial(r, "3*z^2"));
  auto fewer = jacobian_ideal_gens(parse_polynomial(r, "x^2"));
  CHECK(fewer.size() == 1);
  CHECK_THROWS_AS(jacobian_ideal_gens(parse_polynomial(r, "x^2 + y")), Error);
}

TEST_CASE("storage order round trip") {
  Ring r = RingCtx::make({"x", "y"});
  Polynomial f = parse_polynomial(r, "x + y^2");
  CHECK(f.leading().m == Monomial::var(*r, 1, 2));
  Polynomial g = f.with_order(MonomialOrder::lex());
  CHECK(g.leading().m == Monomial::var(*r, 0));
  CHECK(g.with_order(MonomialOrder::degrevlex()) == f);
}

TEST_CASE("parse and print round trip") {
  Ring r = RingCtx::make({"x", "y", "z"});
  Rng rng(24);
  for (int iter = 0; iter < 25; ++iter) {
    Polynomial p = rand_poly(rng, r);
    CHECK(parse_polynomial(r, p.str()) == p);
  }
  CHECK(Polynomial::zero(r).str() == "0");
  CHECK(parse_polynomial(r, "0").is_zero());
  CHECK(parse_polynomial(r, "x^2 - y*z + 1/2*z^2 - 3").str() ==
        "x^2 - y*z + 1/2*z^2 - 3");
  CHECK(parse_polynomial(r, "(x + y)^2") ==
        parse_polynomial(r, "x^2 + 2*x*y + y^2"));
  CHECK(parse_polynomial(r, "x*-y") == parse_polynomial(r, "-x*y"));
  CHECK(parse_polynomial(r, "2/3*x") == Polynomial::variable(r, 0).scaled(Rational(2, 3)));
}

TEST_CASE("parse errors carry positions") {
  Ring r = RingCtx::make({"x", "y"});
  auto pos_of = [&](const std::string& text) {
    try {
      parse_polynomial(r, text);
    } catch (const ParseError& e) {
      return e.pos;
    }
    return std::size_t{0};
  };
  CHECK(pos_of("x^2 + q") == 7);
  CHECK(pos_of("x + ") == 5);
  CHECK(pos_of("x ^ y") == 5);
  CHECK(pos_of("(x + y") == 7);
  CHECK(pos_of("x0") == 1);
  CHECK(pos_of("2x") == 2);
  CHECK(pos_of("1/0") == 3);
  try {
    parse_polynomial(r, "x^2 + q");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("position 7") != std::string::npos);
    CHECK(std::string(e.what()).find("unknown variable 'q'") != std::string::npos);
  }
}

TEST_CASE("weighted grading") {
  Ring w = RingCtx::make({"x", "y"}, {1, 2});
  Polynomial f = parse_polynomial(w, "x^2 + y");
  CHECK(f.is_homogeneous());
  CHECK(f.degree() == 2);
  CHECK(parse_polynomial(w, "x*y").degree() == 3);
}

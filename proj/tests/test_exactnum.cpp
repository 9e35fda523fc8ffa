#include <doctest.h>

#include "hodge/matrix.hpp"
#include "hodge/rational.hpp"
#include "hodge/unipoly.hpp"
#include "hodge/util.hpp"

using namespace hodge;

namespace {

BigInt rand_big(Rng& rng) {
  BigInt a(rng.range(-1000000000L, 1000000000L));
  BigInt b(rng.range(1, 1000000000L));
  return a * b + BigInt(rng.range(-999999L, 999999L));
}

Rational rand_rat(Rng& rng) {
  return Rational(rng.range(-500, 500), rng.range(1, 60));
}

RatMatrix rand_mat(Rng& rng, std::size_t n, std::size_t m, long lo = -4, long hi = 4) {
  RatMatrix a(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) a.at(i, j) = Rational(rng.range(lo, hi));
  return a;
}

Rational det3(const RatMatrix& m) {
  auto e = [&](std::size_t i, std::size_t j) { return m.at(i, j); };
  return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) -
         e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
         e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}

}  // namespace

TEST_CASE("bigint arithmetic identities") {
  Rng rng(11);
  for (int iter = 0; iter < 40; ++iter) {
    BigInt a = rand_big(rng), b = rand_big(rng), c = rand_big(rng);
    CHECK(a + b == b + a);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - a).is_zero());
    CHECK(-(-a) == a);
    CHECK(a.abs() >= BigInt(0));
    CHECK(a.top_limb_nonzero());
    CHECK((a.sign() == 0) == (a.limb_count() == 0));
    BigInt s = a;
    s += b;
    s -= b;
    CHECK(s == a);
  }
}

TEST_CASE("bigint gcd lcm divisibility") {
  Rng rng(12);
  for (int iter = 0; iter < 30; ++iter) {
    BigInt a = rand_big(rng), b = rand_big(rng);
    if (a.is_zero() || b.is_zero()) continue;
    BigInt g = BigInt::gcd(a, b), l = BigInt::lcm(a, b);
    CHECK(g > BigInt(0));
    CHECK(a.divisible_by(g));
    CHECK(b.divisible_by(g));
    CHECK(l.divisible_by(a.abs()));
    CHECK(g * l == (a * b).abs());
    CHECK(BigInt::div_exact(a * b, b) == a);
  }
  CHECK(BigInt::gcd(BigInt(0), BigInt(-6)) == BigInt(6));
  CHECK_THROWS_AS(BigInt::div_exact(BigInt(7), BigInt(2)), Error);
  CHECK_THROWS_AS(BigInt::div_exact(BigInt(7), BigInt(0)), Error);
}

TEST_CASE("bigint pow string long") {
  CHECK(BigInt::pow(BigInt(3), 5) == BigInt(243));
  CHECK(BigInt::pow(BigInt(-2), 0) == BigInt(1));
  CHECK(BigInt::pow(BigInt(10), 20).str() == "100000000000000000000");
  CHECK(BigInt("-123456789012345678901234567890").str() ==
        "-123456789012345678901234567890");
  BigInt big = BigInt::pow(BigInt(2), 100);
  CHECK(!big.fits_long());
  CHECK(BigInt(-42).to_long() == -42);
  CHECK(BigInt(5) < BigInt(7));
  CHECK(BigInt(-5) <= BigInt(-5));
  CHECK(BigInt(3) > BigInt(-3));
}

TEST_CASE("rational reduced representation") {
  Rational q(6, -4);
  CHECK(q.num() == BigInt(-3));
  CHECK(q.den() == BigInt(2));
  CHECK(q.str() == "-3/2");
  CHECK(Rational(0, 7).str() == "0");
  CHECK(Rational(8, 2).str() == "4");
  CHECK_THROWS_AS(Rational(1, 0), Error);
  Rng rng(13);
  for (int iter = 0; iter < 40; ++iter) {
    Rational a = rand_rat(rng);
    CHECK(a.den() > BigInt(0));
    CHECK(BigInt::gcd(a.num(), a.den()) == BigInt(1));
  }
}

TEST_CASE("rational field identities") {
  Rng rng(14);
  for (int iter = 0; iter < 40; ++iter) {
    Rational a = rand_rat(rng), b = rand_rat(rng), c = rand_rat(rng);
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a - b) + b == a);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    if (!a.is_zero()) {
      CHECK(a * a.inverse() == Rational(1));
      CHECK(a.inverse().inverse() == a);
    }
    CHECK(Rational::pow(a, 3) == a * a * a);
    CHECK(a.abs() >= Rational(0));
  }
  CHECK_THROWS_AS(Rational(1).inverse() / Rational(0), Error);
  CHECK_THROWS_AS(Rational(0).inverse(), Error);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3) < Rational(3, 4));
}

TEST_CASE("matrix shape and arithmetic") {
  RatMatrix a{{1, 2}, {3, 4}};
  CHECK(a.rows() == 2);
  CHECK(a.cols() == 2);
  CHECK(a.at(1, 0) == Rational(3));
  CHECK(a.transpose().at(0, 1) == Rational(3));
  RatMatrix i2 = RatMatrix::identity(2);
  CHECK(a * i2 == a);
  CHECK(i2 * a == a);
  CHECK(a + a == a.scaled(Rational(2)));
  Rng rng(15);
  for (int iter = 0; iter < 10; ++iter) {
    RatMatrix x = rand_mat(rng, 3, 4), y = rand_mat(rng, 4, 2);
    CHECK((x * y).transpose() == y.transpose() * x.transpose());
  }
}

TEST_CASE("rank determinant kernel") {
  CHECK(rank(RatMatrix{{1, 2, 3}, {2, 4, 6}, {1, 0, 1}}) == 2);
  CHECK(rank(RatMatrix::identity(4)) == 4);
  CHECK(determinant(RatMatrix{{2, 1}, {1, 3}}) == Rational(5));
  CHECK_THROWS_AS(determinant(RatMatrix(2, 3)), Error);
  Rng rng(16);
  for (int iter = 0; iter < 15; ++iter) {
    RatMatrix a = rand_mat(rng, 3, 3), b = rand_mat(rng, 3, 3);
    CHECK(determinant(a) == det3(a));
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
    CHECK(rank(a) == rank(a.transpose()));
    RatMatrix m = rand_mat(rng, 4, 3);
    auto kern = left_kernel_basis(m);
    CHECK(kern.size() == m.rows() - rank(m));
    for (const auto& v : kern)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        Rational dot(0);
        for (std::size_t i = 0; i < m.rows(); ++i) dot += v[i] * m.at(i, j);
        CHECK(dot.is_zero());
      }
  }
}

TEST_CASE("rref") {
  RatMatrix m{{0, 2, 4}, {1, 1, 1}, {1, 3, 5}};
  auto pivots = rref(m);
  CHECK(pivots == std::vector<std::size_t>{0, 1});
  CHECK(m.at(0, 0) == Rational(1));
  CHECK(m.at(0, 1) == Rational(0));
  CHECK(m.at(1, 1) == Rational(1));
  CHECK(m.at(2, 0).is_zero());
  RatMatrix again = m;
  rref(again);
  CHECK(again == m);
}

TEST_CASE("unipoly arithmetic") {
  UniPoly p({Rational(-1), Rational(1)});          // t - 1
  UniPoly q({Rational(2), Rational(0), Rational(1)});  // t^2 + 2
  CHECK((p * q).degree() == 3);
  CHECK((p + q - p) == q);
  CHECK(p.eval(Rational(1)).is_zero());
  CHECK((p * q).eval(Rational(3)) == p.eval(Rational(3)) * q.eval(Rational(3)));
  CHECK((p * q).derivative() == p.derivative() * q + p * q.derivative());
  CHECK(UniPoly::div_exact(p * q, q) == p);
  CHECK_THROWS_AS(UniPoly::div_exact(q, p), Error);
  CHECK(UniPoly::rem(q, p) == UniPoly::constant(Rational(3)));
  CHECK(UniPoly().is_zero());
  CHECK(UniPoly({Rational(1, 2), Rational(0), Rational(-3)}).str() == "-3*t^2 + 1/2");
  UniPoly t = UniPoly::t();
  CHECK(t.degree() == 1);
  CHECK(t.coeff(1) == Rational(1));
}

TEST_CASE("unipoly gcd interpolate") {
  UniPoly a({Rational(-1), Rational(1)});  // t-1
  UniPoly b({Rational(2), Rational(1)});   // t+2
  UniPoly c({Rational(-3), Rational(1)});  // t-3
  CHECK(UniPoly::gcd(a * b, a * c) == a);
  CHECK(UniPoly::gcd(b, c) == UniPoly::constant(Rational(1)));

  UniPoly cubic = a * b * c;
  std::vector<Rational> xs, ys;
  for (long x : {0L, 1L, 2L, 5L}) {
    xs.push_back(Rational(x));
    ys.push_back(cubic.eval(Rational(x)));
  }
  CHECK(interpolate(xs, ys) == cubic);
}

TEST_CASE("pencil determinant two ways") {
  Rng rng(17);
  for (int iter = 0; iter < 8; ++iter) {
    std::size_t n = 3 + iter % 2;
    RatMatrix a1 = rand_mat(rng, n, n), a2 = rand_mat(rng, n, n);
    UniPoly byEval = univariate_det(a1, a2);
    CHECK(byEval == univariate_det_symbolic(a1, a2));
    for (long x : {0L, 2L, -5L})
      CHECK(byEval.eval(Rational(x)) == determinant(a1 + a2.scaled(Rational(x))));
    PencilEliminationResult pe = pencil_generic_rank(a1, a2);
    std::size_t sampled = 0;
    for (long x : {2L, 7L, -11L})
      sampled = std::max(sampled, rank(a1 + a2.scaled(Rational(x))));
    CHECK(pe.generic_rank >= sampled);
    if (!byEval.is_zero()) CHECK(pe.generic_rank == n);
  }
  RatMatrix d1{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}};
  RatMatrix d2{{0, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(pencil_generic_rank(d1, d2).generic_rank == 3);
}

TEST_CASE("root counting") {
  UniPoly t1({Rational(-1), Rational(1)});
  UniPoly t2({Rational(2), Rational(1)});
  UniPoly t3({Rational(-2), Rational(3)});  // 3t-2
  UniPoly tt({Rational(0), Rational(1)});
  CHECK(real_root_count(UniPoly({Rational(1), Rational(0), Rational(1)}) * t1) == 1);
  CHECK(real_root_count(UniPoly({Rational(-2), Rational(0), Rational(1)})) == 2);
  CHECK(real_root_count(t1 * t1 * t2) == 2);

  RationalRoots rr = rational_roots(t1 * t1 * t2 * t3 * tt);
  REQUIRE(rr.roots.size() == 4);
  CHECK(rr.roots[0] == std::pair<Rational, int>(Rational(-2), 1));
  CHECK(rr.roots[1] == std::pair<Rational, int>(Rational(0), 1));
  CHECK(rr.roots[2] == std::pair<Rational, int>(Rational(2, 3), 1));
  CHECK(rr.roots[3] == std::pair<Rational, int>(Rational(1), 2));
  CHECK(rr.residual_degree == 0);
  CHECK(rr.residual_real_roots == 0);
  CHECK(rr.complete);

  RationalRoots irr = rational_roots(UniPoly({Rational(-2), Rational(0), Rational(1)}));
  CHECK(irr.roots.empty());
  CHECK(irr.residual_degree == 2);
  CHECK(irr.residual_real_roots == 2);
}

TEST_CASE("rng determinism") {
  Rng a(99), b(99);
  for (int i = 0; i < 20; ++i) CHECK(a.range(-50, 50) == b.range(-50, 50));
  Rng c(99);
  long first = c.range(0, 1000000);
  Rng d(100);
  bool anyDiff = d.range(0, 1000000) != first;
  for (int i = 0; i < 5 && !anyDiff; ++i) anyDiff = d.range(0, 1000000) != c.range(0, 1000000);
  CHECK(anyDiff);
}

#include <doctest.h>

#include <algorithm>
#include <cstddef>
#include <vector>

#include "hodge/groebner.hpp"
#include "hodge/matrix.hpp"
#include "hodge/pairing.hpp"
#include "hodge/parser.hpp"
#include "hodge/quotient.hpp"
#include "hodge/unipoly.hpp"
#include "hodge/util.hpp"

using namespace hodge;

TEST_CASE("subquotient basis sizes and membership") {
  FermatPlaneIdeals fp = fermat_plane_ideals(3, 2, 5);
  GradedQuotient part = GradedQuotient::make(fp.i2);
  GradedQuotient whole = GradedQuotient::make(fp.isum);
  GroebnerBasis gbSum = fp.isum.basis();
  GroebnerBasis gbPart = fp.i2.basis();
  for (int e = 0; e <= 6; ++e) {
    std::vector<Polynomial> basis = build_subquotient_basis(fp.isum, part, e);
    CHECK(static_cast<int>(basis.size()) == part.hilbert(e) - whole.hilbert(e));
    for (const Polynomial& w : basis) {
      CHECK(normal_form(w, gbSum).is_zero());
      CHECK(!normal_form(w, gbPart).is_zero());
    }
    std::vector<Polynomial> again = build_subquotient_basis(fp.isum, fp.i2, e);
    REQUIRE(again.size() == basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i) CHECK(again[i] == basis[i]);
  }
}

TEST_CASE("gram matrix of a monomial complete intersection") {
  Ring r = RingCtx::make({"x", "y"});
  GradedQuotient q = GradedQuotient::make(
      Ideal::make(r, {parse_polynomial(r, "x^2"), parse_polynomial(r, "y^3")}));
  std::vector<Polynomial> left = {parse_polynomial(r, "x"), parse_polynomial(r, "y")};
  std::vector<Polynomial> right = {parse_polynomial(r, "x*y"),
                                   parse_polynomial(r, "y^2")};
  GramPairing gp = gram_matrix(q, left, right);
  CHECK(gp.leftDegree == 1);
  CHECK(gp.rightDegree == 2);
  CHECK(gp.socle.str(*r) == "x*y^2");
  CHECK(gp.gram == RatMatrix{{0, 1}, {1, 0}});

  RankCertificate cert = full_rank_certificate(gp);
  CHECK(cert.rank == 2);
  REQUIRE(cert.det.has_value());
  CHECK(*cert.det == Rational(-1));
  CHECK(cert.leftKernelDim == 0);

  CHECK_THROWS_AS(gram_matrix(q, {left[0], right[0]}, right), Error);
  CHECK_THROWS_AS(gram_matrix(q, left, left), Error);  // degrees sum to 2, not 3
}

TEST_CASE("rank certificate of a degenerate pairing") {
  Ring r = RingCtx::make({"x", "y"});
  GradedQuotient q = GradedQuotient::make(
      Ideal::make(r, {parse_polynomial(r, "x^2"), parse_polynomial(r, "x*y"),
                      parse_polynomial(r, "y^3")}));
  std::vector<Polynomial> side = {parse_polynomial(r, "x"), parse_polynomial(r, "y")};
  GramPairing gp = gram_matrix(q, side, side);
  CHECK(gp.gram == RatMatrix{{0, 0}, {0, 1}});
  RankCertificate cert = full_rank_certificate(gp);
  CHECK(cert.rank == 1);
  CHECK(*cert.det == Rational(0));
  CHECK(cert.leftKernelDim == 1);
}

TEST_CASE("coordinate plane kernel dimensions") {
  CHECK(fermat_kernel_dim(3, 3, 5) == 1);
  CHECK(fermat_kernel_dim(3, 2, 5) == 4);
  CHECK(fermat_kernel_dim(3, 2, 2) == 1);
  CHECK(fermat_kernel_dim(3, 2, 3) == 2);
  CHECK(fermat_kernel_dim(3, 2, 4) == 3);
  CHECK(fermat_kernel_dim(4, 2, 3) == 1);
  CHECK(fermat_kernel_dim(4, 3, 3) == 0);
  CHECK_THROWS_AS(fermat_kernel_dim(3, 2, 1), Error);  // k*d < 2k + 2
}

TEST_CASE("kernel bound report on a diagonal pair") {
  RatMatrix a1{{1, 0, 0}, {0, 1, 0}, {0, 0, 0}};
  RatMatrix a2{{0, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  KernelBoundReport kb = kernel_bound_check(a1, a2);
  CHECK(kb.dimV == 3);
  CHECK(kb.dimW == 3);
  CHECK(kb.r1 == 2);
  CHECK(kb.r2 == 2);
  CHECK(kb.s1 == 1);
  CHECK(kb.s2 == 1);
  CHECK(kb.restrictedKernel1 == 0);
  CHECK(kb.restrictedKernel2 == 0);
  CHECK(kb.kernelsIndependent);
  CHECK(kb.kernelBound == 1);
  CHECK(kb.genericRank == 3);
  CHECK(kb.kernelBoundHolds);
  CHECK(kb.rankBoundHolds);
}

TEST_CASE("kernel bound report with overlapping kernels") {
  RatMatrix a{{1, 0}, {0, 0}};
  KernelBoundReport kb = kernel_bound_check(a, a);
  CHECK(!kb.kernelsIndependent);
  CHECK(kb.r1 == 1);
  CHECK(kb.genericRank == 1);
  CHECK_THROWS_AS(kernel_bound_check(a, RatMatrix::identity(3)), Error);
}

TEST_CASE("kernel bound report on random pairs") {
  Rng rng(99);
  auto rand_mat = [&](std::size_t rows, std::size_t cols) {
    RatMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j)
        m.at(i, j) = Rational(rng.range(-3, 3));
    return m;
  };
  for (int trial = 0; trial < 12; ++trial) {
    std::size_t n = static_cast<std::size_t>(rng.range(2, 5));
    std::size_t inner = static_cast<std::size_t>(rng.range(1, static_cast<long>(n)));
    RatMatrix a1 = rand_mat(n, inner) * rand_mat(inner, n);  // plant a kernel
    RatMatrix a2 = rand_mat(n, n);
    KernelBoundReport kb = kernel_bound_check(a1, a2);
    CHECK(kb.r1 <= inner);
    CHECK(kb.genericRank >= std::max(kb.r1, kb.r2));
    if (kb.kernelsIndependent) {
      CHECK(kb.kernelBoundHolds);
      CHECK(kb.rankBoundHolds);
    }
  }
}

TEST_CASE("kernel growth one degree up") {
  FermatPlaneIdeals fp = fermat_plane_ideals(3, 2, 5);
  DegreeShiftReport ds = degree_shift_check(fp.i2, fp.isum, 3);
  CHECK(ds.degree == 3);
  CHECK(ds.socleDegree == 6);
  CHECK(ds.kernelAt == 4);
  CHECK(ds.kernelAtNext == 6);
  CHECK(ds.implicationHolds);

  DegreeShiftReport ds2 = degree_shift_check(fp.i2, fp.isum, 2);
  CHECK(ds2.kernelAtNext == ds.kernelAt);
  CHECK(ds2.implicationHolds);

  CHECK_THROWS_AS(degree_shift_check(fp.i2, fp.isum, 6), Error);
}

TEST_CASE("pencil analysis of a synthetic monomial pair") {
  Ring r = RingCtx::make({"x0", "x1", "x2", "x3", "x4", "x5"});
  auto vp = [&](int i, int e) {
    return Polynomial::monomial(r, Monomial::var(*r, i, e));
  };
  Ideal i1 = Ideal::make(
      r, {vp(0, 1), vp(1, 1), vp(2, 2), vp(3, 2), vp(4, 2), vp(5, 2)});
  Ideal i2 = Ideal::make(
      r, {vp(0, 2), vp(1, 2), vp(2, 1), vp(3, 1), vp(4, 2), vp(5, 2)});
  PencilReport pr = pencil_analysis(i1, i2, 2);

  CHECK(pr.degree == 2);
  CHECK(pr.socleDegree == 4);
  CHECK(pr.dimLeft == 11);
  CHECK(pr.dimRight == 11);
  CHECK(pr.leftBasis.size() == pr.dimLeft);
  CHECK(pr.rightBasis.size() == pr.dimRight);
  GradedQuotient middle = GradedQuotient::make(ideal_intersection(i1, i2));
  CHECK(middle.hilbert(2) == 11);

  CHECK(pr.a1.rows() == 11);
  CHECK(rank(pr.a1) == pr.rankAtZero);
  CHECK(rank(pr.a2) == pr.rankAtInfinity);
  CHECK(pr.rankAtZero == 6);
  CHECK(pr.rankAtInfinity == 6);
  CHECK(pr.genericRank == 10);
  CHECK(pr.genericRank == pencil_generic_rank(pr.a1, pr.a2).generic_rank);
  CHECK(!pr.proportional);
  CHECK(!pr.detIsDeterminant);
  CHECK(pr.detPoly.str() == "t^5");

  REQUIRE(pr.dropValues.size() == 1);
  CHECK(pr.dropValues[0].value == Rational(0));
  CHECK(pr.dropValues[0].rankAt == 6);
  CHECK(pr.dropValues[0].multiplicity == 5);
  for (const PencilDrop& drop : pr.dropValues) {
    RatMatrix at = pr.a1 + pr.a2.scaled(drop.value);
    CHECK(rank(at) == drop.rankAt);
    CHECK(drop.rankAt < pr.genericRank);
  }
  CHECK(pr.residualDegree == 0);
  CHECK(pr.residualRealRoots == 0);
  CHECK(pr.rootSearchComplete);

  CHECK(pr.subquotientKernel1 == 1);
  CHECK(pr.subquotientKernel2 == 1);
  CHECK(!pr.kernelsVanish);
  CHECK(pr.dropBound == 1);
  GradedQuotient sum = GradedQuotient::make(ideal_sum(i1, i2));
  CHECK(pr.dropBound == sum.hilbert(2));
  CHECK(!pr.boundApplies);
}

TEST_CASE("pencil analysis rejects non artinian input") {
  Ring r = RingCtx::make({"x", "y"});
  Ideal i1 = Ideal::make(r, {parse_polynomial(r, "x")});
  Ideal i2 = Ideal::make(r, {parse_polynomial(r, "y")});
  CHECK_THROWS_AS(pencil_analysis(i1, i2, 1), Error);
}

#include "hodge/pairing.hpp"

#include <algorithm>
#include <map>

#include "hodge/cycles.hpp"
#include "hodge/util.hpp"

namespace hodge {

namespace {

// Keeps a growing RREF; offer() absorbs a vector iff it is independent
// from everything absorbed so far. Deterministic in the offer order.
class IndependenceFilter {
 public:
  bool offer(std::vector<Rational> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const Rational& c = v[pivots_[r]];
      if (c.is_zero()) continue;
      Rational f = c;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] = v[j] - f * rows_[r][j];
    }
    std::size_t p = 0;
    while (p < v.size() && v[p].is_zero()) ++p;
    if (p == v.size()) return false;
    Rational lead = v[p];
    for (auto& x : v) x = x / lead;
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  std::size_t rank() const { return rows_.size(); }

 private:
  std::vector<std::vector<Rational>> rows_;
  std::vector<std::size_t> pivots_;
};

std::map<Monomial, std::size_t> index_of(const std::vector<Monomial>& basis) {
  std::map<Monomial, std::size_t> idx;
  for (std::size_t i = 0; i < basis.size(); ++i) idx.emplace(basis[i], i);
  return idx;
}

std::vector<Rational> coords_over(const Polynomial& nf,
                                  const std::map<Monomial, std::size_t>& idx) {
  std::vector<Rational> v(idx.size());
  for (const auto& term : nf.terms()) {
    auto it = idx.find(term.m);
    check(it != idx.end(), "normal form leaves the standard-monomial span");
    v[it->second] = term.c;
  }
  return v;
}

int side_degree(const std::vector<Polynomial>& side, const Ring& ring,
                const char* which) {
  int deg = -1;
  for (const auto& p : side) {
    check(p.ring() == ring, std::string(which) + " element lives in a different ring");
    check(!p.is_zero() && p.is_homogeneous(),
          std::string(which) + " elements must be nonzero homogeneous");
    if (deg < 0) deg = p.degree();
    check(p.degree() == deg, std::string(which) + " elements have mixed degrees");
  }
  return deg;
}

// rank(a1 + t*a2) at one rational parameter.
std::size_t rank_at(const RatMatrix& a1, const RatMatrix& a2, const Rational& t) {
  return rank(a1 + a2.scaled(t));
}

bool proportional_pair(const RatMatrix& a1, const RatMatrix& a2) {
  for (std::size_t i = 0; i < a1.rows(); ++i)
    for (std::size_t j = 0; j < a1.cols(); ++j)
      if (!a1.at(i, j).is_zero()) {
        Rational s = a2.at(i, j) / a1.at(i, j);
        return a2 == a1.scaled(s);
      }
  return true;  // a1 = 0: the pencil is t*a2
}

RatMatrix rows_matrix(const std::vector<std::vector<Rational>>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  return m;
}

// Stacked bases are independent iff ranks add.
bool kernels_independent(const std::vector<std::vector<Rational>>& b1,
                         const std::vector<std::vector<Rational>>& b2,
                         std::size_t dim) {
  RatMatrix stacked(b1.size() + b2.size(), dim);
  for (std::size_t i = 0; i < b1.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) stacked.at(i, j) = b1[i][j];
  for (std::size_t i = 0; i < b2.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) stacked.at(b1.size() + i, j) = b2[i][j];
  return rank(stacked) == b1.size() + b2.size();
}

}  // namespace

std::vector<Polynomial> build_subquotient_basis(const Ideal& isum,
                                                const GradedQuotient& part,
                                                int degree) {
  const Ring& r = part.ideal().ring();
  check(isum.ring() == r, "both ideals must live in the same ring");
  check(degree >= 0, "degree must be nonnegative");
  const GroebnerBasis& gbSum = isum.basis(part.order());
  for (const auto& g : part.ideal().gens())
    check(normal_form(g, gbSum).is_zero(),
          "the modulus ideal must be contained in the numerator ideal");

  std::vector<Monomial> kb = part.kbase(degree);
  auto idx = index_of(kb);
  const GroebnerBasis& gbPart = part.basis();

  std::vector<Polynomial> out;
  IndependenceFilter filter;
  for (const auto& m : kb) {
    Polynomial pm = Polynomial::monomial(r, m, Rational(1), part.order());
    Polynomial pw = pm - normal_form(pm, gbSum);
    if (pw.is_zero()) continue;
    Polynomial nf = normal_form(pw, gbPart);
    if (nf.is_zero()) continue;
    if (filter.offer(coords_over(nf, idx))) out.push_back(std::move(pw));
  }

  GradedQuotient sumQuot = GradedQuotient::make(isum, part.order());
  check(static_cast<int>(out.size()) == part.hilbert(degree) - sumQuot.hilbert(degree),
        "subquotient dimension mismatch");
  return out;
}

std::vector<Polynomial> build_subquotient_basis(const Ideal& isum, const Ideal& ipart,
                                                int degree, MonomialOrder order) {
  return build_subquotient_basis(isum, GradedQuotient::make(ipart, order), degree);
}

GramPairing gram_matrix(const GradedQuotient& target, std::vector<Polynomial> left,
                        std::vector<Polynomial> right) {
  const Ring& r = target.ideal().ring();
  check(target.artinian(), "socle pairing needs an Artinian quotient");
  auto socleDeg = target.socle_degree();
  check(socleDeg.has_value(), "quotient is the zero ring");
  check(target.hilbert(*socleDeg) == 1, "top piece is not one-dimensional");
  Monomial socle = target.kbase(*socleDeg)[0];

  GramPairing gp;
  gp.target = target;
  gp.socle = socle;
  gp.leftDegree = side_degree(left, r, "left");
  gp.rightDegree = side_degree(right, r, "right");
  if (gp.leftDegree >= 0 && gp.rightDegree >= 0)
    check(gp.leftDegree + gp.rightDegree == *socleDeg,
          "left and right degrees must add up to the socle degree");

  const GroebnerBasis& gb = target.basis();
  RatMatrix g(left.size(), right.size());
  if (!left.empty() && !right.empty()) {
    std::size_t cols = right.size();
    parallel_for(left.size() * cols, [&](std::size_t at) {
      std::size_t i = at / cols, j = at % cols;
      Polynomial nf = normal_form(left[i] * right[j], gb);
      g.at(i, j) = nf.coeff_of(socle);
    });
  }
  gp.left = std::move(left);
  gp.right = std::move(right);
  gp.gram = std::move(g);
  return gp;
}

RankCertificate full_rank_certificate(const GramPairing& gp) {
  RankCertificate out;
  const RatMatrix& m = gp.gram;
  out.rank = (m.rows() == 0 || m.cols() == 0) ? 0 : rank(m);
  if (m.rows() == m.cols())
    out.det = m.rows() == 0 ? Rational(1) : determinant(m);
  out.leftKernelDim = m.rows() - out.rank;
  return out;
}

int fermat_kernel_dim(int d, int c, int k) {
  long beta = static_cast<long>(k) * d - 2 * k - 2;
  check(beta >= 0, "need k*d >= 2k + 2");
  FermatPlaneIdeals f = fermat_plane_ideals(d, c, k);
  GradedQuotient q2 = GradedQuotient::make(f.i2);
  auto left = build_subquotient_basis(f.isum, q2, d);
  auto right = build_subquotient_basis(f.isum, q2, static_cast<int>(beta));
  GramPairing gp = gram_matrix(q2, std::move(left), std::move(right));
  return static_cast<int>(full_rank_certificate(gp).leftKernelDim);
}

PencilReport pencil_analysis(const Ideal& i1, const Ideal& i2, int d) {
  const Ring& r = i1.ring();
  check(i2.ring() == r, "both ideals must live in the same ring");
  GradedQuotient q1 = GradedQuotient::make(i1);
  GradedQuotient q2 = GradedQuotient::make(i2);
  check(q1.artinian() && q2.artinian(), "both quotients must be Artinian");
  auto t1 = q1.socle_degree(), t2 = q2.socle_degree();
  check(t1.has_value() && t2.has_value(), "a quotient is the zero ring");
  check(*t1 == *t2, "socle degrees differ");
  int t = *t1;
  check(q1.hilbert(t) == 1 && q2.hilbert(t) == 1, "top pieces are not one-dimensional");
  check(d >= 0 && d <= t, "degree out of range");

  PencilReport rep;
  rep.degree = d;
  rep.socleDegree = t;

  Ideal isum = ideal_sum(i1, i2);
  GradedQuotient qsum = GradedQuotient::make(isum);
  Monomial socle1 = q1.kbase(t)[0];
  Monomial socle2 = q2.kbase(t)[0];
  const GroebnerBasis& gb1 = i1.basis();
  const GroebnerBasis& gb2 = i2.basis();

  // Representatives of (S/(I1 cap I2))_a: a monomial is kept iff the pair
  // of its normal forms mod I1 and mod I2 is new. The resulting count must
  // be h1(a) + h2(a) - hsum(a).
  auto middle_basis = [&](int a) {
    auto idx1 = index_of(q1.kbase(a));
    auto idx2 = index_of(q2.kbase(a));
    std::vector<Monomial> kept;
    IndependenceFilter filter;
    for (const auto& m : monomials_of_degree(r, a, q1.order())) {
      Polynomial pm = Polynomial::monomial(r, m, Rational(1), q1.order());
      std::vector<Rational> v = coords_over(normal_form(pm, gb1), idx1);
      std::vector<Rational> w = coords_over(normal_form(pm, gb2), idx2);
      v.insert(v.end(), w.begin(), w.end());
      if (filter.offer(std::move(v))) kept.push_back(m);
    }
    check(kept.size() == idx1.size() + idx2.size() -
                             static_cast<std::size_t>(qsum.hilbert(a)),
          "Hilbert values of the pair do not match the intersection");
    return kept;
  };
  rep.leftBasis = middle_basis(d);
  rep.rightBasis = middle_basis(t - d);
  rep.dimLeft = rep.leftBasis.size();
  rep.dimRight = rep.rightBasis.size();

  RatMatrix a1(rep.dimLeft, rep.dimRight), a2(rep.dimLeft, rep.dimRight);
  if (rep.dimLeft > 0 && rep.dimRight > 0) {
    std::size_t cols = rep.dimRight;
    parallel_for(rep.dimLeft * cols, [&](std::size_t at) {
      std::size_t i = at / cols, j = at % cols;
      Polynomial prod = Polynomial::monomial(
          r, Monomial::mul(rep.leftBasis[i], rep.rightBasis[j]), Rational(1),
          q1.order());
      a1.at(i, j) = normal_form(prod, gb1).coeff_of(socle1);
      a2.at(i, j) = normal_form(prod, gb2).coeff_of(socle2);
    });
  }
  rep.a1 = a1;
  rep.a2 = a2;

  rep.rankAtZero = rank(a1);
  rep.rankAtInfinity = rank(a2);
  check(rep.rankAtZero == static_cast<std::size_t>(q1.hilbert(d)),
        "pairing of the first quotient is degenerate (quotient not Gorenstein)");
  check(rep.rankAtInfinity == static_cast<std::size_t>(q2.hilbert(d)),
        "pairing of the second quotient is degenerate (quotient not Gorenstein)");

  auto pe = pencil_generic_rank(a1, a2);
  rep.genericRank = pe.generic_rank;
  rep.proportional = proportional_pair(a1, a2);
  bool square = rep.dimLeft == rep.dimRight;
  if (square && rep.dimLeft == 0) {
    rep.detPoly = UniPoly::constant(Rational(1));
    rep.detIsDeterminant = true;
  } else if (square && rep.genericRank == rep.dimLeft) {
    rep.detPoly = univariate_det_symbolic(a1, a2);
    rep.detIsDeterminant = true;
  } else {
    rep.detPoly = pe.pivot_minor;
  }

  // Any rank drop forces every maximal-rank minor of the pencil to vanish,
  // detPoly among them, so its roots list every candidate parameter.
  if (!rep.detPoly.is_zero() && rep.detPoly.degree() > 0) {
    RationalRoots rr = rational_roots(rep.detPoly);
    for (const auto& [root, mult] : rr.roots) {
      std::size_t rk = rank_at(a1, a2, root);
      if (rk < rep.genericRank) rep.dropValues.push_back({root, rk, mult});
    }
    rep.residualDegree = rr.residual_degree;
    rep.residualRealRoots = rr.residual_real_roots;
    rep.rootSearchComplete = rr.complete;
  }

  if (!rep.detPoly.is_zero()) {
    Rational sample(1);
    while (rep.detPoly.eval(sample).is_zero()) sample = sample + Rational(1);
    check(rank_at(a1, a2, sample) == rep.genericRank,
          "generic rank disagrees with a sampled specialization");
  }

  auto subq_kernel = [&](const GradedQuotient& qj) {
    auto left = build_subquotient_basis(isum, qj, d);
    auto right = build_subquotient_basis(isum, qj, t - d);
    GramPairing gp = gram_matrix(qj, std::move(left), std::move(right));
    return full_rank_certificate(gp).leftKernelDim;
  };
  rep.subquotientKernel1 = subq_kernel(q1);
  rep.subquotientKernel2 = subq_kernel(q2);
  rep.kernelsVanish = rep.subquotientKernel1 == 0 && rep.subquotientKernel2 == 0;
  rep.dropBound = qsum.hilbert(d);
  rep.boundApplies = rep.kernelsVanish && t == 2 * d;

  // The kernel of psi_j restricted to ker(psi_i) x rker(psi_i) is the same
  // pairing as the subquotient one computed from the ideals; the two paths
  // must agree.
  KernelBoundReport kb = kernel_bound_check(a1, a2);
  check(kb.kernelsIndependent, "one-sided kernels of the pencil overlap");
  check(kb.restrictedKernel1 == rep.subquotientKernel2 &&
            kb.restrictedKernel2 == rep.subquotientKernel1,
        "matrix-side and ideal-side restricted kernels disagree");

  if (rep.boundApplies) {
    check(rep.genericRank == rep.dimLeft,
          "vanishing kernels must force generic full rank");
    long nonzero = 0;
    for (const auto& drop : rep.dropValues)
      if (!drop.value.is_zero()) ++nonzero;
    check(nonzero <= rep.dropBound, "more rank drops than the kernel bound allows");
  }
  return rep;
}

KernelBoundReport kernel_bound_check(const RatMatrix& a1, const RatMatrix& a2) {
  check(a1.rows() == a2.rows() && a1.cols() == a2.cols(),
        "forms must share the spaces");
  KernelBoundReport rep;
  rep.dimV = a1.rows();
  rep.dimW = a1.cols();
  rep.r1 = rank(a1);
  rep.r2 = rank(a2);

  auto v1 = left_kernel_basis(a1);
  auto v2 = left_kernel_basis(a2);
  auto w1 = left_kernel_basis(a1.transpose());
  auto w2 = left_kernel_basis(a2.transpose());
  rep.kernelsIndependent = kernels_independent(v1, v2, rep.dimV) &&
                           kernels_independent(w1, w2, rep.dimW);

  // s_i = rank of the other form on ker_i x rker_i, via B a_j C^T.
  auto restricted_rank = [&](const std::vector<std::vector<Rational>>& vb,
                             const std::vector<std::vector<Rational>>& wb,
                             const RatMatrix& other) {
    if (vb.empty() || wb.empty()) return static_cast<std::size_t>(0);
    RatMatrix b = rows_matrix(vb, rep.dimV);
    RatMatrix c = rows_matrix(wb, rep.dimW);
    return rank(b * other * c.transpose());
  };
  rep.s1 = restricted_rank(v1, w1, a2);
  rep.s2 = restricted_rank(v2, w2, a1);
  rep.restrictedKernel1 = v1.size() - rep.s1;
  rep.restrictedKernel2 = v2.size() - rep.s2;

  rep.kernelBound = static_cast<long>(rep.r1 + rep.r2) - static_cast<long>(rep.dimW);
  rep.genericRank = pencil_generic_rank(a1, a2).generic_rank;
  rep.kernelBoundHolds =
      static_cast<long>(rep.restrictedKernel1) <= rep.kernelBound &&
      static_cast<long>(rep.restrictedKernel2) <= rep.kernelBound;
  rep.rankBoundHolds =
      rep.genericRank >= rep.r1 + rep.s1 && rep.genericRank >= rep.r2 + rep.s2;
  if (rep.kernelsIndependent) {
    check(rep.kernelBoundHolds, "restricted kernel exceeds its bound");
    check(rep.rankBoundHolds, "generic rank falls below a restricted-rank bound");
  }
  return rep;
}

DegreeShiftReport degree_shift_check(const Ideal& ipart, const Ideal& jsum, int degree) {
  check(jsum.ring() == ipart.ring(), "both ideals must live in the same ring");
  GradedQuotient q = GradedQuotient::make(ipart);
  check(q.artinian(), "quotient must be Artinian");
  auto socleDeg = q.socle_degree();
  check(socleDeg.has_value(), "quotient is the zero ring");
  int t = *socleDeg;
  check(q.hilbert(t) == 1, "top piece is not one-dimensional");
  check(degree >= 0 && degree <= t - 1, "degree must lie in [0, socle - 1]");

  Ideal sum = ideal_sum(jsum, ipart);
  auto kernel_at = [&](int a) {
    auto left = build_subquotient_basis(sum, q, a);
    auto right = build_subquotient_basis(sum, q, t - a);
    GramPairing gp = gram_matrix(q, std::move(left), std::move(right));
    return full_rank_certificate(gp).leftKernelDim;
  };

  DegreeShiftReport rep;
  rep.degree = degree;
  rep.socleDegree = t;
  rep.kernelAt = kernel_at(degree);
  rep.kernelAtNext = kernel_at(degree + 1);
  rep.implicationHolds = rep.kernelAt == 0 || rep.kernelAtNext > 0;
  check(rep.implicationHolds, "kernel fails to persist one degree up");
  return rep;
}

bool is_gorenstein_top(const GradedQuotient& q) {
  if (!q.artinian()) return false;
  auto socleDeg = q.socle_degree();
  if (!socleDeg.has_value()) return false;
  int t = *socleDeg;
  if (q.hilbert(t) != 1) return false;
  const Ring& r = q.ideal().ring();
  for (int e = 0; e * 2 <= t; ++e) {
    auto kbL = q.kbase(e);
    auto kbR = q.kbase(t - e);
    if (kbL.size() != kbR.size()) return false;
    auto as_polys = [&](const std::vector<Monomial>& ms) {
      std::vector<Polynomial> ps;
      ps.reserve(ms.size());
      for (const auto& m : ms)
        ps.push_back(Polynomial::monomial(r, m, Rational(1), q.order()));
      return ps;
    };
    GramPairing gp = gram_matrix(q, as_polys(kbL), as_polys(kbR));
    if (full_rank_certificate(gp).rank != kbL.size()) return false;
  }
  return true;
}

}  // namespace hodge

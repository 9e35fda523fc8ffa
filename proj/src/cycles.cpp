#include "hodge/cycles.hpp"

#include <algorithm>
#include <set>

namespace hodge {

namespace {

Polynomial var_poly(const Ring& r, int i, int exp = 1) {
  return Polynomial::monomial(r, Monomial::var(*r, i, exp));
}

void assert_artinian_gorenstein_numerics(const Ideal& ideal, int socle_expected) {
  GradedQuotient q = GradedQuotient::make(ideal);
  check(q.artinian(), "quotient is not Artinian");
  auto socle = q.socle_degree();
  check(socle.has_value() && *socle == socle_expected, "unexpected socle degree");
  check(q.hilbert(*socle) == 1, "top piece is not one-dimensional");
  for (int e = 0; e <= *socle; ++e)
    check(q.hilbert(e) == q.hilbert(*socle - e), "Hilbert function is not symmetric");
}

}  // namespace

BigInt binom(long n, long r) {
  if (n < 0 || r < 0 || r > n) return BigInt(0);
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return BigInt::from_raw(out);
}

CIHodgeDatum CIHodgeDatum::make(int k, int d, std::vector<Polynomial> g,
                                std::vector<Polynomial> h) {
  check(k >= 1, "need k >= 1");
  check(d >= 2, "need degree >= 2");
  check(g.size() == static_cast<std::size_t>(k + 1) && h.size() == g.size(),
        "need k+1 cycle equations and k+1 cofactors");
  const Ring& r = g.front().ring();
  for (std::size_t i = 0; i < g.size(); ++i) {
    check(g[i].ring().get() == r.get() && h[i].ring().get() == r.get(),
          "datum polynomials from different rings");
    check(!g[i].is_zero() && g[i].is_homogeneous(), "cycle equations must be homogeneous");
    check(!h[i].is_zero() && h[i].is_homogeneous(), "cofactors must be homogeneous");
    check(g[i].degree() + h[i].degree() == d, "degree split must sum to d");
  }
  CIHodgeDatum datum;
  datum.k = k;
  datum.d = d;
  datum.f = Polynomial::zero(r);
  for (std::size_t i = 0; i < g.size(); ++i) datum.f = datum.f + g[i] * h[i];
  check(!datum.f.is_zero() && datum.f.is_homogeneous() && datum.f.degree() == d,
        "assembled hypersurface equation must be homogeneous of degree d");
  // Regular-sequence spot check: Hilbert values of S/<g> against the
  // predicted series, through the socle degree of S/<g,h>.
  int bound = (d - 2) * (k + 1);
  std::vector<int> gdeg;
  for (const auto& p : g) gdeg.push_back(p.degree());
  std::vector<BigInt> series = ci_hilbert_series(gdeg, r->nvars(), bound);
  GradedQuotient qg = GradedQuotient::make(Ideal::make(r, g));
  for (int t = 0; t <= bound; ++t)
    check(BigInt(qg.hilbert(t)) == series[t], "cycle equations are not a regular sequence");
  datum.g = std::move(g);
  datum.h = std::move(h);
  return datum;
}

Ideal hodge_ideal_of_ci(const CIHodgeDatum& datum) {
  const Ring& r = datum.g.front().ring();
  std::vector<Polynomial> gens = datum.g;
  gens.insert(gens.end(), datum.h.begin(), datum.h.end());
  Ideal ideal = Ideal::make(r, std::move(gens));
  assert_artinian_gorenstein_numerics(ideal, (datum.d - 2) * (datum.k + 1));
  return ideal;
}

PlanePairDatum PlanePairDatum::make(int k, int c, int d, Ring ring,
                                    std::vector<std::vector<Polynomial>> q,
                                    std::vector<Polynomial> p) {
  check(k >= 1 && c >= 1 && c <= k + 1, "need 1 <= c <= k+1");
  check(d >= 2, "need degree >= 2");
  check(ring->nvars() == 2 * k + 2, "plane pair lives in 2k+2 coordinates");
  check(q.size() == static_cast<std::size_t>(c), "mixing grid must be c x c");
  for (const auto& row : q) {
    check(row.size() == static_cast<std::size_t>(c), "mixing grid must be c x c");
    for (const auto& entry : row) {
      check(entry.ring().get() == ring.get(), "grid entry from a different ring");
      check(entry.is_zero() || (entry.is_homogeneous() && entry.degree() == d - 2),
            "grid entries must be homogeneous of degree d-2");
    }
  }
  check(p.size() == static_cast<std::size_t>(k + 1 - c), "need k+1-c tail cofactors");
  for (const auto& entry : p) {
    check(entry.ring().get() == ring.get(), "tail cofactor from a different ring");
    check(entry.is_zero() || (entry.is_homogeneous() && entry.degree() == d - 1),
          "tail cofactors must be homogeneous of degree d-1");
  }
  PlanePairDatum datum;
  datum.k = k;
  datum.c = c;
  datum.d = d;
  datum.ring = ring;
  datum.f = Polynomial::zero(ring);
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j)
      datum.f = datum.f + var_poly(ring, i) * var_poly(ring, c + j) * q[i][j];
  for (int s = 0; s < k + 1 - c; ++s)
    datum.f = datum.f + var_poly(ring, k + c + 1 + s) * p[s];
  check(!datum.f.is_zero() && datum.f.is_homogeneous() && datum.f.degree() == d,
        "assembled equation must be homogeneous of degree d");
  // f vanishes on both planes: substituting zero for either plane's
  // equations kills it.
  for (int which = 1; which <= 2; ++which) {
    std::vector<Polynomial> images;
    for (int i = 0; i < 2 * k + 2; ++i) images.push_back(var_poly(ring, i));
    for (int i = 0; i < c; ++i) images[which == 1 ? i : c + i] = Polynomial::zero(ring);
    for (int i = k + c + 1; i <= 2 * k + 1; ++i) images[i] = Polynomial::zero(ring);
    check(substitute(datum.f, ring, images).is_zero(), "equation does not vanish on a plane");
  }
  datum.q = std::move(q);
  datum.p = std::move(p);
  return datum;
}

CIHodgeDatum PlanePairDatum::cycle_datum(int which) const {
  check(which == 1 || which == 2, "plane index is 1 or 2");
  std::vector<Polynomial> g, h;
  for (int i = 0; i < c; ++i) {
    g.push_back(var_poly(ring, which == 1 ? i : c + i));
    Polynomial cof = Polynomial::zero(ring);
    for (int j = 0; j < c; ++j)
      cof = cof + var_poly(ring, which == 1 ? c + j : j) * (which == 1 ? q[i][j] : q[j][i]);
    h.push_back(cof);
  }
  for (int s = 0; s < k + 1 - c; ++s) {
    g.push_back(var_poly(ring, k + c + 1 + s));
    h.push_back(p[s]);
  }
  CIHodgeDatum datum = CIHodgeDatum::make(k, d, std::move(g), std::move(h));
  check(datum.f == f, "cycle datum does not reassemble the hypersurface equation");
  return datum;
}

PlanePairIdeals plane_pair_ideals(const PlanePairDatum& datum) {
  const Ring& r = datum.ring;
  int k = datum.k, c = datum.c, d = datum.d;
  PlanePairIdeals out;
  out.i1 = hodge_ideal_of_ci(datum.cycle_datum(1));
  out.i2 = hodge_ideal_of_ci(datum.cycle_datum(2));

  std::vector<Polynomial> sum_gens;
  for (int i = 0; i < 2 * c; ++i) sum_gens.push_back(var_poly(r, i));
  for (int i = k + c + 1; i <= 2 * k + 1; ++i) sum_gens.push_back(var_poly(r, i));
  for (const auto& entry : datum.p)
    if (!entry.is_zero()) sum_gens.push_back(entry);
  out.isum = Ideal::make(r, std::move(sum_gens));

  std::vector<Polynomial> int_gens;
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j)
      int_gens.push_back(var_poly(r, i) * var_poly(r, c + j));
  for (int i = 0; i < c; ++i) {
    Polynomial row = Polynomial::zero(r);
    Polynomial col = Polynomial::zero(r);
    for (int j = 0; j < c; ++j) {
      row = row + var_poly(r, c + j) * datum.q[i][j];
      col = col + var_poly(r, j) * datum.q[j][i];
    }
    int_gens.push_back(row);
    int_gens.push_back(col);
  }
  for (int i = k + c + 1; i <= 2 * k + 1; ++i) int_gens.push_back(var_poly(r, i));
  for (const auto& entry : datum.p)
    if (!entry.is_zero()) int_gens.push_back(entry);
  out.iint = Ideal::make(r, std::move(int_gens));

  // sum(i1, i2) and the displayed sum have the same reduced basis.
  {
    const auto& lhs = ideal_sum(out.i1, out.i2).basis();
    const auto& rhs = out.isum.basis();
    check(lhs.elems == rhs.elems, "displayed sum differs from i1 + i2");
  }
  // Containments, by normal form.
  for (const auto* target : {&out.i1, &out.i2}) {
    const GroebnerBasis& gb = target->basis();
    check(normal_form(datum.f, gb).is_zero(), "equation is not in a cycle ideal");
    for (const auto& gen : out.iint.gens())
      check(normal_form(gen, gb).is_zero(), "intersection generator outside a cycle ideal");
  }
  // Hilbert identity through the socle degree.
  {
    GradedQuotient q1 = GradedQuotient::make(out.i1);
    GradedQuotient q2 = GradedQuotient::make(out.i2);
    GradedQuotient qs = GradedQuotient::make(out.isum);
    GradedQuotient qi = GradedQuotient::make(out.iint);
    for (int t = 0; t <= (d - 2) * (k + 1); ++t)
      check(qi.hilbert(t) == q1.hilbert(t) + q2.hilbert(t) - qs.hilbert(t),
            "intersection Hilbert values break the inclusion-exclusion identity");
  }
  return out;
}

int tangent_codim(const Ideal& iGamma, int d) {
  return GradedQuotient::make(iGamma).hilbert(d);
}

SmoothnessReport smoothness_codim_report(int k, int d, int c) {
  check(k >= 1 && c >= 1 && c <= k + 1, "need 1 <= c <= k+1");
  check(static_cast<long>(k) * d >= 2L * k + 2, "need d >= 2 + 2/k");
  SmoothnessReport rep;
  rep.k = k;
  rep.d = d;
  rep.c = c;
  long kp1 = k + 1;
  rep.familyDim = BigInt(kp1 * kp1 - static_cast<long>(c) * c + 2L * c * kp1);
  rep.containmentCodim = BigInt(2) * binom(k + d, k) - binom(k - c + d, k - c);
  rep.tangentCodim = BigInt(2) * binom(k + d, k) - binom(k - c + d, k - c) -
                     BigInt(kp1 * kp1 + 2L * c * kp1 - static_cast<long>(c) * c);
  check(rep.tangentCodim == rep.containmentCodim - rep.familyDim,
        "codimension bookkeeping out of balance");
  return rep;
}

const char* regime_name(RegimeCase c) {
  switch (c) {
    case RegimeCase::NoKernelForced:
      return "NO_KERNEL_FORCED";
    case RegimeCase::KernelForcedAllX:
      return "KERNEL_FORCED_ALL_X";
    default:
      return "X_DEPENDENT";
  }
}

RegimeClassification classify_regime(int d, int c, int k) {
  check(k >= 1 && c >= 1 && c <= k + 1, "need 1 <= c <= k+1");
  check(static_cast<long>(k) * d >= 2L * k + 2, "need d >= 2 + 2/k");
  RegimeClassification out;
  out.d = d;
  out.c = c;
  out.k = k;
  if ((c - 1) * (d - 2) > 2)
    out.regime = RegimeCase::NoKernelForced;
  else if (d > k * d - 2 * k - 2)
    out.regime = RegimeCase::KernelForcedAllX;
  else
    out.regime = RegimeCase::XDependent;
  std::vector<int> degrees(k + c + 1, 1);
  degrees.insert(degrees.end(), k + 1 - c, d - 1);
  std::vector<BigInt> series = ci_hilbert_series(degrees, 2 * k + 2);
  int top = k * d - 2 * k - 2;
  out.hSumAtTop = top < static_cast<int>(series.size()) ? series[top] : BigInt(0);
  return out;
}

bool excess_criterion_ci(const std::vector<int>& gDegrees,
                         const std::vector<int>& eDegrees, int d) {
  check(!gDegrees.empty(), "need at least one cycle equation degree");
  int k = static_cast<int>(gDegrees.size()) - 1;
  int c = static_cast<int>(eDegrees.size());
  check(c <= k + 1, "more transverse degrees than cycle equations");
  for (int deg : gDegrees) check(deg >= 1 && deg <= d - 1, "cycle equation degree out of range");
  for (int deg : eDegrees) check(deg >= 1 && deg <= d - 1, "transverse degree out of range");
  long lhs = 0;
  for (int i = 0; i < c; ++i) lhs += eDegrees[i] + gDegrees[i];
  bool excess = lhs < static_cast<long>(c - 1) * d;
  if (excess) {
    // Mechanism behind the criterion: the sum quotient's socle falls below
    // the pairing degree kd-2k-2.
    std::vector<int> degrees;
    for (int i = 0; i < c; ++i) degrees.push_back(gDegrees[i]);
    for (int i = 0; i < c; ++i) degrees.push_back(eDegrees[i]);
    for (int i = c; i <= k; ++i) degrees.push_back(gDegrees[i]);
    for (int i = c; i <= k; ++i) degrees.push_back(d - gDegrees[i]);
    std::vector<BigInt> series = ci_hilbert_series(degrees, 2 * k + 2);
    long socle = -1;
    for (long t = static_cast<long>(series.size()) - 1; t >= 0; --t)
      if (series[t].sign() != 0) {
        socle = t;
        break;
      }
    check(socle == (k - c + 1) * static_cast<long>(d) - 2 * k - 2 + lhs,
          "sum quotient socle degree differs from the predicted value");
    check(socle < static_cast<long>(k) * d - 2 * k - 2,
          "excess criterion holds but the socle does not drop");
  }
  return excess;
}

FermatPlaneIdeals fermat_plane_ideals(int d, int c, int k) {
  check(k >= 1 && c >= 1 && c <= k + 1, "need 1 <= c <= k+1");
  check(d >= 2, "need degree >= 2");
  std::vector<std::string> names;
  for (int i = 0; i < 2 * k + 2; ++i) names.push_back("y" + std::to_string(i));
  Ring r = RingCtx::make(names);
  FermatPlaneIdeals out;
  out.d = d;
  out.c = c;
  out.k = k;
  out.ring = r;

  std::vector<Polynomial> g1, g2, gs;
  for (int i = 0; i < c; ++i) g1.push_back(var_poly(r, i));
  for (int i = c; i <= k + c; ++i) g1.push_back(var_poly(r, i, d - 1));
  for (int i = k + c + 1; i <= 2 * k + 1; ++i) g1.push_back(var_poly(r, i));

  for (int i = 0; i < c; ++i) g2.push_back(var_poly(r, i, d - 1));
  for (int i = c; i < 2 * c; ++i) g2.push_back(var_poly(r, i));
  for (int i = 2 * c; i <= k + c; ++i) g2.push_back(var_poly(r, i, d - 1));
  for (int i = k + c + 1; i <= 2 * k + 1; ++i) g2.push_back(var_poly(r, i));

  for (int i = 0; i < 2 * c; ++i) gs.push_back(var_poly(r, i));
  for (int i = 2 * c; i <= k + c; ++i) gs.push_back(var_poly(r, i, d - 1));
  for (int i = k + c + 1; i <= 2 * k + 1; ++i) gs.push_back(var_poly(r, i));

  out.i1 = Ideal::make(r, std::move(g1));
  out.i2 = Ideal::make(r, std::move(g2));
  out.isum = Ideal::make(r, std::move(gs));

  std::vector<int> exps(2 * k + 2, 0);
  for (int i = 0; i < c; ++i) exps[i] = d - 2;
  for (int i = 2 * c; i <= k + c; ++i) exps[i] = d - 2;
  out.socle = Monomial::from_exponents(*r, exps);

  check(ideal_sum(out.i1, out.i2).basis().elems == out.isum.basis().elems,
        "displayed sum differs from i1 + i2");
  int socle_deg = (d - 2) * (k + 1);
  for (const Ideal* ideal : {&out.i1, &out.i2}) {
    GradedQuotient q = GradedQuotient::make(*ideal);
    check(q.artinian() && q.socle_degree() == socle_deg, "unexpected socle degree");
    check(q.hilbert(socle_deg) == 1, "top piece is not one-dimensional");
  }
  auto top2 = GradedQuotient::make(out.i2).kbase(socle_deg);
  check(top2.size() == 1 && top2[0] == out.socle, "socle monomial mismatch");
  return out;
}

Ideal monomial_ideal_intersection(const Ideal& a, const Ideal& b) {
  check(a.ring().get() == b.ring().get(), "intersection across different rings");
  const Ring& r = a.ring();
  int nv = r->nvars();
  std::vector<Monomial> ma, mb;
  for (const auto& p : a.gens()) {
    check(p.terms().size() == 1, "generators must be monomials");
    ma.push_back(p.leading().m);
  }
  for (const auto& p : b.gens()) {
    check(p.terms().size() == 1, "generators must be monomials");
    mb.push_back(p.leading().m);
  }
  std::vector<Monomial> lcms;
  for (const auto& x : ma)
    for (const auto& y : mb) lcms.push_back(Monomial::lcm(*r, x, y));
  std::sort(lcms.begin(), lcms.end());
  lcms.erase(std::unique(lcms.begin(), lcms.end()), lcms.end());
  std::vector<Polynomial> gens;
  for (std::size_t i = 0; i < lcms.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < lcms.size() && minimal; ++j)
      if (i != j && Monomial::divides(lcms[j], lcms[i], nv) && !(lcms[j] == lcms[i] && j > i))
        minimal = false;
    if (minimal) gens.push_back(Polynomial::monomial(r, lcms[i]));
  }
  return Ideal::make(r, std::move(gens));
}

std::pair<Ring, Ideal> reduce_mod_variables(const Ideal& ideal, const std::vector<int>& vars) {
  const Ring& r = ideal.ring();
  std::set<int> deleted(vars.begin(), vars.end());
  for (int v : vars) check(v >= 0 && v < r->nvars(), "variable index out of range");
  std::vector<std::string> names;
  std::vector<int> weights;
  std::vector<int> newIndex(r->nvars(), -1);
  for (int i = 0; i < r->nvars(); ++i)
    if (!deleted.count(i)) {
      newIndex[i] = static_cast<int>(names.size());
      names.push_back(r->var_name(i));
      weights.push_back(r->weight(i));
    }
  check(!names.empty(), "cannot delete every variable");
  Ring nr = RingCtx::make(names, weights);
  std::vector<Polynomial> gens;
  for (const auto& p : ideal.gens()) {
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
      bool keep = true;
      for (int v : vars)
        if (t.m.e[v]) {
          keep = false;
          break;
        }
      if (!keep) continue;
      std::vector<int> exps(names.size(), 0);
      for (int i = 0; i < r->nvars(); ++i)
        if (newIndex[i] >= 0) exps[newIndex[i]] = t.m.e[i];
      terms.push_back({Monomial::from_exponents(*nr, exps), t.c});
    }
    Polynomial image = Polynomial::make(nr, std::move(terms));
    if (!image.is_zero()) gens.push_back(std::move(image));
  }
  return {nr, Ideal::make(nr, std::move(gens))};
}

}  // namespace hodge

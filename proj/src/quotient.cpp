#include "hodge/quotient.hpp"

#include <algorithm>

#include "hodge/matrix.hpp"

namespace hodge {

namespace {

// Depth-first enumeration of monomials of exact weighted degree `target`
// with per-variable exponent caps (-1 for unbounded).
void enumerate_rec(const RingCtx& r, int var, int remaining, const std::vector<int>& caps,
                   const std::vector<int>& tail_max, Monomial& cur,
                   std::vector<Monomial>& out) {
  int nv = r.nvars();
  if (var == nv) {
    if (remaining == 0) {
      cur.deg = 0;
      for (int i = 0; i < nv; ++i) cur.deg += cur.e[i] * r.weight(i);
      out.push_back(cur);
    }
    return;
  }
  if (remaining > tail_max[var]) return;
  int w = r.weight(var);
  int hi = remaining / w;
  if (caps[var] >= 0) hi = std::min(hi, caps[var]);
  for (int k = 0; k <= hi; ++k) {
    cur.e[var] = static_cast<std::uint8_t>(k);
    enumerate_rec(r, var + 1, remaining - k * w, caps, tail_max, cur, out);
  }
  cur.e[var] = 0;
}

std::vector<Monomial> enumerate_degree(const RingCtx& r, int degree,
                                       const std::vector<int>& caps, MonomialOrder ord) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  check(degree <= kMaxExponent * r.nvars(), "degree out of range");
  int nv = r.nvars();
  std::vector<int> tail_max(nv + 1, 0);
  for (int i = nv - 1; i >= 0; --i) {
    long cap = caps[i] >= 0 ? caps[i] : kMaxExponent;
    long add = cap * r.weight(i);
    long total = tail_max[i + 1] + add;
    tail_max[i] = static_cast<int>(std::min<long>(total, 1 << 28));
  }
  Monomial cur;
  enumerate_rec(r, 0, degree, caps, tail_max, cur, out);
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return ord.cmp(a, b, r) > 0; });
  return out;
}

// Exponent caps implied by pure-power leading terms (cap = exponent - 1).
std::vector<int> caps_from_basis(const GroebnerBasis& gb) {
  int nv = gb.ring->nvars();
  std::vector<int> caps(nv, -1);
  for (const auto& e : gb.elems) {
    const Monomial& lt = e.leading().m;
    int var = -1;
    bool pure = true;
    for (int i = 0; i < nv && pure; ++i)
      if (lt.e[i]) {
        if (var >= 0)
          pure = false;
        else
          var = i;
      }
    if (!pure || var < 0) continue;
    int cap = lt.e[var] - 1;
    if (caps[var] < 0 || cap < caps[var]) caps[var] = cap;
  }
  return caps;
}

bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& lts, int nv) {
  for (const auto& lt : lts)
    if (Monomial::divides(lt, m, nv)) return true;
  return false;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(const Ring& r, int degree, MonomialOrder order) {
  std::vector<int> caps(r->nvars(), -1);
  return enumerate_degree(*r, degree, caps, order);
}

GradedQuotient GradedQuotient::make(Ideal ideal, MonomialOrder order) {
  GradedQuotient q;
  q.s_ = std::make_shared<State>();
  q.s_->ideal = std::move(ideal);
  q.s_->ord = order;
  return q;
}

const GroebnerBasis& GradedQuotient::basis() const { return s_->ideal.basis(s_->ord); }

std::vector<Monomial> GradedQuotient::kbase(int degree) const {
  if (degree < 0) return {};
  {
    std::lock_guard<std::mutex> lock(s_->mu);
    auto it = s_->cache.find(degree);
    if (it != s_->cache.end()) return it->second;
  }
  const GroebnerBasis& gb = basis();
  const RingCtx& r = *gb.ring;
  int nv = r.nvars();
  std::vector<Monomial> lts;
  for (const auto& e : gb.elems) lts.push_back(e.leading().m);
  std::vector<Monomial> all = enumerate_degree(r, degree, caps_from_basis(gb), s_->ord);
  std::vector<Monomial> out;
  for (const auto& m : all)
    if (!divisible_by_any(m, lts, nv)) out.push_back(m);
  std::lock_guard<std::mutex> lock(s_->mu);
  return s_->cache.emplace(degree, std::move(out)).first->second;
}

int GradedQuotient::hilbert(int degree) const { return static_cast<int>(kbase(degree).size()); }

bool GradedQuotient::artinian() const { return is_zero_dimensional(basis()); }

std::optional<int> GradedQuotient::socle_degree() const {
  check(artinian(), "socle degree of a non-Artinian quotient");
  const GroebnerBasis& gb = basis();
  const RingCtx& r = *gb.ring;
  std::vector<int> caps = caps_from_basis(gb);
  long bound = 0;
  for (int i = 0; i < r.nvars(); ++i) {
    if (caps[i] < 0) caps[i] = 0;  // unit ideal: LT 1 divides everything
    bound += static_cast<long>(caps[i]) * r.weight(i);
  }
  for (long a = bound; a >= 0; --a)
    if (hilbert(static_cast<int>(a)) > 0) return static_cast<int>(a);
  return std::nullopt;
}

std::vector<BigInt> ci_hilbert_series(const std::vector<int>& degrees, int numVars,
                                      int through) {
  check(numVars >= 1, "series needs at least one variable");
  long natural = 0;
  for (int d : degrees) {
    check(d >= 1, "generator degrees must be positive");
    natural += d - 1;
  }
  long bound;
  if (through >= 0) {
    bound = through;
  } else {
    check(static_cast<int>(degrees.size()) == numVars,
          "series is not a polynomial; pass an explicit bound");
    bound = natural;
  }
  std::vector<BigInt> c(bound + 1, BigInt(0));
  c[0] = BigInt(1);
  for (int d : degrees)  // multiply by (1 - t^d), truncated
    for (long i = bound; i >= d; --i) c[i] = c[i] - c[i - d];
  for (int pass = 0; pass < numVars; ++pass)
    for (long i = 1; i <= bound; ++i) c[i] = c[i] + c[i - 1];
  return c;
}

std::vector<std::vector<Polynomial>> largest_ideal_with_top(const std::vector<Polynomial>& w,
                                                            int t) {
  check(!w.empty(), "empty spanning set");
  const Ring& r = w.front().ring();
  MonomialOrder ord = MonomialOrder::degrevlex();
  for (const auto& p : w) {
    check(p.ring().get() == r.get(), "spanning polynomials from different rings");
    check(!p.is_zero() && p.is_homogeneous() && p.degree() == t,
          "spanning polynomials must be homogeneous of the top degree");
  }
  std::vector<Monomial> topMon = monomials_of_degree(r, t, ord);
  std::map<Monomial, std::size_t> topIndex;
  for (std::size_t i = 0; i < topMon.size(); ++i) topIndex.emplace(topMon[i], i);
  RatMatrix wm(w.size(), topMon.size());
  for (std::size_t i = 0; i < w.size(); ++i)
    for (const auto& term : w[i].terms()) wm.at(i, topIndex.at(term.m)) = term.c;
  // Functionals vanishing on span(w): right kernel of wm.
  std::vector<std::vector<Rational>> ann = left_kernel_basis(wm.transpose());

  std::vector<std::vector<Polynomial>> pieces(t + 1);
  for (int e = 0; e <= t; ++e) {
    std::vector<Monomial> be = monomials_of_degree(r, e, ord);
    std::vector<Monomial> bc = monomials_of_degree(r, t - e, ord);
    if (be.empty()) continue;
    std::vector<std::vector<Rational>> null;
    if (ann.empty()) {
      // span(w) is all of S_t: every polynomial qualifies
      for (std::size_t j = 0; j < be.size(); ++j) {
        std::vector<Rational> unit(be.size(), Rational(0));
        unit[j] = Rational(1);
        null.push_back(std::move(unit));
      }
    } else {
      RatMatrix a(ann.size() * bc.size(), be.size());
      std::size_t row = 0;
      for (const auto& m : bc)
        for (const auto& c : ann) {
          for (std::size_t j = 0; j < be.size(); ++j)
            a.at(row, j) = c[topIndex.at(Monomial::mul(be[j], m))];
          ++row;
        }
      null = left_kernel_basis(a.transpose());
    }
    for (const auto& y : null) {
      std::vector<Term> terms;
      for (std::size_t j = 0; j < be.size(); ++j)
        if (!y[j].is_zero()) terms.push_back({be[j], y[j]});
      pieces[e].push_back(Polynomial::make(r, std::move(terms), ord));
    }
  }

  // Top piece must be exactly span(w).
  {
    std::size_t rk = rank(wm);
    check(pieces[t].size() == rk, "top piece dimension mismatch");
    RatMatrix stacked(pieces[t].size() + w.size(), topMon.size());
    for (std::size_t i = 0; i < pieces[t].size(); ++i)
      for (const auto& term : pieces[t][i].terms())
        stacked.at(i, topIndex.at(term.m)) = term.c;
    for (std::size_t i = 0; i < w.size(); ++i)
      for (const auto& term : w[i].terms())
        stacked.at(pieces[t].size() + i, topIndex.at(term.m)) = term.c;
    check(rank(stacked) == rk, "top piece does not match the spanning set");
  }
  // Closure under multiplication by variables.
  for (int e = 0; e + 1 <= t; ++e) {
    if (pieces[e].empty()) continue;
    std::vector<Monomial> bnext = monomials_of_degree(r, e + 1, ord);
    std::map<Monomial, std::size_t> idx;
    for (std::size_t i = 0; i < bnext.size(); ++i) idx.emplace(bnext[i], i);
    std::vector<Polynomial> shifted;
    for (const auto& g : pieces[e])
      for (int v = 0; v < r->nvars(); ++v)
        shifted.push_back(g.mul_term(Monomial::var(*r, v), Rational(1)));
    RatMatrix base(pieces[e + 1].size(), bnext.size());
    for (std::size_t i = 0; i < pieces[e + 1].size(); ++i)
      for (const auto& term : pieces[e + 1][i].terms())
        base.at(i, idx.at(term.m)) = term.c;
    std::size_t baseRank = rank(base);
    RatMatrix both(base.rows() + shifted.size(), bnext.size());
    for (std::size_t i = 0; i < base.rows(); ++i)
      for (std::size_t j = 0; j < base.cols(); ++j) both.at(i, j) = base.at(i, j);
    for (std::size_t i = 0; i < shifted.size(); ++i)
      for (const auto& term : shifted[i].terms())
        both.at(base.rows() + i, idx.at(term.m)) = term.c;
    check(rank(both) == baseRank, "pieces are not closed under multiplication");
  }
  return pieces;
}

}  // namespace hodge

#include "hodge/groebner.hpp"

#include <algorithm>
#include <set>
#include <utility>

namespace hodge {

namespace {

std::uint32_t support_mask(const Monomial& m, int nvars) {
  std::uint32_t x = 0;
  for (int i = 0; i < nvars; ++i)
    if (m.e[i]) x |= (1u << i);
  return x;
}

// work[head..] - c * (shift * g), where the leading terms cancel by
// construction (g is monic with shift*LT(g) == work[head].m).
std::vector<Term> cancel_leading(const std::vector<Term>& work, std::size_t head,
                                 const Polynomial& g, const Monomial& shift,
                                 const Rational& c, const RingCtx& ctx,
                                 const MonomialOrder& ord) {
  const auto& gt = g.terms();
  std::vector<Term> out;
  out.reserve(work.size() - head + gt.size());
  std::size_t i = head + 1, j = 1;
  while (i < work.size() && j < gt.size()) {
    Monomial gm = Monomial::mul(gt[j].m, shift);
    int cv = ord.cmp(work[i].m, gm, ctx);
    if (cv > 0) {
      out.push_back(work[i++]);
    } else if (cv < 0) {
      out.push_back({gm, -(c * gt[j].c)});
      ++j;
    } else {
      Rational s = work[i].c - c * gt[j].c;
      if (!s.is_zero()) out.push_back({work[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  while (i < work.size()) out.push_back(work[i++]);
  for (; j < gt.size(); ++j) out.push_back({Monomial::mul(gt[j].m, shift), -(c * gt[j].c)});
  return out;
}

// Full reduction of p against (basis, lts, masks), optionally skipping one
// element (used by tail auto-reduction).
Polynomial reduce_full(const Polynomial& p, const std::vector<Polynomial>& basis,
                       const std::vector<Monomial>& lts,
                       const std::vector<std::uint32_t>& masks,
                       const MonomialOrder& ord, std::ptrdiff_t skip = -1) {
  const RingCtx& ctx = *p.ring();
  int nv = ctx.nvars();
  std::vector<Term> work = p.with_order(ord).terms();
  std::vector<Term> out;
  std::size_t head = 0;
  while (head < work.size()) {
    const Term lt = work[head];
    std::uint32_t lmask = support_mask(lt.m, nv);
    std::ptrdiff_t red = -1;
    for (std::size_t k = 0; k < lts.size(); ++k) {
      if (static_cast<std::ptrdiff_t>(k) == skip) continue;
      if (masks[k] & ~lmask) continue;
      if (Monomial::divides(lts[k], lt.m, nv)) {
        red = static_cast<std::ptrdiff_t>(k);
        break;
      }
    }
    if (red < 0) {
      out.push_back(lt);
      ++head;
      continue;
    }
    Monomial shift = Monomial::quotient(lt.m, lts[red]);
    work = cancel_leading(work, head, basis[red], shift, lt.c, ctx, ord);
    head = 0;
  }
  return Polynomial::adopt_sorted(p.ring(), std::move(out), ord);
}

struct Engine {
  Ring ring;
  const RingCtx& ctx;
  MonomialOrder ord;
  std::optional<int> cap;
  std::vector<Polynomial> g;
  std::vector<Monomial> lts;
  std::vector<std::uint32_t> masks;
  // (lcm degree, i, j): the normal selection strategy pops the minimum.
  std::set<std::tuple<int, int, int>> queue;
  std::set<std::pair<int, int>> pending;

  Engine(Ring r, MonomialOrder o, std::optional<int> c)
      : ring(std::move(r)), ctx(*ring), ord(o), cap(c) {}

  Polynomial nf(const Polynomial& p) const { return reduce_full(p, g, lts, masks, ord); }

  void add(Polynomial p) {
    int idx = static_cast<int>(g.size());
    Monomial lt = p.leading().m;
    for (int i = 0; i < idx; ++i) {
      int d = Monomial::lcm(ctx, lts[i], lt).deg;
      if (cap && d > *cap) continue;
      queue.insert({d, i, idx});
      pending.insert({i, idx});
    }
    masks.push_back(support_mask(lt, ctx.nvars()));
    lts.push_back(lt);
    g.push_back(std::move(p));
  }

  bool chain_criterion(int i, int j, const Monomial& lcm_ij) const {
    for (std::size_t k = 0; k < g.size(); ++k) {
      int ki = static_cast<int>(k);
      if (ki == i || ki == j) continue;
      if (!Monomial::divides(lts[k], lcm_ij, ctx.nvars())) continue;
      auto p1 = std::minmax(i, ki);
      auto p2 = std::minmax(j, ki);
      if (!pending.count({p1.first, p1.second}) && !pending.count({p2.first, p2.second}))
        return true;
    }
    return false;
  }

  void run(std::vector<Polynomial> inputs) {
    std::sort(inputs.begin(), inputs.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ord.cmp(a.leading().m, b.leading().m, ctx) < 0;
    });
    for (auto& p : inputs) {
      Polynomial r = nf(p);
      if (!r.is_zero()) add(r.monic());
    }
    while (!queue.empty()) {
      auto [d, i, j] = *queue.begin();
      queue.erase(queue.begin());
      pending.erase({i, j});
      Monomial lcm_ij = Monomial::lcm(ctx, lts[i], lts[j]);
      if (Monomial::coprime(lts[i], lts[j], ctx.nvars())) continue;
      if (chain_criterion(i, j, lcm_ij)) continue;
      Polynomial a = g[i].mul_term(Monomial::quotient(lcm_ij, lts[i]), Rational(1));
      Polynomial b = g[j].mul_term(Monomial::quotient(lcm_ij, lts[j]), Rational(1));
      Polynomial r = nf(a - b);
      if (!r.is_zero()) add(r.monic());
    }
  }

  std::vector<Polynomial> finalize() {
    // Minimal basis: drop elements whose leading monomial is divisible by
    // another's (keeping the first among equals).
    std::vector<bool> keep(g.size(), true);
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = 0; j < g.size() && keep[i]; ++j) {
        if (i == j || !keep[j]) continue;
        if (Monomial::divides(lts[j], lts[i], ctx.nvars())) {
          if (lts[j] == lts[i] && j > i) continue;
          keep[i] = false;
        }
      }
    std::vector<Polynomial> mg;
    std::vector<Monomial> ml;
    std::vector<std::uint32_t> mm;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (keep[i]) {
        mg.push_back(g[i]);
        ml.push_back(lts[i]);
        mm.push_back(masks[i]);
      }
    // Tail reduction yields the unique reduced basis.
    for (std::size_t i = 0; i < mg.size(); ++i)
      mg[i] = reduce_full(mg[i], mg, ml, mm, ord, static_cast<std::ptrdiff_t>(i)).monic();
    std::sort(mg.begin(), mg.end(), [&](const Polynomial& a, const Polynomial& b) {
      return ord.cmp(a.leading().m, b.leading().m, ctx) < 0;
    });
    return mg;
  }
};

}  // namespace

GroebnerBasis buchberger(const Ring& ring, std::vector<Polynomial> gens,
                         MonomialOrder order, std::optional<int> cap) {
  GroebnerBasis gb;
  gb.ring = ring;
  gb.order = order;
  gb.cap = cap;
  std::vector<Polynomial> inputs;
  bool homogeneous = true;
  for (auto& p : gens) {
    if (p.is_zero()) continue;
    check(p.ring().get() == ring.get(), "generator from a different ring");
    homogeneous = homogeneous && p.is_homogeneous();
    inputs.push_back(p.with_order(order));
  }
  check(!cap || homogeneous, "degree-capped bases need homogeneous generators");
  if (inputs.empty()) return gb;
  Engine e(ring, order, cap);
  e.run(std::move(inputs));
  gb.elems = e.finalize();
  // Cheap membership certificate on the way out.
  for (const auto& p : gens) {
    if (p.is_zero() || (cap && p.degree() > *cap)) continue;
    check(normal_form(p, gb).is_zero(), "generator does not reduce to zero against its own basis");
  }
  return gb;
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb) {
  check(p.ring().get() == gb.ring.get(), "normal form against a basis from a different ring");
  if (gb.elems.empty()) return p.with_order(gb.order);
  std::vector<Monomial> lts;
  std::vector<std::uint32_t> masks;
  lts.reserve(gb.elems.size());
  for (const auto& e : gb.elems) {
    lts.push_back(e.leading().m);
    masks.push_back(support_mask(lts.back(), gb.ring->nvars()));
  }
  return reduce_full(p, gb.elems, lts, masks, gb.order);
}

Ideal Ideal::make(Ring r, std::vector<Polynomial> gens) {
  Ideal id;
  id.ring_ = std::move(r);
  id.cache_ = std::make_shared<std::map<Key, GroebnerBasis>>();
  for (auto& p : gens) {
    if (p.is_zero()) continue;
    check(p.ring().get() == id.ring_.get(), "generator from a different ring");
    check(p.is_homogeneous(), "ideal generators must be homogeneous: " + p.str());
    id.gens_.push_back(std::move(p));
  }
  return id;
}

int Ideal::max_gen_degree() const {
  int d = 0;
  for (const auto& p : gens_) d = std::max(d, p.degree());
  return d;
}

const GroebnerBasis& Ideal::basis(MonomialOrder order, std::optional<int> cap) const {
  Key full{order.kind, order.block_start, -1};
  auto hit = cache_->find(full);
  if (hit != cache_->end()) return hit->second;
  Key key{order.kind, order.block_start, cap ? *cap : -1};
  hit = cache_->find(key);
  if (hit != cache_->end()) return hit->second;
  GroebnerBasis gb = buchberger(ring_, gens_, order, cap);
  return cache_->emplace(key, std::move(gb)).first->second;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  check(a.ring().get() == b.ring().get(), "ideal sum across different rings");
  std::vector<Polynomial> gens = a.gens();
  gens.insert(gens.end(), b.gens().begin(), b.gens().end());
  return Ideal::make(a.ring(), std::move(gens));
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
  check(a.ring().get() == b.ring().get(), "ideal intersection across different rings");
  if (a.gens().empty() || b.gens().empty()) return Ideal::make(a.ring(), {});
  const Ring& r = a.ring();
  std::string aux = "u";
  while (r->var_index(aux) >= 0) aux += "_";
  Ring ext = RingCtx::extend(r, aux);
  int n = r->nvars();
  MonomialOrder elim = MonomialOrder::block(n);
  auto into_ext = [&](const Polynomial& p) {
    // Exponent arrays transfer unchanged; only the ring and order differ.
    return Polynomial::make(ext, p.terms(), elim);
  };
  Polynomial u = Polynomial::variable(ext, n, elim);
  Polynomial one_minus_u = Polynomial::constant(ext, Rational(1), elim) - u;
  std::vector<Polynomial> gens;
  for (const auto& p : a.gens()) gens.push_back(u * into_ext(p));
  for (const auto& p : b.gens()) gens.push_back(one_minus_u * into_ext(p));
  GroebnerBasis gb = buchberger(ext, std::move(gens), elim);
  std::vector<Polynomial> result;
  for (const auto& e : gb.elems) {
    if (e.leading().m.e[n]) continue;  // involves u, as does its whole tail
    Polynomial back = Polynomial::make(r, e.terms());
    std::set<int> degs;
    for (const auto& t : back.terms()) degs.insert(t.m.deg);
    for (int d : degs) result.push_back(back.homogeneous_component(d));
  }
  return Ideal::make(r, std::move(result));
}

bool is_zero_dimensional(const GroebnerBasis& gb) {
  check(!gb.truncated(), "zero-dimensionality needs a full basis");
  int n = gb.ring->nvars();
  std::vector<bool> covered(n, false);
  for (const auto& e : gb.elems) {
    const Monomial& lt = e.leading().m;
    if (lt.is_one()) return true;  // unit ideal
    int var = -1;
    bool pure = true;
    for (int i = 0; i < n && pure; ++i)
      if (lt.e[i]) {
        if (var >= 0)
          pure = false;
        else
          var = i;
      }
    if (pure && var >= 0) covered[var] = true;
  }
  for (int i = 0; i < n; ++i)
    if (!covered[i]) return false;
  return true;
}

bool staircase_covers_degree(const Ring& ring, const std::vector<Monomial>& lts, int degree) {
  int n = ring->nvars();
  check(degree >= 0, "staircase query at a negative degree");
  // Leading terms bucketed by their largest variable: a subtree can be
  // pruned as soon as the exponents fixed so far admit a divisor.
  std::vector<std::vector<const Monomial*>> byMax(n);
  for (const Monomial& lt : lts) {
    if (lt.is_one()) return true;
    int mv = -1;
    for (int i = 0; i < n; ++i)
      if (lt.e[i]) mv = i;
    if (mv >= 0) byMax[mv].push_back(&lt);
  }
  Monomial m = Monomial::one();
  // Walks exponent choices for x_var with `left` degree still to place;
  // returns true when some standard (undivisible) monomial survives.
  auto walk = [&](auto&& self, int var, int left) -> bool {
    if (var == n - 1) {
      m.e[var] = static_cast<std::uint8_t>(left);
      for (const Monomial* lt : byMax[var]) {
        bool div = true;
        for (int i = 0; i <= var && div; ++i) div = lt->e[i] <= m.e[i];
        if (div) {
          m.e[var] = 0;
          return false;
        }
      }
      m.e[var] = 0;
      return true;
    }
    for (int e = 0; e <= left; ++e) {
      m.e[var] = static_cast<std::uint8_t>(e);
      bool pruned = false;
      for (const Monomial* lt : byMax[var]) {
        bool div = true;
        for (int i = 0; i <= var && div; ++i) div = lt->e[i] <= m.e[i];
        if (div) {
          pruned = true;
          break;
        }
      }
      if (!pruned && self(self, var + 1, left - e)) {
        m.e[var] = 0;
        return true;
      }
    }
    m.e[var] = 0;
    return false;
  };
  if (n == 0) return !lts.empty();
  bool standardSurvives = walk(walk, 0, degree);
  return !standardSurvives;
}

namespace {

// Buchberger over Z/p, used only to certify staircase coverage. Mirrors
// the rational engine: normal selection, product and chain criteria,
// degree cap for homogeneous input. Tails are kept unreduced since only
// leading terms are consumed.
struct ModTerm {
  Monomial m;
  std::uint64_t c;
};

using ModPoly = std::vector<ModTerm>;  // descending in the order

std::uint64_t mod_mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return (a * b) % p;  // operands below 2^31, no overflow in 64 bits
}

std::uint64_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = mod_mul(r, b, p);
    b = mod_mul(b, b, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t mod_inv(std::uint64_t a, std::uint64_t p) { return mod_pow(a, p - 2, p); }

struct ModEngine {
  const RingCtx& ctx;
  MonomialOrder ord;
  std::uint64_t p;
  int cap;
  std::vector<ModPoly> g;
  std::vector<Monomial> lts;
  std::vector<std::uint32_t> masks;
  std::set<std::tuple<int, int, int>> queue;
  std::set<std::pair<int, int>> pending;

  ModEngine(const RingCtx& c, MonomialOrder o, std::uint64_t prime, int cp)
      : ctx(c), ord(o), p(prime), cap(cp) {}

  ModPoly reduce(ModPoly work) const {
    ModPoly out;
    std::size_t head = 0;
    int nv = ctx.nvars();
    while (head < work.size()) {
      const ModTerm lt = work[head];
      std::uint32_t lmask = support_mask(lt.m, nv);
      std::ptrdiff_t red = -1;
      for (std::size_t k = 0; k < lts.size(); ++k) {
        if (masks[k] & ~lmask) continue;
        if (Monomial::divides(lts[k], lt.m, nv)) {
          red = static_cast<std::ptrdiff_t>(k);
          break;
        }
      }
      if (red < 0) {
        out.push_back(lt);
        ++head;
        continue;
      }
      Monomial shift = Monomial::quotient(lt.m, lts[red]);
      const ModPoly& gr = g[red];
      ModPoly next;
      next.reserve(work.size() - head + gr.size());
      std::size_t i = head + 1, j = 1;
      while (i < work.size() && j < gr.size()) {
        Monomial gm = Monomial::mul(gr[j].m, shift);
        int cv = ord.cmp(work[i].m, gm, ctx);
        if (cv > 0) {
          next.push_back(work[i++]);
        } else if (cv < 0) {
          next.push_back({gm, p - mod_mul(lt.c, gr[j].c, p)});
          ++j;
        } else {
          std::uint64_t s = (work[i].c + p - mod_mul(lt.c, gr[j].c, p)) % p;
          if (s) next.push_back({work[i].m, s});
          ++i;
          ++j;
        }
      }
      while (i < work.size()) next.push_back(work[i++]);
      for (; j < gr.size(); ++j)
        next.push_back({Monomial::mul(gr[j].m, shift), p - mod_mul(lt.c, gr[j].c, p)});
      work = std::move(next);
      head = 0;
    }
    return out;
  }

  void add(ModPoly poly) {
    std::uint64_t inv = mod_inv(poly[0].c, p);
    for (ModTerm& t : poly) t.c = mod_mul(t.c, inv, p);
    int idx = static_cast<int>(g.size());
    Monomial lt = poly[0].m;
    for (int i = 0; i < idx; ++i) {
      int d = Monomial::lcm(ctx, lts[i], lt).deg;
      if (d > cap) continue;
      queue.insert({d, i, idx});
      pending.insert({i, idx});
    }
    masks.push_back(support_mask(lt, ctx.nvars()));
    lts.push_back(lt);
    g.push_back(std::move(poly));
  }

  bool chain_criterion(int i, int j, const Monomial& lcm_ij) const {
    for (std::size_t k = 0; k < g.size(); ++k) {
      int ki = static_cast<int>(k);
      if (ki == i || ki == j) continue;
      if (!Monomial::divides(lts[k], lcm_ij, ctx.nvars())) continue;
      auto p1 = std::minmax(i, ki);
      auto p2 = std::minmax(j, ki);
      if (!pending.count({p1.first, p1.second}) && !pending.count({p2.first, p2.second}))
        return true;
    }
    return false;
  }

  void run(std::vector<ModPoly> inputs) {
    std::sort(inputs.begin(), inputs.end(), [&](const ModPoly& a, const ModPoly& b) {
      return ord.cmp(a[0].m, b[0].m, ctx) < 0;
    });
    for (ModPoly& q : inputs) {
      ModPoly r = reduce(std::move(q));
      if (!r.empty()) add(std::move(r));
    }
    while (!queue.empty()) {
      auto [d, i, j] = *queue.begin();
      queue.erase(queue.begin());
      pending.erase({i, j});
      if (Monomial::coprime(lts[i], lts[j], ctx.nvars())) continue;
      Monomial lcm_ij = Monomial::lcm(ctx, lts[i], lts[j]);
      if (chain_criterion(i, j, lcm_ij)) continue;
      Monomial si = Monomial::quotient(lcm_ij, lts[i]);
      Monomial sj = Monomial::quotient(lcm_ij, lts[j]);
      ModPoly s;
      s.reserve(g[i].size() + g[j].size());
      std::size_t a = 1, b = 1;  // the leading terms cancel by construction
      const ModPoly& gi = g[i];
      const ModPoly& gj = g[j];
      while (a < gi.size() && b < gj.size()) {
        Monomial ma = Monomial::mul(gi[a].m, si);
        Monomial mb = Monomial::mul(gj[b].m, sj);
        int cv = ord.cmp(ma, mb, ctx);
        if (cv > 0) {
          s.push_back({ma, gi[a++].c});
        } else if (cv < 0) {
          s.push_back({mb, p - gj[b++].c});
        } else {
          std::uint64_t v = (gi[a].c + p - gj[b].c) % p;
          if (v) s.push_back({ma, v});
          ++a;
          ++b;
        }
      }
      for (; a < gi.size(); ++a) s.push_back({Monomial::mul(gi[a].m, si), gi[a].c});
      for (; b < gj.size(); ++b) s.push_back({Monomial::mul(gj[b].m, sj), p - gj[b].c});
      ModPoly r = reduce(std::move(s));
      if (!r.empty()) add(std::move(r));
    }
  }
};

std::optional<ModPoly> to_modular(const Polynomial& q, std::uint64_t p) {
  ModPoly out;
  for (const Term& t : q.terms()) {
    const BigInt den = t.c.den();
    std::uint64_t dm = mpz_fdiv_ui(den.raw().get_mpz_t(), p);
    if (dm == 0) return std::nullopt;
    std::uint64_t nm = mpz_fdiv_ui(t.c.num().raw().get_mpz_t(), p);
    std::uint64_t c = mod_mul(nm, mod_inv(dm, p), p);
    if (c) out.push_back({t.m, c});
  }
  return out;
}

}  // namespace

bool modular_zero_dim_certificate(const Ring& ring, const std::vector<Polynomial>& gens) {
  int maxdeg = 0;
  std::vector<Polynomial> inputs;
  for (const Polynomial& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) return false;
    if (g.degree() == 0) return true;
    maxdeg = std::max(maxdeg, g.degree());
    inputs.push_back(g);
  }
  if (inputs.empty()) return false;
  int cap = ring->nvars() * (maxdeg - 1) + 1;
  MonomialOrder ord = MonomialOrder::degrevlex();
  for (std::uint64_t p : {2147483647ull, 2147483629ull}) {
    ModEngine eng(*ring, ord, p, cap);
    std::vector<ModPoly> mod;
    bool ok = true;
    for (const Polynomial& g : inputs) {
      Polynomial q = g.with_order(ord);
      std::optional<ModPoly> mp = to_modular(q, p);
      if (!mp) {
        ok = false;
        break;
      }
      if (!mp->empty()) mod.push_back(std::move(*mp));
    }
    if (!ok) continue;
    eng.run(std::move(mod));
    if (staircase_covers_degree(ring, eng.lts, cap)) return true;
  }
  return false;
}

bool verify_buchberger_criterion(const GroebnerBasis& gb) {
  const RingCtx& ctx = *gb.ring;
  for (std::size_t i = 0; i < gb.elems.size(); ++i)
    for (std::size_t j = i + 1; j < gb.elems.size(); ++j) {
      const Monomial& li = gb.elems[i].leading().m;
      const Monomial& lj = gb.elems[j].leading().m;
      if (Monomial::coprime(li, lj, ctx.nvars())) continue;
      Monomial lcm = Monomial::lcm(ctx, li, lj);
      if (gb.cap && lcm.deg > *gb.cap) continue;
      Polynomial s = gb.elems[i].mul_term(Monomial::quotient(lcm, li), Rational(1)) -
                     gb.elems[j].mul_term(Monomial::quotient(lcm, lj), Rational(1));
      if (!normal_form(s, gb).is_zero()) return false;
    }
  return true;
}

}  // namespace hodge

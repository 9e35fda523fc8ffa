#include "hodge/polynomial.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hodge {

Ring RingCtx::make(std::vector<std::string> names, std::vector<int> weights) {
  check(!names.empty(), "ring needs at least one variable");
  check(static_cast<int>(names.size()) <= kMaxVars, "too many ring variables");
  if (weights.empty()) weights.assign(names.size(), 1);
  check(weights.size() == names.size(), "weight list length mismatch");
  std::set<std::string> seen;
  for (const auto& n : names) {
    check(!n.empty(), "empty variable name");
    check(seen.insert(n).second, "duplicate variable name: " + n);
  }
  for (int w : weights) check(w >= 1, "variable weights must be positive");
  auto ctx = std::shared_ptr<RingCtx>(new RingCtx());
  ctx->names_ = std::move(names);
  ctx->weights_ = std::move(weights);
  ctx->all_one_ = std::all_of(ctx->weights_.begin(), ctx->weights_.end(),
                              [](int w) { return w == 1; });
  return ctx;
}

int RingCtx::var_index(const std::string& name) const {
  for (int i = 0; i < nvars(); ++i)
    if (names_[i] == name) return i;
  return -1;
}

Ring RingCtx::extend(const Ring& r, const std::string& name, int weight) {
  std::vector<std::string> names = r->var_names();
  std::vector<int> weights;
  for (int i = 0; i < r->nvars(); ++i) weights.push_back(r->weight(i));
  names.push_back(name);
  weights.push_back(weight);
  return make(std::move(names), std::move(weights));
}

Monomial Monomial::var(const RingCtx& r, int i, int exp) {
  check(i >= 0 && i < r.nvars(), "variable index out of range");
  check(exp >= 0 && exp <= kMaxExponent, "exponent out of range");
  Monomial m;
  m.e[i] = static_cast<std::uint8_t>(exp);
  m.deg = r.weight(i) * exp;
  return m;
}

Monomial Monomial::from_exponents(const RingCtx& r, const std::vector<int>& exps) {
  check(static_cast<int>(exps.size()) == r.nvars(), "exponent list length mismatch");
  Monomial m;
  for (int i = 0; i < r.nvars(); ++i) {
    check(exps[i] >= 0 && exps[i] <= kMaxExponent, "exponent out of range");
    m.e[i] = static_cast<std::uint8_t>(exps[i]);
    m.deg += r.weight(i) * exps[i];
  }
  return m;
}

Monomial Monomial::mul(const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) {
    int s = a.e[i] + b.e[i];
    check(s <= kMaxExponent, "exponent overflow in monomial product");
    m.e[i] = static_cast<std::uint8_t>(s);
  }
  m.deg = a.deg + b.deg;
  return m;
}

bool Monomial::divides(const Monomial& a, const Monomial& b, int nvars) {
  for (int i = 0; i < nvars; ++i)
    if (a.e[i] > b.e[i]) return false;
  return true;
}

Monomial Monomial::quotient(const Monomial& b, const Monomial& a) {
  Monomial m;
  for (int i = 0; i < kMaxVars; ++i) {
    check(a.e[i] <= b.e[i], "monomial quotient is not a monomial");
    m.e[i] = static_cast<std::uint8_t>(b.e[i] - a.e[i]);
  }
  m.deg = b.deg - a.deg;
  return m;
}

Monomial Monomial::lcm(const RingCtx& r, const Monomial& a, const Monomial& b) {
  Monomial m;
  for (int i = 0; i < r.nvars(); ++i) {
    m.e[i] = std::max(a.e[i], b.e[i]);
    m.deg += r.weight(i) * m.e[i];
  }
  return m;
}

bool Monomial::coprime(const Monomial& a, const Monomial& b, int nvars) {
  for (int i = 0; i < nvars; ++i)
    if (a.e[i] && b.e[i]) return false;
  return true;
}

int Monomial::total_exponent() const {
  int s = 0;
  for (int i = 0; i < kMaxVars; ++i) s += e[i];
  return s;
}

std::string Monomial::str(const RingCtx& r) const {
  if (is_one()) return "1";
  std::ostringstream out;
  bool first = true;
  for (int i = 0; i < r.nvars(); ++i) {
    if (!e[i]) continue;
    if (!first) out << "*";
    out << r.var_name(i);
    if (e[i] > 1) out << "^" << static_cast<int>(e[i]);
    first = false;
  }
  return out.str();
}

namespace {

int cmp_degrevlex_range(const Monomial& a, const Monomial& b, int lo, int hi,
                        const RingCtx& ring) {
  int da = 0, db = 0;
  for (int i = lo; i < hi; ++i) {
    da += ring.weight(i) * a.e[i];
    db += ring.weight(i) * b.e[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (int i = hi - 1; i >= lo; --i)
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
  return 0;
}

}  // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b, const RingCtx& ring) const {
  int n = ring.nvars();
  switch (kind) {
    case OrderKind::Degrevlex: {
      if (a.deg != b.deg) return a.deg < b.deg ? -1 : 1;
      for (int i = n - 1; i >= 0; --i)
        if (a.e[i] != b.e[i]) return a.e[i] < b.e[i] ? 1 : -1;
      return 0;
    }
    case OrderKind::Lex: {
      for (int i = 0; i < n; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i] ? 1 : -1;
      return 0;
    }
    case OrderKind::Block: {
      int c = cmp_degrevlex_range(a, b, block_start, n, ring);
      if (c) return c;
      return cmp_degrevlex_range(a, b, 0, block_start, ring);
    }
  }
  return 0;
}

std::string MonomialOrder::str() const {
  switch (kind) {
    case OrderKind::Degrevlex: return "degrevlex";
    case OrderKind::Lex: return "lex";
    case OrderKind::Block: return "block(" + std::to_string(block_start) + ")";
  }
  return "?";
}

Polynomial Polynomial::zero(Ring r, MonomialOrder o) {
  Polynomial p;
  p.ring_ = std::move(r);
  p.ord_ = o;
  return p;
}

Polynomial Polynomial::make(Ring r, std::vector<Term> terms, MonomialOrder o) {
  check(r != nullptr, "polynomial needs a ring");
  Polynomial p;
  p.ring_ = std::move(r);
  p.ord_ = o;
  std::sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
    return o.cmp(a.m, b.m, *p.ring_) > 0;
  });
  for (auto& t : terms) {
    if (!p.t_.empty() && p.t_.back().m == t.m) {
      p.t_.back().c += t.c;
      if (p.t_.back().c.is_zero()) p.t_.pop_back();
    } else if (!t.c.is_zero()) {
      p.t_.push_back(std::move(t));
    }
  }
  return p;
}

Polynomial Polynomial::constant(Ring r, Rational c, MonomialOrder o) {
  return make(std::move(r), {{Monomial::one(), std::move(c)}}, o);
}

Polynomial Polynomial::variable(Ring r, int i, MonomialOrder o) {
  Monomial m = Monomial::var(*r, i);
  return make(std::move(r), {{m, Rational(1)}}, o);
}

Polynomial Polynomial::monomial(Ring r, Monomial m, Rational c, MonomialOrder o) {
  return make(std::move(r), {{m, std::move(c)}}, o);
}

Polynomial Polynomial::adopt_sorted(Ring r, std::vector<Term> terms, MonomialOrder o) {
  Polynomial p = zero(std::move(r), o);
  p.t_ = std::move(terms);
  return p;
}

const Term& Polynomial::leading() const {
  check(!t_.empty(), "leading term of zero polynomial");
  return t_.front();
}

int Polynomial::degree() const {
  int d = -1;
  for (const auto& t : t_) d = std::max(d, t.m.deg);
  return d;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : t_)
    if (t.m.deg != t_.front().m.deg) return false;
  return true;
}

Polynomial Polynomial::homogeneous_component(int deg) const {
  std::vector<Term> ts;
  for (const auto& t : t_)
    if (t.m.deg == deg) ts.push_back(t);
  return make(ring_, std::move(ts), ord_);
}

Polynomial Polynomial::with_order(MonomialOrder o) const {
  if (o == ord_) return *this;
  return make(ring_, t_, o);
}

namespace {

void require_compatible(const Polynomial& a, const Polynomial& b) {
  check(a.ring().get() == b.ring().get(), "polynomials from different rings");
  check(a.order() == b.order(), "polynomials with different storage orders");
}

}  // namespace

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  require_compatible(a, b);
  const RingCtx& ring = *a.ring();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  while (i < ta.size() && j < tb.size()) {
    int c = a.order().cmp(ta[i].m, tb[j].m, ring);
    if (c > 0) {
      out.push_back(ta[i++]);
    } else if (c < 0) {
      out.push_back(tb[j++]);
    } else {
      Rational s = ta[i].c + tb[j].c;
      if (!s.is_zero()) out.push_back({ta[i].m, std::move(s)});
      ++i;
      ++j;
    }
  }
  while (i < ta.size()) out.push_back(ta[i++]);
  while (j < tb.size()) out.push_back(tb[j++]);
  Polynomial r = Polynomial::zero(a.ring(), a.order());
  return Polynomial::presorted(std::move(r), std::move(out));
}

Polynomial operator-(const Polynomial& a) { return a.scaled(Rational(-1)); }

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_compatible(a, b);
  std::vector<Term> out;
  out.reserve(a.size() * b.size());
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms())
      out.push_back({Monomial::mul(ta.m, tb.m), ta.c * tb.c});
  return Polynomial::make(a.ring(), std::move(out), a.order());
}

Polynomial Polynomial::scaled(const Rational& c) const {
  if (c.is_zero()) return zero(ring_, ord_);
  Polynomial r = *this;
  for (auto& t : r.t_) t.c *= c;
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rational& c) const {
  if (c.is_zero()) return zero(ring_, ord_);
  Polynomial r = *this;
  for (auto& t : r.t_) {
    t.m = Monomial::mul(t.m, m);
    t.c *= c;
  }
  return r;
}

Polynomial Polynomial::pow(const Polynomial& base, unsigned e) {
  Polynomial r = constant(base.ring(), Rational(1), base.order());
  Polynomial b = base;
  while (e) {
    if (e & 1) r = r * b;
    b = b * b;
    e >>= 1;
  }
  return r;
}

Polynomial Polynomial::derivative(int var) const {
  check(var >= 0 && var < ring_->nvars(), "derivative variable out of range");
  std::vector<Term> out;
  for (const auto& t : t_) {
    if (!t.m.e[var]) continue;
    Term d;
    d.c = t.c * Rational(static_cast<long>(t.m.e[var]));
    d.m = t.m;
    d.m.e[var] -= 1;
    d.m.deg -= ring_->weight(var);
    out.push_back(std::move(d));
  }
  return make(ring_, std::move(out), ord_);
}

Polynomial Polynomial::monic() const {
  check(!is_zero(), "monic of zero polynomial");
  return scaled(leading().c.inverse());
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (ring_.get() != o.ring_.get()) return false;
  if (ord_ == o.ord_) {
    if (t_.size() != o.t_.size()) return false;
    for (std::size_t i = 0; i < t_.size(); ++i)
      if (!(t_[i].m == o.t_[i].m) || t_[i].c != o.t_[i].c) return false;
    return true;
  }
  return (*this - o.with_order(ord_)).is_zero();
}

Rational Polynomial::coeff_of(const Monomial& m) const {
  for (const auto& t : t_)
    if (t.m == m) return t.c;
  return Rational(0);
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : t_) {
    Rational c = t.c;
    if (first) {
      if (c.sign() < 0) {
        out << "-";
        c = -c;
      }
      first = false;
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
      if (c.sign() < 0) c = -c;
    }
    if (t.m.is_one()) {
      out << c.str();
    } else {
      if (!c.is_one()) out << c.str() << "*";
      out << t.m.str(*ring_);
    }
  }
  return out.str();
}

Polynomial substitute(const Polynomial& f, const Ring& target,
                      const std::vector<Polynomial>& images) {
  check(f.ring() != nullptr, "substitute on uninitialized polynomial");
  check(static_cast<int>(images.size()) == f.ring()->nvars(),
        "substitute needs one image per source variable");
  for (const auto& g : images)
    check(g.ring().get() == target.get(), "substitution images must live in the target ring");
  Polynomial acc = Polynomial::zero(target);
  for (const auto& t : f.terms()) {
    Polynomial term = Polynomial::constant(target, t.c);
    for (int i = 0; i < f.ring()->nvars(); ++i)
      if (t.m.e[i]) term = term * Polynomial::pow(images[i], t.m.e[i]);
    acc = acc + term;
  }
  return acc;
}

std::vector<Polynomial> jacobian_ideal_gens(const Polynomial& f) {
  check(!f.is_zero() && f.is_homogeneous(), "jacobian generators need a nonzero homogeneous input");
  std::vector<Polynomial> gens;
  for (int i = 0; i < f.ring()->nvars(); ++i) {
    Polynomial d = f.derivative(i);
    if (!d.is_zero()) gens.push_back(std::move(d));
  }
  return gens;
}

}  // namespace hodge

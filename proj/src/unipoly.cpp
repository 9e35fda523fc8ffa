#include "hodge/unipoly.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>

namespace hodge {

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UniPoly UniPoly::t() { return UniPoly({Rational(0), Rational(1)}); }

const Rational& UniPoly::leading() const {
  check(!c_.empty(), "leading coefficient of zero polynomial");
  return c_.back();
}

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < a.c_.size()) c[i] += a.c_[i];
    if (i < b.c_.size()) c[i] += b.c_[i];
  }
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i < a.c_.size()) c[i] += a.c_[i];
    if (i < b.c_.size()) c[i] -= b.c_[i];
  }
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const Rational& s) const {
  std::vector<Rational> c(c_);
  for (auto& x : c) x *= s;
  return UniPoly(std::move(c));
}

Rational UniPoly::eval(const Rational& x) const {
  Rational r(0);
  for (std::size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
  return r;
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rational> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(c));
}

UniPoly UniPoly::rem(const UniPoly& a, const UniPoly& b) {
  check(!b.is_zero(), "polynomial division by zero");
  std::vector<Rational> r(a.c_);
  Rational lead_inv = b.leading().inverse();
  int db = b.degree();
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    if (r[i].is_zero()) continue;
    Rational f = r[i] * lead_inv;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.c_[j];
    r[i] = Rational(0);
  }
  return UniPoly(std::move(r));
}

UniPoly UniPoly::div_exact(const UniPoly& a, const UniPoly& b) {
  check(!b.is_zero(), "polynomial division by zero");
  if (a.is_zero()) return UniPoly();
  check(a.degree() >= b.degree(), "inexact polynomial division");
  std::vector<Rational> r(a.c_);
  std::vector<Rational> q(a.degree() - b.degree() + 1);
  Rational lead_inv = b.leading().inverse();
  int db = b.degree();
  for (int i = static_cast<int>(r.size()) - 1; i >= db; --i) {
    if (r[i].is_zero()) continue;
    Rational f = r[i] * lead_inv;
    q[i - db] = f;
    for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.c_[j];
  }
  for (const auto& x : r) check(x.is_zero(), "inexact polynomial division");
  return UniPoly(std::move(q));
}

UniPoly UniPoly::gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a.scaled(a.leading().inverse());
}

std::string UniPoly::str(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = c_.size(); i-- > 0;) {
    if (c_[i].is_zero()) continue;
    Rational c = c_[i];
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
    if (i == 0) {
      out << c.str();
    } else {
      if (!c.is_one()) out << c.str() << "*";
      out << var;
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  check(xs.size() == ys.size() && !xs.empty(), "interpolation needs matching nonempty node lists");
  std::size_t n = xs.size();
  // Newton divided differences.
  std::vector<Rational> dd(ys);
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i) {
      Rational dx = xs[i] - xs[i - level];
      check(!dx.is_zero(), "interpolation nodes must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / dx;
      if (i == level) break;
    }
  UniPoly result = UniPoly::constant(dd[0]);
  UniPoly basis = UniPoly::constant(Rational(1));
  for (std::size_t k = 1; k < n; ++k) {
    basis = basis * (UniPoly::t() - UniPoly::constant(xs[k - 1]));
    result = result + basis.scaled(dd[k]);
  }
  return result;
}

UniPoly univariate_det(const RatMatrix& a1, const RatMatrix& a2) {
  check(a1.rows() == a1.cols(), "pencil determinant needs square matrices");
  check(a1.rows() == a2.rows() && a1.cols() == a2.cols(), "pencil matrices must have equal shape");
  std::size_t n = a1.rows();
  if (n == 0) return UniPoly::constant(Rational(1));
  std::vector<Rational> xs, ys;
  RatMatrix m = a1;
  for (std::size_t k = 0; k <= n; ++k) {
    xs.emplace_back(static_cast<long>(k));
    ys.push_back(determinant(m));
    if (k < n) m = m + a2;
  }
  return interpolate(xs, ys);
}

namespace {

// Fraction-free Bareiss over Q[t]. Entry divisions by the previous pivot
// are exact because Q[t] is an integral domain with exact division.
struct PolyBareiss {
  std::vector<UniPoly> a;
  std::size_t rows, cols;
  UniPoly& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }

  // Returns rank over Q(t); corner = last pivot, sign = permutation sign.
  std::size_t run(UniPoly& corner, int& sign) {
    UniPoly prev = UniPoly::constant(Rational(1));
    sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t p = r;
      while (p < rows && at(p, c).is_zero()) ++p;
      if (p == rows) continue;
      if (p != r) {
        for (std::size_t j = 0; j < cols; ++j) std::swap(at(p, j), at(r, j));
        sign = -sign;
      }
      const UniPoly piv = at(r, c);
      for (std::size_t i = r + 1; i < rows; ++i) {
        const UniPoly head = at(i, c);
        for (std::size_t j = c + 1; j < cols; ++j)
          at(i, j) = UniPoly::div_exact(piv * at(i, j) - head * at(r, j), prev);
        at(i, c) = UniPoly();
      }
      prev = piv;
      ++r;
    }
    corner = prev;
    return r;
  }
};

PolyBareiss make_pencil(const RatMatrix& a1, const RatMatrix& a2) {
  check(a1.rows() == a2.rows() && a1.cols() == a2.cols(), "pencil matrices must have equal shape");
  PolyBareiss pb;
  pb.rows = a1.rows();
  pb.cols = a1.cols();
  pb.a.resize(pb.rows * pb.cols);
  for (std::size_t i = 0; i < pb.rows; ++i)
    for (std::size_t j = 0; j < pb.cols; ++j)
      pb.a[i * pb.cols + j] = UniPoly({a1.at(i, j), a2.at(i, j)});
  return pb;
}

}  // namespace

UniPoly univariate_det_symbolic(const RatMatrix& a1, const RatMatrix& a2) {
  check(a1.rows() == a1.cols(), "pencil determinant needs square matrices");
  if (a1.rows() == 0) return UniPoly::constant(Rational(1));
  PolyBareiss pb = make_pencil(a1, a2);
  UniPoly corner;
  int sign;
  std::size_t r = pb.run(corner, sign);
  if (r < a1.rows()) return UniPoly();
  return sign < 0 ? corner.scaled(Rational(-1)) : corner;
}

PencilEliminationResult pencil_generic_rank(const RatMatrix& a1, const RatMatrix& a2) {
  PencilEliminationResult res;
  if (a1.rows() == 0 || a1.cols() == 0) {
    res.pivot_minor = UniPoly::constant(Rational(1));
    return res;
  }
  PolyBareiss pb = make_pencil(a1, a2);
  UniPoly corner;
  int sign;
  res.generic_rank = pb.run(corner, sign);
  res.pivot_minor = corner;
  return res;
}

int real_root_count(const UniPoly& p) {
  if (p.is_zero() || p.degree() == 0) return 0;
  UniPoly sf = UniPoly::div_exact(p, UniPoly::gcd(p, p.derivative()));
  if (sf.degree() == 0) return 0;
  std::vector<UniPoly> chain{sf, sf.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    UniPoly r = UniPoly::rem(chain[chain.size() - 2], chain.back());
    chain.push_back(r.scaled(Rational(-1)));
  }
  auto variations = [&](bool at_plus_infinity) {
    int count = 0, last = 0;
    for (const auto& q : chain) {
      if (q.is_zero()) continue;
      int s = q.leading().sign();
      if (!at_plus_infinity && q.degree() % 2 == 1) s = -s;
      if (last != 0 && s != last) ++count;
      last = s;
    }
    return count;
  };
  return variations(false) - variations(true);
}

namespace {

// Divisors of |n| from trial division by primes below the bound. If an
// unfactored cofactor remains it participates as a single extra factor and
// `complete` is cleared.
std::vector<BigInt> bounded_divisors(const BigInt& n, bool& complete) {
  const unsigned long kTrialBound = 100000;
  const std::size_t kMaxDivisors = 1u << 16;
  mpz_class m = n.abs().raw();
  std::vector<std::pair<mpz_class, int>> factors;
  if (m > 1) {
    for (unsigned long p = 2; p <= kTrialBound && m > 1; p = (p == 2 ? 3 : p + 2)) {
      if (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
        int e = 0;
        while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
          mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
          ++e;
        }
        factors.emplace_back(mpz_class(p), e);
      }
      mpz_class psq = mpz_class(p) * p;
      if (psq > m) break;
    }
    if (m > 1) {
      // Either a prime > bound, or an unfactored composite; keep it as one
      // factor so large prime roots are still reachable.
      bool certainly_prime = mpz_probab_prime_p(m.get_mpz_t(), 30) != 0;
      factors.emplace_back(m, 1);
      if (!certainly_prime) complete = false;
    }
  }
  std::vector<BigInt> divisors{BigInt(1)};
  for (const auto& [p, e] : factors) {
    std::size_t cur = divisors.size();
    mpz_class pk(1);
    for (int k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < cur; ++i) {
        divisors.push_back(BigInt::from_raw(divisors[i].raw() * pk));
        if (divisors.size() > kMaxDivisors) {
          complete = false;
          return divisors;
        }
      }
    }
  }
  return divisors;
}

}  // namespace

RationalRoots rational_roots(const UniPoly& p) {
  check(!p.is_zero(), "rational roots of the zero polynomial");
  RationalRoots out;
  // Split off t^v.
  int v = 0;
  while (p.coeff(v).is_zero()) ++v;
  std::vector<Rational> shifted;
  for (int i = v; i <= p.degree(); ++i) shifted.push_back(p.coeff(i));
  UniPoly q(std::move(shifted));
  if (v > 0) out.roots.emplace_back(Rational(0), v);
  if (q.degree() == 0) return out;

  // Primitive integer form of the squarefree part.
  UniPoly sf = UniPoly::div_exact(q, UniPoly::gcd(q, q.derivative()));
  BigInt den_lcm(1);
  for (int i = 0; i <= sf.degree(); ++i) den_lcm = BigInt::lcm(den_lcm, sf.coeff(i).den());
  std::vector<BigInt> zc(sf.degree() + 1);
  BigInt content(0);
  for (int i = 0; i <= sf.degree(); ++i) {
    Rational scaled = sf.coeff(i) * Rational(den_lcm, BigInt(1));
    zc[i] = scaled.num();
    content = BigInt::gcd(content, zc[i]);
  }
  for (auto& z : zc) z = BigInt::div_exact(z, content);

  bool complete = true;
  std::vector<BigInt> ps = bounded_divisors(zc.front(), complete);
  std::vector<BigInt> qs = bounded_divisors(zc.back(), complete);
  out.complete = complete;

  std::vector<Rational> found;
  for (const BigInt& den : qs)
    for (const BigInt& num : ps) {
      if (BigInt::gcd(num, den) != BigInt(1)) continue;
      for (int s : {1, -1}) {
        Rational cand(s == 1 ? num : -num, den);
        if (sf.eval(cand).is_zero()) found.push_back(cand);
      }
    }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());

  UniPoly residual = sf;
  for (const Rational& r : found) {
    UniPoly lin({-r, Rational(1)});
    residual = UniPoly::div_exact(residual, lin);
    // Multiplicity against the t^v-stripped polynomial.
    int mult = 0;
    UniPoly w = q;
    while (true) {
      UniPoly quo, rem = UniPoly::rem(w, lin);
      if (!rem.is_zero()) break;
      w = UniPoly::div_exact(w, lin);
      ++mult;
    }
    out.roots.emplace_back(r, mult);
  }
  std::sort(out.roots.begin(), out.roots.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  out.residual_degree = residual.is_zero() ? 0 : residual.degree();
  out.residual_real_roots = out.residual_degree > 0 ? real_root_count(residual) : 0;
  return out;
}

}  // namespace hodge

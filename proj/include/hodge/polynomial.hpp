#pragma once

#include <string>
#include <vector>

#include "hodge/ring.hpp"

namespace hodge {

struct Term {
  Monomial m;
  Rational c;
};

// Sparse multivariate polynomial. Terms are kept strictly descending under
// the polynomial's storage order with no zero coefficients, so the leading
// term is terms().front(). Binary operations require the same ring object
// and the same storage order.
class Polynomial {
 public:
  Polynomial() = default;  // no ring; only assignable

  static Polynomial zero(Ring r, MonomialOrder o = MonomialOrder::degrevlex());
  static Polynomial make(Ring r, std::vector<Term> terms,
                         MonomialOrder o = MonomialOrder::degrevlex());
  static Polynomial constant(Ring r, Rational c,
                             MonomialOrder o = MonomialOrder::degrevlex());
  static Polynomial variable(Ring r, int i,
                             MonomialOrder o = MonomialOrder::degrevlex());
  static Polynomial monomial(Ring r, Monomial m, Rational c = Rational(1),
                             MonomialOrder o = MonomialOrder::degrevlex());
  // Fast path for algorithm internals: adopts a term list that is already
  // strictly descending under o with no zero coefficients.
  static Polynomial adopt_sorted(Ring r, std::vector<Term> terms, MonomialOrder o);

  const Ring& ring() const { return ring_; }
  const MonomialOrder& order() const { return ord_; }
  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  std::size_t size() const { return t_.size(); }
  const Term& leading() const;

  int degree() const;  // max weighted degree, -1 for zero
  bool is_homogeneous() const;
  Polynomial homogeneous_component(int deg) const;

  Polynomial with_order(MonomialOrder o) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial scaled(const Rational& c) const;
  Polynomial mul_term(const Monomial& m, const Rational& c) const;
  static Polynomial pow(const Polynomial& base, unsigned e);
  Polynomial derivative(int var) const;
  Polynomial monic() const;

  bool operator==(const Polynomial& o) const;
  Rational coeff_of(const Monomial& m) const;

  std::string str() const;

 private:
  // Adopts an already sorted, combined, zero-free term list.
  static Polynomial presorted(Polynomial base, std::vector<Term> terms) {
    base.t_ = std::move(terms);
    return base;
  }

  Ring ring_;
  MonomialOrder ord_;
  std::vector<Term> t_;
};

// Ring homomorphism determined by variable images (all in the target ring,
// which may equal the source). Coefficients map identically.
Polynomial substitute(const Polynomial& f, const Ring& target,
                      const std::vector<Polynomial>& images);

// All partial derivatives of a homogeneous f (errors otherwise); zero
// partials are kept out of the list.
std::vector<Polynomial> jacobian_ideal_gens(const Polynomial& f);

}  // namespace hodge

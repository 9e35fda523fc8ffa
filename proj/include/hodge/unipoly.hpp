#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "hodge/matrix.hpp"
#include "hodge/rational.hpp"

namespace hodge {

// Univariate polynomial over Q; coeff(i) is the coefficient of t^i.
// Always normalized: no trailing zero coefficients. Zero is the empty list.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  static UniPoly t();  // the monomial t

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& leading() const;
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }
  UniPoly scaled(const Rational& s) const;

  Rational eval(const Rational& x) const;
  UniPoly derivative() const;

  // Exact division; errors if the remainder is nonzero.
  static UniPoly div_exact(const UniPoly& a, const UniPoly& b);
  // Euclidean division remainder.
  static UniPoly rem(const UniPoly& a, const UniPoly& b);
  static UniPoly gcd(UniPoly a, UniPoly b);  // monic

  std::string str(const std::string& var = "t") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// Lagrange interpolation (Newton form) through distinct nodes.
UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

// det(a1 + t*a2) by evaluation at t = 0..n and interpolation. Errors on
// non-square or mismatched shapes.
UniPoly univariate_det(const RatMatrix& a1, const RatMatrix& a2);

// Same determinant by fraction-free elimination over Q[t]; used as an
// independent cross-check of the interpolation path.
UniPoly univariate_det_symbolic(const RatMatrix& a1, const RatMatrix& a2);

// Rank of a1 + t*a2 over Q(t) together with the pivot minor reached by
// the elimination (a nonzero maximal minor of the pencil when the rank is
// maximal). Works for non-square pencils.
struct PencilEliminationResult {
  std::size_t generic_rank = 0;
  UniPoly pivot_minor;  // product-form Bareiss corner; nonzero iff rank > 0
};
PencilEliminationResult pencil_generic_rank(const RatMatrix& a1, const RatMatrix& a2);

// Number of distinct real roots via a Sturm chain (input need not be
// squarefree; the count is of distinct roots of the squarefree part).
int real_root_count(const UniPoly& p);

struct RationalRoots {
  // (root, multiplicity) pairs, ascending by root.
  std::vector<std::pair<Rational, int>> roots;
  // What is left of the squarefree part after removing the rational roots.
  int residual_degree = 0;
  int residual_real_roots = 0;
  // False if the divisor search had to truncate (coefficients whose
  // unfactored part exceeded the trial-division bound); roots found are
  // still verified, completeness is then only heuristic.
  bool complete = true;
};

// All rational roots of p (p != 0), found by the rational root theorem on
// the primitive squarefree part with bounded trial division, each candidate
// verified by exact evaluation and multiplicity by exact division.
RationalRoots rational_roots(const UniPoly& p);

}  // namespace hodge

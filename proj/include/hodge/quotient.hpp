#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "hodge/groebner.hpp"

namespace hodge {

// All monomials of the given weighted degree, descending in the order.
std::vector<Monomial> monomials_of_degree(const Ring& r, int degree,
                                          MonomialOrder order = MonomialOrder::degrevlex());

// Graded quotient S/I with memoized per-degree standard monomial bases.
// Value-semantic; copies share the cache. Degree queries are safe to run
// concurrently (the cache fill is serialized internally).
class GradedQuotient {
 public:
  static GradedQuotient make(Ideal ideal, MonomialOrder order = MonomialOrder::degrevlex());

  const Ideal& ideal() const { return s_->ideal; }
  MonomialOrder order() const { return s_->ord; }
  const GroebnerBasis& basis() const;

  // Standard monomials of the given degree, descending in the order.
  std::vector<Monomial> kbase(int degree) const;
  int hilbert(int degree) const;

  // Finite-dimensionality, by the pure-power criterion on leading terms.
  bool artinian() const;
  // Largest degree with a nonzero piece. Errors on non-Artinian quotients;
  // nullopt for the zero ring.
  std::optional<int> socle_degree() const;

 private:
  struct State {
    Ideal ideal;
    MonomialOrder ord;
    std::mutex mu;
    std::map<int, std::vector<Monomial>> cache;
  };
  std::shared_ptr<State> s_;
};

// Coefficients 0..bound of prod(1 - t^{d_i}) / (1 - t)^{numVars}. With as
// many degrees as variables the series is a polynomial and the natural
// bound sum(d_i - 1) is used; otherwise `through` must be given.
std::vector<BigInt> ci_hilbert_series(const std::vector<int>& degrees, int numVars,
                                      int through = -1);

// Degree-e pieces, e = 0..t, of the largest homogeneous ideal I with
// I_t = span(w): piece e is a basis of {g in S_e : g * S_{t-e} inside
// span(w)}. Verifies the top piece matches span(w) and that the pieces are
// closed under multiplication by the variables.
std::vector<std::vector<Polynomial>> largest_ideal_with_top(const std::vector<Polynomial>& w,
                                                            int t);

// Perfect-pairing check for an Artinian quotient with one-dimensional top
// piece: every multiplication pairing (S/I)_e x (S/I)_{s-e} -> (S/I)_s has
// zero left kernel. Defined alongside the Gram machinery.
bool is_gorenstein_top(const GradedQuotient& q);

}  // namespace hodge

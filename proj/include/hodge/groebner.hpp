#pragma once

#include <map>
#include <memory>
#include <optional>
#include <tuple>
#include <vector>

#include "hodge/polynomial.hpp"

namespace hodge {

struct GroebnerBasis {
  Ring ring;
  MonomialOrder order;
  // Monic, auto-reduced, sorted ascending by leading monomial.
  std::vector<Polynomial> elems;
  // When set, leading terms are complete only up to this weighted degree.
  std::optional<int> cap;

  bool truncated() const { return cap.has_value(); }
};

// Ideal with homogeneous generators. Zero generators are dropped at
// construction. Value-semantic; computed bases are cached and shared
// between copies.
class Ideal {
 public:
  static Ideal make(Ring r, std::vector<Polynomial> gens);

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& gens() const { return gens_; }
  int max_gen_degree() const;

  // Reduced basis under `order`, complete up to `cap` when given.
  // Results are cached; a cached full basis also answers capped requests.
  const GroebnerBasis& basis(MonomialOrder order = MonomialOrder::degrevlex(),
                             std::optional<int> cap = std::nullopt) const;

 private:
  Ring ring_;
  std::vector<Polynomial> gens_;
  struct Key {
    OrderKind kind;
    int block_start;
    int cap;  // -1 for full
    auto operator<=>(const Key&) const = default;
  };
  mutable std::shared_ptr<std::map<Key, GroebnerBasis>> cache_;
};

// Buchberger with the normal pair-selection strategy (minimal lcm degree
// first), the coprime-leading-term and chain criteria, and final
// auto-reduction to the unique reduced basis. Accepts inhomogeneous input;
// the degree cap is only honored for homogeneous input (and is rejected
// otherwise).
GroebnerBasis buchberger(const Ring& ring, std::vector<Polynomial> gens,
                         MonomialOrder order,
                         std::optional<int> cap = std::nullopt);

// Unique fully reduced remainder of p modulo the basis. Reentrant;
// safe to call concurrently on a shared basis.
Polynomial normal_form(const Polynomial& p, const GroebnerBasis& gb);

// Generators concatenated (zero generators were never stored).
Ideal ideal_sum(const Ideal& a, const Ideal& b);

// Intersection via the elimination trick: an auxiliary variable u is
// appended, <u*A, (1-u)*B> is computed under the block elimination order,
// and the u-free part of the basis is kept (split into homogeneous
// components so the result is again a homogeneous ideal).
Ideal ideal_intersection(const Ideal& a, const Ideal& b);

// True iff some pure power of every variable appears among the leading
// monomials (equivalently the quotient is finite-dimensional). Requires a
// full basis.
bool is_zero_dimensional(const GroebnerBasis& gb);

// Post-hoc certificate: every S-polynomial of basis pairs reduces to zero
// (pairs with coprime leading terms are skipped by the product criterion;
// pairs above the cap are skipped for truncated bases).
bool verify_buchberger_criterion(const GroebnerBasis& gb);

// Whether every monomial of the given degree is divisible by some leading
// term in the list.
bool staircase_covers_degree(const Ring& ring, const std::vector<Monomial>& lts, int degree);

// One-sided zero-dimensionality certificate for a homogeneous ideal. The
// quotient dimension in each degree can only grow when coefficients are
// reduced modulo a prime, so a basis computed over a prime field whose
// staircase covers the decisive degree nvars*(maxdeg-1)+1 proves the
// rational quotient vanishes there, hence is zero-dimensional. Returns
// false when the modular runs are inconclusive; never wrongly true.
bool modular_zero_dim_certificate(const Ring& ring, const std::vector<Polynomial>& gens);

}  // namespace hodge

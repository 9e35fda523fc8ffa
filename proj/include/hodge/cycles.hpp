#pragma once

#include <utility>
#include <vector>

#include "hodge/quotient.hpp"

namespace hodge {

// Binomial coefficient with the convention that out-of-range arguments
// (negative n or r, or r > n) give 0.
BigInt binom(long n, long r);

// Complete-intersection cycle datum: f = sum g_i h_i with the g_i cutting
// out the cycle. The constructor checks the degree bookkeeping and spot
// checks that g is a regular sequence (Hilbert values of S/<g> match the
// predicted series through the socle degree of the associated quotient).
struct CIHodgeDatum {
  int k = 0;
  int d = 0;
  std::vector<Polynomial> g;
  std::vector<Polynomial> h;
  Polynomial f;

  static CIHodgeDatum make(int k, int d, std::vector<Polynomial> g,
                           std::vector<Polynomial> h);
};

// <g_0..g_k, h_0..h_k>. Asserts the quotient is Artinian with socle degree
// (d-2)(k+1), one-dimensional top piece and symmetric Hilbert function.
Ideal hodge_ideal_of_ci(const CIHodgeDatum& datum);

// Two k-planes in P^{2k+1} meeting in dimension k-c, with the hypersurface
// containing both written in the normal form
//   f = sum_{i<c} sum_{j<c} x_i x_{c+j} q[i][j] + sum_s x_{k+c+1+s} p[s].
// Plane 1 is {x_0=..=x_{c-1}=0, x_{k+c+1}=..=x_{2k+1}=0}, plane 2 swaps the
// first block for {x_c..x_{2c-1}}.
struct PlanePairDatum {
  int k = 0;
  int c = 0;
  int d = 0;
  Ring ring;
  std::vector<std::vector<Polynomial>> q;  // c x c, degree d-2
  std::vector<Polynomial> p;               // k+1-c entries, degree d-1
  Polynomial f;

  static PlanePairDatum make(int k, int c, int d, Ring ring,
                             std::vector<std::vector<Polynomial>> q,
                             std::vector<Polynomial> p);

  // The cycle datum of plane 1 or plane 2 (which = 1 or 2).
  CIHodgeDatum cycle_datum(int which) const;
};

struct PlanePairIdeals {
  Ideal i1, i2, isum, iint;
};

// The four ideals from their explicit generator lists. Consistency is
// asserted: sum(i1,i2) has the same reduced basis as isum, f and the iint
// generators reduce to zero against i1 and i2, and the Hilbert identity
// h_iint = h_i1 + h_i2 - h_isum holds through degree (d-2)(k+1).
PlanePairIdeals plane_pair_ideals(const PlanePairDatum& datum);

// Codimension of the tangent space: h_{S/I}(d).
int tangent_codim(const Ideal& iGamma, int d);

// The three quantities balancing the smoothness count for a plane pair,
// from closed forms. familyDim + tangentCodim = containmentCodim.
struct SmoothnessReport {
  int k = 0, d = 0, c = 0;
  BigInt familyDim;
  BigInt containmentCodim;
  BigInt tangentCodim;
};
SmoothnessReport smoothness_codim_report(int k, int d, int c);

enum class RegimeCase { NoKernelForced, KernelForcedAllX, XDependent };
const char* regime_name(RegimeCase c);

struct RegimeClassification {
  int d = 0, c = 0, k = 0;
  RegimeCase regime = RegimeCase::XDependent;
  BigInt hSumAtTop;  // Hilbert value of S/(I1+I2) at degree kd-2k-2
};
RegimeClassification classify_regime(int d, int c, int k);

// Excess-intersection criterion for a pair of complete-intersection cycles
// sharing all but c of their defining equations: true iff
// sum_{i<c}(e_i + d_i) < (c-1) d. When true, additionally asserts that the
// socle degree of the sum quotient falls below kd-2k-2.
bool excess_criterion_ci(const std::vector<int>& gDegrees,
                         const std::vector<int>& eDegrees, int d);

// Monomial Hodge ideals of a pair of coordinate k-planes on the Fermat
// hypersurface, in the permuted coordinates where
//   i1 = <y_0..y_{c-1}, y_c^{d-1}..y_{k+c}^{d-1}, y_{k+c+1}..y_{2k+1}>,
//   i2 = <y_0^{d-1}..y_{c-1}^{d-1}, y_c..y_{2c-1}, y_{2c}^{d-1}..y_{k+c}^{d-1},
//         y_{k+c+1}..y_{2k+1}>.
// socle is the standard monomial spanning the top piece of S/i2.
struct FermatPlaneIdeals {
  int d = 0, c = 0, k = 0;
  Ring ring;
  Ideal i1, i2, isum;
  Monomial socle;
};
FermatPlaneIdeals fermat_plane_ideals(int d, int c, int k);

// Intersection of monomial ideals via pairwise lcms (minimal generators).
Ideal monomial_ideal_intersection(const Ideal& a, const Ideal& b);

// Substitute zero for the listed variables and delete them from the ring.
// Returns the smaller ring and the image ideal.
std::pair<Ring, Ideal> reduce_mod_variables(const Ideal& ideal, const std::vector<int>& vars);

}  // namespace hodge

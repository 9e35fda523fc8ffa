#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hodge/groebner.hpp"
#include "hodge/matrix.hpp"
#include "hodge/polynomial.hpp"
#include "hodge/quotient.hpp"
#include "hodge/rational.hpp"
#include "hodge/ring.hpp"
#include "hodge/unipoly.hpp"

namespace hodge {

// Socle-valued multiplication pairing on an Artinian quotient whose top
// graded piece is one-dimensional. gram[i][j] is the coefficient of the
// socle standard monomial in NF(left[i] * right[j]).
struct GramPairing {
  GradedQuotient target;
  std::vector<Polynomial> left;
  std::vector<Polynomial> right;
  int leftDegree = -1;   // -1 when the side is empty
  int rightDegree = -1;
  Monomial socle;
  RatMatrix gram;
};

// Basis of the degree-`degree` piece of Isum/Ipart inside S/Ipart; requires
// Ipart contained in Isum. Elements have the form m - NF(m, Isum) with m a
// standard monomial of S/Ipart; a maximal independent subset is kept,
// greedily in the descending monomial order of `part`. The size always
// equals h_{Ipart}(degree) - h_{Isum}(degree).
std::vector<Polynomial> build_subquotient_basis(const Ideal& isum,
                                                const GradedQuotient& part,
                                                int degree);
std::vector<Polynomial> build_subquotient_basis(
    const Ideal& isum, const Ideal& ipart, int degree,
    MonomialOrder order = MonomialOrder::degrevlex());

// Gram matrix of the socle pairing. Every left element must be homogeneous
// of one common degree a, every right element of degree b, with a + b the
// socle degree of `target`.
GramPairing gram_matrix(const GradedQuotient& target,
                        std::vector<Polynomial> left,
                        std::vector<Polynomial> right);

struct RankCertificate {
  std::size_t rank = 0;
  std::optional<Rational> det;  // present iff the matrix is square
  std::size_t leftKernelDim = 0;
};
RankCertificate full_rank_certificate(const GramPairing& gp);

// Left-kernel dimension of the pairing
//   ((I1+I2)/I2)_d x ((I1+I2)/I2)_{kd-2k-2} -> (S/I2)_{(d-2)(k+1)}
// for the pair of coordinate-plane monomial ideals attached to (d, c, k).
int fermat_kernel_dim(int d, int c, int k);

struct PencilDrop {
  Rational value;          // pencil parameter with rank below generic
  std::size_t rankAt = 0;  // exact rank at that parameter
  int multiplicity = 1;    // multiplicity as a root of detPoly
};

// Rank analysis of the pencil of socle-projection pairings
//   psi_j : (S/(I1 cap I2))_d x (S/(I1 cap I2))_{t-d} -> (S/I_j)_t -> Q
// where t is the common socle degree. Bases of the middle quotient are
// built without an elimination step: a monomial is kept iff its pair of
// normal forms (mod I1, mod I2) is independent from those already kept.
struct PencilReport {
  int degree = 0;       // left-hand degree d; the right-hand degree is t - d
  int socleDegree = 0;  // t

  std::vector<Monomial> leftBasis;  // descending; representatives mod I1 cap I2
  std::vector<Monomial> rightBasis;
  std::size_t dimLeft = 0;
  std::size_t dimRight = 0;

  RatMatrix a1, a2;  // Gram matrices of psi_1, psi_2

  // det(a1 + t*a2) when the pencil is square with generically nonzero
  // determinant; otherwise the Bareiss pivot minor certifying genericRank.
  // Every rank-drop parameter is a root of this polynomial.
  UniPoly detPoly;
  bool detIsDeterminant = false;
  std::size_t genericRank = 0;  // rank of a1 + t*a2 over Q(t)

  std::size_t rankAtZero = 0;      // rank(a1) = h_{I1}(d)
  std::size_t rankAtInfinity = 0;  // rank(a2) = h_{I2}(d)
  bool proportional = false;       // one Gram matrix is a scalar multiple of the other

  std::vector<PencilDrop> dropValues;  // verified rational drops, ascending
  int residualDegree = 0;       // degree left of detPoly after removing rational roots
  int residualRealRoots = 0;    // distinct real roots of that residual factor
  bool rootSearchComplete = true;

  // Left kernels of the pairings ((I1+I2)/I_j)_d x ((I1+I2)/I_j)_{t-d}
  // -> (S/I_j)_t. When both vanish and t = 2d, the number of nonzero
  // dropValues is at most dropBound = h_{I1+I2}(d).
  std::size_t subquotientKernel1 = 0;
  std::size_t subquotientKernel2 = 0;
  bool kernelsVanish = false;
  long dropBound = 0;
  bool boundApplies = false;
};

PencilReport pencil_analysis(const Ideal& i1, const Ideal& i2, int d);

// Numeric checks for a pair of bilinear forms given by Gram matrices on the
// same spaces V x W. V_i, W_i are the one-sided kernels of form i; s_i is
// the rank of the other form restricted to V_i x W_i. When the kernels are
// independent (V1 cap V2 = 0 and W1 cap W2 = 0) the bounds
//   dim ker_L(form_j | V_i x W_i) <= r1 + r2 - dim W
//   generic rank of the pencil   >= r_i + s_i
// are theorems and a violation throws; otherwise they are only reported.
struct KernelBoundReport {
  std::size_t dimV = 0, dimW = 0;
  std::size_t r1 = 0, r2 = 0;
  std::size_t s1 = 0, s2 = 0;
  std::size_t restrictedKernel1 = 0;  // dim ker_L(form2 | V1 x W1)
  std::size_t restrictedKernel2 = 0;  // dim ker_L(form1 | V2 x W2)
  bool kernelsIndependent = false;
  long kernelBound = 0;  // r1 + r2 - dim W
  std::size_t genericRank = 0;
  bool kernelBoundHolds = true;
  bool rankBoundHolds = true;
};
KernelBoundReport kernel_bound_check(const RatMatrix& a1, const RatMatrix& a2);

// For S/I Artinian Gorenstein with socle degree t and 0 <= degree <= t-1:
// if the pairing ((J+I)/I)_degree x ((J+I)/I)_{t-degree} -> (S/I)_t has a
// left kernel, so does the one at degree+1. Throws if the implication
// fails (it cannot, short of a bug).
struct DegreeShiftReport {
  int degree = 0;
  int socleDegree = 0;
  std::size_t kernelAt = 0;
  std::size_t kernelAtNext = 0;
  bool implicationHolds = true;
};
DegreeShiftReport degree_shift_check(const Ideal& ipart, const Ideal& jsum, int degree);

}  // namespace hodge

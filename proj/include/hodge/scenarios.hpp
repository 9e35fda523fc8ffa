#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hodge/cycles.hpp"
#include "hodge/pairing.hpp"

namespace hodge {

// True iff the affine cone over V(f) is singular only at the origin, i.e.
// the Jacobian ideal is zero-dimensional. Variable-disjoint summands of f
// are detected and handled in their own subrings (the cone is smooth iff
// every summand's cone is). A ring variable absent from f gives false.
bool hypersurface_smooth(const Polynomial& f);

// Same reduced Groebner basis.
bool same_ideal(const Ideal& a, const Ideal& b);

struct HilbertRow {
  int h1 = 0, h2 = 0, hsum = 0, hint = 0;
};

// One verified fact. `mode` records how the inputs were produced:
// "exact" for fixed data, "symbolic" for fresh indeterminate coefficients,
// "random" for seeded random rational coefficients.
struct IdentityCheck {
  std::string label;
  std::string mode;
  bool holds = false;
};

struct ScenarioOptions {
  std::uint64_t seed = 1;
  // Table depth for quotients without a socle; -1 picks a default.
  int maxDegree = -1;
  // Parameters for the fermat scenario and for lift bases.
  int d = 3, c = 2, k = 5;
  std::string liftBase = "fermat";
  int liftSteps = 1;
  int liftBudget = 2;
  // Groebner-bearing specializations refuse rings above this size.
  int varBudget = 12;
  bool runPencil = true;
};

struct ScenarioReport {
  std::string name;
  int k = 0, d = 0, c = 0;
  // "ok", or the reason the scenario stopped early (budget refusals are
  // reported here, never silently absorbed).
  std::string status = "ok";
  std::optional<bool> smoothOk;
  std::map<int, HilbertRow> hilbertTable;
  std::optional<RankCertificate> pairingResult;
  std::optional<PencilReport> pencilResult;
  std::vector<IdentityCheck> identityChecks;
  // Named sizes computed along the way (pairing dimensions, kernel
  // dimensions, drop counts), for rendering and for exact-value tests.
  std::map<std::string, long> quantities;

  bool all_checks_hold() const;
  const IdentityCheck* find_check(const std::string& label) const;
  long quantity(const std::string& key) const;  // errors when absent
};

ScenarioReport scenario_example_a(const ScenarioOptions& opts = {});
ScenarioReport scenario_example_b(const ScenarioOptions& opts = {});
ScenarioReport scenario_example_c(const ScenarioOptions& opts = {});

// Coordinate-plane pair on the Fermat hypersurface: subquotient pairing
// rank, kernel dimension against the closed form, and the explicit
// functional-kernel element of the intersection quotient.
ScenarioReport scenario_fermat(int d, int c, int k, const ScenarioOptions& opts = {});

// A plane pair together with its hypersurface (when it has one) after some
// number of dimension-raising steps. Each step appends two variables u, v,
// adds u^{d-1} and v to every ideal and v*u^{d-1} + v^d to f.
struct LiftDatum {
  int k = 0, c = 0, d = 0;
  Ring ring;
  std::optional<Polynomial> f;
  Ideal i1, i2, isum, iint;
};

LiftDatum lift_once(const LiftDatum& base);

// baseName is "fermat" (parameters from opts) or "example-a".
ScenarioReport scenario_lift(const std::string& baseName, const ScenarioOptions& opts = {});

ScenarioReport scenario_quartic_family(const ScenarioOptions& opts = {});
ScenarioReport scenario_plucker_family(const ScenarioOptions& opts = {});
ScenarioReport scenario_tsp_corollary(const ScenarioOptions& opts = {});

// Rank-drop census at the balanced degree d = kd-2k-2 for a pair whose sum
// quotient vanishes there: asserts h_{i1+i2}(d) = 0, runs the pencil
// analysis and asserts it certifies zero nonzero rank drops.
PencilReport theorem_tsp_corollary_check(const Ideal& i1, const Ideal& i2, int d, int k);

std::vector<std::string> scenario_names();
ScenarioReport run_scenario(const std::string& name, const ScenarioOptions& opts = {});

}  // namespace hodge

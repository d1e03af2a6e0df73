#pragma once

#include <map>
#include <string>
#include <vector>

#include "fanaut/demazure.hpp"
#include "fanaut/spherical_nonlinear.hpp"
#include "fanaut/toric_levi.hpp"

namespace fanaut {

// Subfan of cones inside the linear part, written in the HNF basis of that lattice.
struct FiberFan {
  Fan fan;
  Sublattice lattice;  // linear part of the valuation cone, inside N
};

// Throws FiberNotComplete unless the subfan is smooth and complete.
FiberFan fiber_fan(const SphericalData& sd);

struct RestrictedRoot {
  IntVector gamma;        // character of the full lattice
  std::string moved;      // the ray pairing to -1
  IntVector restriction;  // coordinates on the linear part
};

struct RestrictedRoots {
  std::vector<RestrictedRoot> gammas;
  std::vector<DemazureRoot> restrictions;  // distinct restrictions with their moved ray
  std::vector<DemazureRoot> phi;           // part closed under negation
  CheckReport opposite;  // nonlinear rays and colors vanish on lifts of opposite pairs
};

// Requires every non-stable ray to lie in the linear part. Throws UnboundedSearch
// when a search region is unbounded.
RestrictedRoots restricted_roots(const SphericalData& sd, const RaySet& stable);

struct ContainmentReport {
  bool ok = true;
  bool strict = false;
  std::vector<DemazureRoot> phi_x;
  std::vector<DemazureRoot> phi_fiber;
};

// Phi(X, D) is contained in Phi(fiber, D restricted to the fiber), moved rays included.
ContainmentReport phi_containment_check(const SphericalData& sd, const RaySet& stable);

struct LinearLevi {
  FiberFan fiber;
  RootData fiber_roots;  // fiber Demazure roots with phi = Phi(X, D)
  LeviInvariants fiber_levi;
  Sublattice lambda_A;
  NamedVectors colors;   // colors of the Levi action, in N_A coordinates
  std::vector<std::string> sp;
  std::vector<IntVector> pa_simple_roots;  // fiber coordinates
};

LinearLevi linear_levi_invariants(const SphericalData& sd, const RaySet& stable, const Positivity& positivity);

ColoredFan linear_colored_fan(const SphericalData& sd, const LinearLevi& ll);

// The union of the colored cones is the image of the valuation cone in N_A.
CoverageReport sigma_preservation_check(const SphericalData& sd, const LinearLevi& ll, const ColoredFan& cf);

}  // namespace fanaut

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fanaut/fan.hpp"

namespace fanaut {

using NamedVectors = std::map<std::string, IntVector>;

// Combinatorial data of a smooth complete toroidal spherical embedding.
// fan.support is the valuation cone {x : <x, sigma> <= 0 for all sigma}.
struct SphericalData {
  std::size_t rank = 0;
  std::optional<NamedVectors> sigma;  // nullopt when the spherical roots are not computed
  NamedVectors colors;
  std::vector<std::string> sp;
  Fan fan;
};

HalfspaceCone valuation_cone(std::size_t rank, const NamedVectors& sigma);

ValidationReport validate(const SphericalData& sd);

struct BoundaryClasses {
  RaySet linear;     // rays in the linear part of the valuation cone
  RaySet nonlinear;
};

BoundaryClasses classify_boundary(const SphericalData& sd);

// Rays of the fan not in `stable`; throws InvalidData on unknown names.
RaySet moved_complement(const Fan& f, const RaySet& stable);

// E -> name of the unique spherical root pairing to -1 with rho(E).
// Throws NotMovable when the pairing pattern fails, PreconditionFailed for linear rays.
std::map<std::string, std::string> sigma_of_moved(const SphericalData& sd, const RaySet& moved);

struct LambdaDecomposition {
  Sublattice orthogonal;  // rho(moved)^perp
  Sublattice roots;       // span of sigma_E
};

// Throws DecompositionFails unless the lattice is the direct sum of the two parts.
LambdaDecomposition lambda_decomposition(const SphericalData& sd, const RaySet& moved);

struct NonlinearResult {
  SphericalData restricted;  // data for the automorphism action, spherical roots unknown
  Sublattice lambda_A;
  Sublattice n_A;
  std::map<std::string, std::string> sigma_of;
  bool faces_ok = true;
  bool joins_ok = true;
  bool smooth = true;
  bool complete = true;
  bool injective = true;
  bool l_set_preserved = true;
  bool ok() const { return faces_ok && joins_ok && smooth && complete && injective && l_set_preserved; }
};

// Requires every non-stable ray to lie outside the linear part.
NonlinearResult nonlinear_restrict(const SphericalData& sd, const RaySet& stable);

struct WonderfulLattice {
  Sublattice xi;  // span of the spherical roots
  std::vector<Integer> invariant_factors;   // of Z^rank / xi, padded with zeros
  std::vector<Integer> nontrivial_factors;  // the factors different from 1
};

WonderfulLattice wonderful_closure_lattice(const SphericalData& sd);

}  // namespace fanaut

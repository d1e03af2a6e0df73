#pragma once

#include <map>
#include <string>
#include <vector>

#include "fanaut/demazure.hpp"
#include "fanaut/fan.hpp"

namespace fanaut {

struct LeviInvariants {
  Sublattice lambda_A;  // weight lattice of the Levi torus action, inside M
  Sublattice n_A;       // Psi^perp inside N
  std::map<std::string, IntVector> colors;  // color -> functional in N_A coordinates
  RaySet boundary;
  std::vector<IntVector> pa_simple_roots;
};

// Coordinates on N_A: v maps to (<v, l_1>, ..., <v, l_k>) for the HNF basis l_i of lambda_A.
IntVector to_na(const IntVector& v, const Sublattice& lambda_A);

LeviInvariants levi_invariants(const Fan& f, const RootData& rd);

struct ColoredCone {
  Cone cone;
  RaySet colors;
  bool operator==(const ColoredCone&) const = default;
  bool operator<(const ColoredCone& o) const {
    if (!(cone == o.cone)) return cone < o.cone;
    return colors < o.colors;
  }
};

struct ColoredFan {
  std::size_t rank = 0;
  std::vector<ColoredCone> cones;  // distinct, sorted
  std::map<std::string, IntVector> color_functionals;
  std::map<RaySet, std::size_t> source;  // cone of the input fan -> index in cones
};

// d(c): colors D such that every positive beta with X(-beta) = D has
// both X(beta) and X(-beta) among the rays of c.
RaySet color_set(const RootData& rd, const LeviInvariants& inv, const RaySet& cone);

ColoredFan colored_fan(const Fan& f, const RootData& rd, const LeviInvariants& inv);

// The cones form a fan covering N_A.
bool check_horospherical(const ColoredFan& cf);

struct CheckReport {
  bool ok = true;
  std::vector<std::string> failures;
  void fail(std::string msg) {
    ok = false;
    failures.push_back(std::move(msg));
  }
};

// d(c) is empty iff c intersect Psi^perp is a face of c.
CheckReport check_empty_color_face(const Fan& f, const RootData& rd, const LeviInvariants& inv);
// For alpha in Psi with X(-alpha) a color: X(-alpha) and X(alpha) differ from
// X(beta) for other positive beta, and <rho(X(-alpha)), beta> = 0 for other simple beta.
CheckReport check_abelian_orthogonality(const Fan& f, const RootData& rd, const LeviInvariants& inv);
// Boundary divisors of the Levi action are the rays not moved by Phi.
CheckReport check_boundary(const Fan& f, const RootData& rd, const LeviInvariants& inv);
// Color functionals, restricted to lambda_A, are linearly independent in N_A.
// This fails on some inputs, e.g. the blow-up of P^3 along an invariant line
// with nothing stable gives two colors with functionals 1 and -1.
bool colors_independent(const LeviInvariants& inv);
// Each color is X(-alpha) for exactly one simple alpha and <rho(X(-alpha)), beta>
// is 1 for beta = alpha and 0 for the other simple roots, so the colors are
// linearly independent in N.
CheckReport check_color_pairing(const Fan& f, const RootData& rd, const LeviInvariants& inv);

struct AOrbitPoset {
  ColoredFan colored;
  HasseDiagram hasse;  // node i is colored.cones[i]
};

// Orbit order: (c, d) lies in the closure of (c', d') iff c' is a face of c and d' is contained in d.
AOrbitPoset a_orbit_poset(const ColoredFan& cf);

// Lattice isomorphism of N_A carrying cones to cones and color functionals to
// color functionals, preserving the color sets of each cone.
bool colored_fans_isomorphic(const ColoredFan& a, const ColoredFan& b);

}  // namespace fanaut

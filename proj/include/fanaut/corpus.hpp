#pragma once

#include <string>
#include <vector>

#include "fanaut/fan.hpp"
#include "fanaut/json_io.hpp"
#include "fanaut/spherical_nonlinear.hpp"

namespace fanaut {

// Rays <prefix>1..<prefix>n are the unit vectors, <prefix>(n+1) is minus their sum.
Fan projective_space(std::size_t n, const std::string& prefix = "X");
// Rays u1=(1,0), u2=(0,1), u3=(-1,a), u4=(0,-1).
Fan hirzebruch(long a);
// Ray names must be disjoint.
Fan product(const Fan& a, const Fan& b);
// Star subdivision of the cone `face`: new ray is the sum of its rays.
Fan star_subdivision(const Fan& f, const RaySet& face, const std::string& new_ray);
// Applies x -> x * u to every ray (u unimodular) and to the support.
Fan change_basis(const Fan& f, const IntMatrix& u);
// Toric variety as spherical data with no spherical roots and no colors.
SphericalData toric_as_spherical(const Fan& f);

// Rank 2, one spherical root (1,0), rays E1=(-1,0), D2=(0,1), D3=(0,-1).
SphericalData synthetic_nonlinear();
// Same fan with a color Z1=(1,0).
SphericalData synthetic_linear();
// Rank 3 instance whose restricted Phi is strictly smaller than the fiber one.
SphericalData synthetic_strict_fiber();
// Two overlapping cones on (1,0),(0,1) and (1,0),(1,1).
Fan overlapping_fan();

struct CorpusEntry {
  std::string name;
  Json input;
  Json expected;  // hand-derived facts about the input
};

std::vector<CorpusEntry> corpus_entries();

}  // namespace fanaut

#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "fanaut/cone.hpp"
#include "fanaut/exact_linalg.hpp"

namespace fanaut {

// A simplicial cone of a fan, named by its sorted ray names.
using RaySet = std::vector<std::string>;

struct Fan {
  std::size_t rank = 0;
  std::map<std::string, IntVector> rays;
  std::vector<RaySet> cones;  // listed cones; faces are implied
  std::optional<HalfspaceCone> support;  // absent means the whole space

  std::vector<IntVector> vectors_of(const RaySet& names) const;
  Cone cone_of(const RaySet& names) const;
  // Listed cones closed under faces, ordered by size then names.
  std::vector<RaySet> all_cones() const;
  std::vector<RaySet> maximal_cones() const;
  // Name of the ray with this primitive vector, if any.
  std::optional<std::string> ray_named(const IntVector& v) const;
};

struct Violation {
  std::string kind;
  std::string message;
  std::optional<IntVector> witness;
};

struct ValidationReport {
  bool valid = true;
  std::vector<Violation> violations;
};

ValidationReport validate(const Fan& f);
bool is_smooth(const Fan& f);
// Union of the cones equals the support; expects a valid fan.
bool is_complete(const Fan& f);

struct CoverageReport {
  bool is_fan = true;      // pairwise intersections are common faces
  bool inside = true;      // every cone lies in the region
  bool covers = false;     // the union is the whole region
  std::string detail;
};

// Decides whether a finite set of cones is a fan whose union is the region
// (the whole space when region is empty).
CoverageReport coverage(std::span<const Cone> cones, std::size_t dim,
                        const std::optional<HalfspaceCone>& region);

struct RestrictedFan {
  Fan fan;  // in coordinates of the HNF basis of the subspace lattice
  Sublattice subspace;
  std::vector<Cone> ambient_cones;  // c intersect subspace, distinct, sorted
  bool faces_ok = true;  // every intersection is a face of its source cone
};

// {c intersect W}; ray names are inherited when the primitive vector matches a ray of f.
RestrictedFan restrict_to_subspace(const Fan& f, const Sublattice& w);

// Every cone of f outside sub is cone(ray, s) for some s in sub.
bool is_join(const Fan& f, std::span<const Cone> sub, const std::string& ray);
bool is_join(const Fan& f, const Fan& sub, const std::string& ray);

struct HasseDiagram {
  std::vector<std::string> labels;
  // (i, j): orbit j lies in the closure of orbit i and the relation is a cover.
  std::vector<std::pair<std::size_t, std::size_t>> covers;
};

// Covering pairs of the partial order given by below(i, j) meaning i strictly below j.
std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(
    std::size_t n, const std::vector<std::vector<bool>>& below);

struct OrbitPoset {
  std::vector<RaySet> cones;  // node i is the orbit of cones[i]
  HasseDiagram hasse;
};

OrbitPoset orbit_closure_poset(const Fan& f);

std::string label_of(const RaySet& s);

}  // namespace fanaut

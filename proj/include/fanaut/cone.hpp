#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "fanaut/exact_linalg.hpp"

namespace fanaut {

// Polyhedral cone {x : a.x >= 0 for a in inequalities, e.x = 0 for e in equations}
// written as lineality span plus a minimal set of rays (rays are defined
// modulo the lineality space).
struct DoubleDescription {
  std::vector<IntVector> lineality;
  std::vector<IntVector> rays;
};

DoubleDescription double_description(std::span<const IntVector> inequalities,
                                     std::span<const IntVector> equations, std::size_t dim);

// Strictly convex rational polyhedral cone with both descriptions.
class Cone {
 public:
  // Throws NotStrictlyConvex if the generators span a line.
  static Cone from_generators(std::size_t dim, std::span<const IntVector> generators);
  static Cone from_inequalities(std::size_t dim, std::span<const IntVector> inequalities,
                                std::span<const IntVector> equations = {});
  static Cone zero(std::size_t dim) { return from_generators(dim, {}); }

  std::size_t ambient_dim() const { return dim_; }
  std::size_t dim() const { return span_dim_; }
  // Primitive extreme rays, sorted.
  const std::vector<IntVector>& rays() const { return rays_; }
  // Primitive facet normals, each nonnegative on the cone and zero on a facet.
  const std::vector<IntVector>& facets() const { return facets_; }
  // Basis of span(cone)^perp.
  const std::vector<IntVector>& span_equations() const { return span_eqs_; }

  bool contains(const IntVector& v) const;
  bool relint_contains(const IntVector& v) const;
  bool is_simplicial() const { return rays_.size() == span_dim_; }
  // Sum of the rays; lies in the relative interior.
  IntVector interior_point() const;

  std::vector<Cone> faces() const;
  std::vector<Cone> facet_faces() const;  // faces of codimension one
  bool is_face_of(const Cone& other) const;

  Cone intersect(const Cone& other) const;
  // Intersection with the rational span of a sublattice.
  Cone intersect_subspace(const Sublattice& w) const;

  bool operator==(const Cone& o) const { return dim_ == o.dim_ && rays_ == o.rays_; }
  bool operator<(const Cone& o) const;

 private:
  std::size_t dim_ = 0;
  std::size_t span_dim_ = 0;
  std::vector<IntVector> rays_;
  std::vector<IntVector> facets_;
  std::vector<IntVector> span_eqs_;
};

// Cone {x : <x, chi> >= 0 for every chi} that may contain lines.
class HalfspaceCone {
 public:
  HalfspaceCone() = default;
  HalfspaceCone(std::size_t dim, std::vector<IntVector> inequalities);
  // Cone generated by a lineality basis and rays; converted to inequalities.
  static HalfspaceCone from_generators(std::size_t dim, std::span<const IntVector> lineality,
                                       std::span<const IntVector> rays);

  std::size_t ambient_dim() const { return dim_; }
  const std::vector<IntVector>& inequalities() const { return ineqs_; }
  bool contains(const IntVector& v) const;
  bool contains(const Cone& c) const;
  // True iff some nonzero inequality chi vanishes on all the vectors.
  bool on_boundary_hyperplane(std::span<const IntVector> vectors) const;
  DoubleDescription generators() const;
  Sublattice lineality() const;
  bool same_set(const HalfspaceCone& other) const;

 private:
  std::size_t dim_ = 0;
  std::vector<IntVector> ineqs_;
};

}  // namespace fanaut

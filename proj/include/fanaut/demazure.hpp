#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fanaut/exact_linalg.hpp"
#include "fanaut/fan.hpp"

namespace fanaut {

// A character alpha with exactly one ray pairing to -1 (the moved ray) and
// all other rays pairing nonnegatively.
struct DemazureRoot {
  IntVector alpha;
  std::string moved;
  bool operator==(const DemazureRoot&) const = default;
  bool operator<(const DemazureRoot& o) const { return alpha < o.alpha; }
};

// Requires a valid smooth complete fan with full support. Sorted by alpha.
std::vector<DemazureRoot> demazure_roots(const Fan& f);

// Exhaustive scan of [-bound, bound]^n. Throws BoundTooSmall when a vertex of
// {alpha : <v, alpha> >= -1} leaves the box.
std::vector<DemazureRoot> roots_oracle(const Fan& f, long bound);

// Lattice points of {x : <a, x> >= b_a} for a bounded polyhedron given as
// (a, b) pairs, plus equations <e, x> = c_e. Throws Unbounded otherwise.
struct AffineConstraint {
  IntVector normal;
  Integer rhs;
};
std::vector<IntVector> lattice_points(std::size_t dim, const std::vector<AffineConstraint>& inequalities,
                                      const std::vector<AffineConstraint>& equations);

class Positivity {
 public:
  static Positivity lex() { return Positivity{}; }
  static Positivity by_vector(IntVector v);
  // "lex" or "vector:<comma separated ints>".
  static Positivity parse(const std::string& text);
  std::string to_string() const;
  // Sign of <v, alpha>, ties broken lexicographically.
  bool is_positive(const IntVector& alpha) const;

 private:
  std::optional<IntVector> v_;
};

struct RootData {
  std::vector<DemazureRoot> all_roots;
  RaySet stable;
  std::vector<DemazureRoot> phi;
  std::vector<DemazureRoot> phi_plus;
  std::vector<DemazureRoot> psi;
  Positivity positivity;

  // Moved ray of alpha among all_roots.
  std::optional<std::string> moved_of(const IntVector& alpha) const;
};

// Phi = {alpha : X(alpha) and X(-alpha) exist and are not stable}.
RootData phi(const std::vector<DemazureRoot>& roots, const RaySet& stable);
void positive_system(RootData& rd, const Positivity& positivity);

struct TripleReport {
  bool ok = true;
  std::size_t pairs_checked = 0;
  std::vector<std::string> failures;
};

// For alpha != beta with X(alpha) = X(beta), both with negatives in the list:
// alpha - beta is listed with X(alpha - beta) = X(-beta) and symmetrically.
TripleReport check_triple(const std::vector<DemazureRoot>& roots);

struct IndependenceReport {
  bool ok = true;
  bool distinct = true;
  bool independent = true;
  bool nondegenerate = true;
  IntMatrix gram;  // gram(i, j) = <rho(X(psi_i)), psi_j>
};

IndependenceReport check_independent(const RootData& rd, const Fan& f);

}  // namespace fanaut

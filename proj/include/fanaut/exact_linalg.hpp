#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <vector>

namespace fanaut {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;
using RatVector = std::vector<Rational>;

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static IntMatrix identity(std::size_t n);
  // Rows of `rows` become matrix rows; every row must have length `cols`.
  static IntMatrix from_rows(std::span<const IntVector> rows, std::size_t cols);
  static IntMatrix from_rows(std::initializer_list<std::vector<long>> rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  std::vector<IntVector> row_list() const;
  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& other) const;
  bool operator==(const IntMatrix& other) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += k * row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer& k);
  void add_col(std::size_t dst, std::size_t src, const Integer& k);
  void negate_row(std::size_t r);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

IntVector make_vector(std::initializer_list<long> values);
Integer dot(const IntVector& a, const IntVector& b);
IntVector add(const IntVector& a, const IntVector& b);
IntVector sub(const IntVector& a, const IntVector& b);
IntVector neg(const IntVector& a);
IntVector scale(const Integer& k, const IntVector& a);
bool is_zero(const IntVector& v);
Integer content(const IntVector& v);  // gcd of entries, 0 for the zero vector
IntVector primitive(const IntVector& v);  // v / content(v); zero stays zero
// Clears denominators and returns the primitive integer vector on the same ray.
IntVector primitive(const RatVector& v);
std::string to_string(const IntVector& v);

// Floor division and matching nonnegative remainder (divisor != 0).
Integer floor_div(const Integer& a, const Integer& b);

struct HermiteResult {
  IntMatrix h;  // row-style Hermite normal form, zero rows last
  IntMatrix u;  // unimodular, u * m == h
  std::size_t rank = 0;
};

// Row-style HNF: pivots positive, strictly increasing pivot columns,
// entries above a pivot reduced into [0, pivot).
HermiteResult hermite_normal_form(const IntMatrix& m);

// Invariant factors d_1 | d_2 | ... of Z^cols / rowspace(m), listed with
// length cols: nonzero factors first, then zeros for the free part.
std::vector<Integer> smith_normal_form(const IntMatrix& m);

std::size_t rank(const IntMatrix& m);
std::size_t rank(std::span<const IntVector> vectors, std::size_t dim);
Integer determinant(const IntMatrix& m);  // square only

// Solves x * a = b over Q where rows of a are the unknown's coefficients,
// i.e. finds coefficients expressing b in terms of the rows of a.
std::optional<RatVector> solve_row_combination(std::span<const IntVector> rows, const IntVector& b);

// Saturated subgroup of Z^n given by an HNF basis.
class Sublattice {
 public:
  Sublattice() = default;
  static Sublattice span(std::size_t ambient, std::span<const IntVector> generators);
  static Sublattice full(std::size_t ambient);
  static Sublattice zero(std::size_t ambient);

  std::size_t ambient_rank() const { return ambient_; }
  std::size_t rank() const { return basis_.size(); }
  const std::vector<IntVector>& basis() const { return basis_; }

  bool contains(const IntVector& v) const;
  // Integer coordinates of v in basis(), if v lies in the lattice.
  std::optional<IntVector> coordinates(const IntVector& v) const;
  bool is_saturated() const;
  Sublattice saturation() const;
  bool operator==(const Sublattice& other) const = default;

 private:
  std::size_t ambient_ = 0;
  std::vector<IntVector> basis_;
};

// {x in Z^n : <x, v> = 0 for all v}, saturated, HNF basis.
Sublattice annihilator(std::span<const IntVector> vectors, std::size_t n);
Sublattice annihilator(const Sublattice& s);

// True iff a + b = Z^n and a intersect b = 0.
bool is_direct_sum(const Sublattice& a, const Sublattice& b);

// Evaluates v against each basis vector: (<v, b_1>, ..., <v, b_k>).
IntVector evaluate(const IntVector& v, std::span<const IntVector> basis);

}  // namespace fanaut

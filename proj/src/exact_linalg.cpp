#include "fanaut/exact_linalg.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace fanaut {

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(std::span<const IntVector> rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(std::initializer_list<std::vector<long>> rows) {
  std::size_t cols = rows.size() ? rows.begin()->size() : 0;
  IntMatrix m(rows.size(), cols);
  std::size_t r = 0;
  for (const auto& row : rows) {
    if (row.size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = row[c];
    ++r;
  }
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

std::vector<IntVector> IntMatrix::row_list() const {
  std::vector<IntVector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("dimension mismatch in product");
  IntMatrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
    }
  return p;
}

bool IntMatrix::operator==(const IntMatrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

void IntMatrix::add_row(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t c = 0; c < cols_; ++c) (*this)(dst, c) += k * (*this)(src, c);
}

void IntMatrix::add_col(std::size_t dst, std::size_t src, const Integer& k) {
  if (k == 0) return;
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, dst) += k * (*this)(r, src);
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = -(*this)(r, c);
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << ',';
    os << to_string(m.row(r));
  }
  return os << ']';
}

IntVector make_vector(std::initializer_list<long> values) {
  IntVector v;
  v.reserve(values.size());
  for (long x : values) v.emplace_back(x);
  return v;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector add(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

IntVector sub(const IntVector& a, const IntVector& b) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

IntVector neg(const IntVector& a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

IntVector scale(const Integer& k, const IntVector& a) {
  IntVector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

IntVector primitive(const IntVector& v) {
  Integer g = content(v);
  if (g == 0 || g == 1) return v;
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = v[i] / g;
  return r;
}

IntVector primitive(const RatVector& v) {
  Integer den = 1;
  for (const auto& x : v) den = lcm(den, Integer(x.get_den()));
  IntVector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    Rational s = v[i] * den;
    r[i] = s.get_num();
  }
  return primitive(r);
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i].get_str();
  }
  os << ')';
  return os.str();
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

HermiteResult hermite_normal_form(const IntMatrix& m) {
  IntMatrix h = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  std::size_t r = 0;
  for (std::size_t col = 0; col < h.cols() && r < h.rows(); ++col) {
    while (true) {
      std::size_t best = h.rows();
      for (std::size_t i = r; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        if (best == h.rows() || abs(h(i, col)) < abs(h(best, col))) best = i;
      }
      if (best == h.rows()) break;
      h.swap_rows(r, best);
      u.swap_rows(r, best);
      bool done = true;
      for (std::size_t i = r + 1; i < h.rows(); ++i) {
        if (h(i, col) == 0) continue;
        Integer q = floor_div(h(i, col), h(r, col));
        h.add_row(i, r, -q);
        u.add_row(i, r, -q);
        if (h(i, col) != 0) done = false;
      }
      if (done) break;
    }
    if (h(r, col) == 0) continue;
    if (h(r, col) < 0) {
      h.negate_row(r);
      u.negate_row(r);
    }
    for (std::size_t i = 0; i < r; ++i) {
      Integer q = floor_div(h(i, col), h(r, col));
      h.add_row(i, r, -q);
      u.add_row(i, r, -q);
    }
    ++r;
  }
  return {std::move(h), std::move(u), r};
}

std::vector<Integer> smith_normal_form(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows(), cols = a.cols();
  const std::size_t lim = std::min(rows, cols);
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < lim; ++t) {
    bool found = false;
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      std::size_t pr = rows, pc = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (a(i, j) != 0 && (pr == rows || abs(a(i, j)) < abs(a(pr, pc)))) {
            pr = i;
            pc = j;
          }
      if (pr == rows) break;
      found = true;
      a.swap_rows(t, pr);
      a.swap_cols(t, pc);
      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        a.add_row(i, t, -floor_div(a(i, t), a(t, t)));
        if (a(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        a.add_col(j, t, -floor_div(a(t, j), a(t, t)));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      std::size_t bad = rows;
      for (std::size_t i = t + 1; i < rows && bad == rows; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad == rows) break;
      a.add_row(t, bad, 1);
    }
    if (!found) break;
    diag.push_back(abs(a(t, t)));
  }
  while (diag.size() < cols) diag.emplace_back(0);
  return diag;
}

std::size_t rank(const IntMatrix& m) { return hermite_normal_form(m).rank; }

std::size_t rank(std::span<const IntVector> vectors, std::size_t dim) {
  if (vectors.empty()) return 0;
  return rank(IntMatrix::from_rows(vectors, dim));
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  // Bareiss fraction-free elimination.
  IntMatrix a = m;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = v;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::optional<RatVector> solve_row_combination(std::span<const IntVector> rows, const IntVector& b) {
  // Unknowns x_1..x_k with sum x_i rows[i] = b; Gaussian elimination on the
  // transposed augmented system.
  const std::size_t k = rows.size(), n = b.size();
  std::vector<RatVector> aug(n, RatVector(k + 1));
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < k; ++i) aug[j][i] = rows[i][j];
    aug[j][k] = b[j];
  }
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < k && r < n; ++c) {
    std::size_t p = r;
    while (p < n && aug[p][c] == 0) ++p;
    if (p == n) continue;
    std::swap(aug[p], aug[r]);
    Rational inv = 1 / aug[r][c];
    for (auto& x : aug[r]) x *= inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      Rational f = aug[i][c];
      for (std::size_t j = c; j <= k; ++j) aug[i][j] -= f * aug[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i)
    if (aug[i][k] != 0) return std::nullopt;
  RatVector x(k);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = aug[i][k];
  return x;
}

Sublattice Sublattice::span(std::size_t ambient, std::span<const IntVector> generators) {
  Sublattice s;
  s.ambient_ = ambient;
  if (generators.empty()) return s;
  auto hnf = hermite_normal_form(IntMatrix::from_rows(generators, ambient));
  for (std::size_t r = 0; r < hnf.rank; ++r) s.basis_.push_back(hnf.h.row(r));
  return s;
}

Sublattice Sublattice::full(std::size_t ambient) {
  return span(ambient, IntMatrix::identity(ambient).row_list());
}

Sublattice Sublattice::zero(std::size_t ambient) {
  Sublattice s;
  s.ambient_ = ambient;
  return s;
}

std::optional<IntVector> Sublattice::coordinates(const IntVector& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("coordinates: length mismatch");
  IntVector y(basis_.size());
  IntVector rest = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    std::size_t p = 0;
    while (basis_[i][p] == 0) ++p;
    if (rest[p] % basis_[i][p] != 0) return std::nullopt;
    y[i] = rest[p] / basis_[i][p];
    rest = sub(rest, scale(y[i], basis_[i]));
  }
  if (!is_zero(rest)) return std::nullopt;
  return y;
}

bool Sublattice::contains(const IntVector& v) const { return coordinates(v).has_value(); }

bool Sublattice::is_saturated() const { return saturation() == *this; }

Sublattice Sublattice::saturation() const { return annihilator(annihilator(*this)); }

Sublattice annihilator(std::span<const IntVector> vectors, std::size_t n) {
  if (vectors.empty()) return Sublattice::full(n);
  // u * A^T = h; rows of u opposite zero rows of h span the integer kernel.
  IntMatrix at = IntMatrix::from_rows(vectors, n).transpose();
  auto hnf = hermite_normal_form(at);
  std::vector<IntVector> kernel;
  for (std::size_t r = hnf.rank; r < n; ++r) kernel.push_back(hnf.u.row(r));
  return Sublattice::span(n, kernel);
}

Sublattice annihilator(const Sublattice& s) { return annihilator(s.basis(), s.ambient_rank()); }

bool is_direct_sum(const Sublattice& a, const Sublattice& b) {
  const std::size_t n = a.ambient_rank();
  if (b.ambient_rank() != n) throw std::invalid_argument("is_direct_sum: ambient mismatch");
  if (a.rank() + b.rank() != n) return false;
  if (n == 0) return true;
  std::vector<IntVector> all = a.basis();
  all.insert(all.end(), b.basis().begin(), b.basis().end());
  auto d = smith_normal_form(IntMatrix::from_rows(all, n));
  return std::all_of(d.begin(), d.end(), [](const Integer& x) { return x == 1; });
}

IntVector evaluate(const IntVector& v, std::span<const IntVector> basis) {
  IntVector out;
  out.reserve(basis.size());
  for (const auto& b : basis) out.push_back(dot(v, b));
  return out;
}

}  // namespace fanaut

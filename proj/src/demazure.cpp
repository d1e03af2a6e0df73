#include "fanaut/demazure.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "fanaut/errors.hpp"

namespace fanaut {

namespace {

// Name of the unique ray pairing to -1, if alpha is a root.
std::optional<std::string> moved_ray(const Fan& f, const IntVector& alpha) {
  std::optional<std::string> moved;
  for (const auto& [name, v] : f.rays) {
    Integer s = dot(v, alpha);
    if (s >= 0) continue;
    if (s != -1 || moved) return std::nullopt;
    moved = name;
  }
  return moved;
}

void require_root_preconditions(const Fan& f) {
  if (!validate(f).valid) throw PreconditionFailed("fan is not valid");
  if (f.support && !f.support->same_set(HalfspaceCone(f.rank, {})))
    throw PreconditionFailed("Demazure roots need full support");
  if (!is_smooth(f)) throw PreconditionFailed("fan is not smooth");
  if (!is_complete(f)) throw PreconditionFailed("fan is not complete");
}

template <class Visit>
void scan_box(const IntVector& lo, const IntVector& hi, Visit&& visit) {
  const std::size_t n = lo.size();
  for (std::size_t k = 0; k < n; ++k)
    if (lo[k] > hi[k]) return;
  IntVector x = lo;
  while (true) {
    visit(x);
    std::size_t k = 0;
    while (k < n) {
      if (x[k] < hi[k]) {
        ++x[k];
        break;
      }
      x[k] = lo[k];
      ++k;
    }
    if (k == n) return;
  }
}

}  // namespace

std::vector<IntVector> lattice_points(std::size_t dim, const std::vector<AffineConstraint>& inequalities,
                                      const std::vector<AffineConstraint>& equations) {
  // Homogenize with a last coordinate t >= 0.
  auto lift = [&](const AffineConstraint& c) {
    IntVector v = c.normal;
    v.push_back(-c.rhs);
    return v;
  };
  std::vector<IntVector> ineqs, eqs;
  for (const auto& c : inequalities) ineqs.push_back(lift(c));
  IntVector t(dim + 1);
  t[dim] = 1;
  ineqs.push_back(t);
  for (const auto& c : equations) eqs.push_back(lift(c));
  auto dd = double_description(ineqs, eqs, dim + 1);
  std::vector<RatVector> vertices;
  bool recedes = !dd.lineality.empty();
  for (const auto& r : dd.rays) {
    if (r[dim] == 0) {
      recedes = true;
      continue;
    }
    RatVector v(dim);
    for (std::size_t k = 0; k < dim; ++k) v[k] = Rational(r[k], r[dim]);
    vertices.push_back(std::move(v));
  }
  if (vertices.empty()) return {};
  if (recedes) throw Unbounded("polyhedron is unbounded");
  IntVector lo(dim), hi(dim);
  for (std::size_t k = 0; k < dim; ++k) {
    Rational mn = vertices[0][k], mx = vertices[0][k];
    for (const auto& v : vertices) {
      mn = std::min(mn, v[k]);
      mx = std::max(mx, v[k]);
    }
    mpz_fdiv_q(lo[k].get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
    mpz_cdiv_q(hi[k].get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
  }
  std::vector<IntVector> out;
  scan_box(lo, hi, [&](const IntVector& x) {
    for (const auto& c : inequalities)
      if (dot(c.normal, x) < c.rhs) return;
    for (const auto& c : equations)
      if (dot(c.normal, x) != c.rhs) return;
    out.push_back(x);
  });
  return out;
}

std::vector<DemazureRoot> demazure_roots(const Fan& f) {
  require_root_preconditions(f);
  std::vector<AffineConstraint> ineqs;
  for (const auto& [name, v] : f.rays) ineqs.push_back({v, -1});
  std::vector<DemazureRoot> out;
  for (const auto& alpha : lattice_points(f.rank, ineqs, {})) {
    if (auto m = moved_ray(f, alpha)) out.push_back({alpha, *m});
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<DemazureRoot> roots_oracle(const Fan& f, long bound) {
  require_root_preconditions(f);
  const std::size_t n = f.rank;
  std::vector<IntVector> rays;
  for (const auto& [name, v] : f.rays) rays.push_back(v);
  // Vertices by Cramer's rule on every n-subset of the facet inequalities.
  std::vector<std::size_t> pick(n);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t depth, std::size_t start) {
    if (depth == n) {
      IntMatrix a(n, n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = rays[pick[i]][j];
      Integer det = determinant(a);
      if (det == 0) return;
      IntVector num(n);  // vertex = num / det
      for (std::size_t k = 0; k < n; ++k) {
        IntMatrix b = a;
        for (std::size_t i = 0; i < n; ++i) b(i, k) = -1;
        num[k] = determinant(b);
      }
      for (const auto& v : rays) {
        Integer s = dot(v, num);
        // <v, num/det> >= -1
        if (det > 0 ? s < -det : s > -det) return;
      }
      for (std::size_t k = 0; k < n; ++k)
        if (abs(num[k]) > abs(det) * bound)
          throw BoundTooSmall("a vertex of the root polytope lies outside the box");
      return;
    }
    for (std::size_t i = start; i < rays.size(); ++i) {
      pick[depth] = i;
      choose(depth + 1, i + 1);
    }
  };
  choose(0, 0);
  std::vector<DemazureRoot> out;
  IntVector lo(n, Integer(-bound)), hi(n, Integer(bound));
  scan_box(lo, hi, [&](const IntVector& alpha) {
    int minus_one = 0;
    std::string moved;
    bool ok = true;
    for (const auto& [name, v] : f.rays) {
      Integer s = dot(v, alpha);
      if (s == -1) {
        ++minus_one;
        moved = name;
      } else if (s < 0) {
        ok = false;
      }
    }
    if (ok && minus_one == 1) out.push_back({alpha, moved});
  });
  std::sort(out.begin(), out.end());
  return out;
}

Positivity Positivity::by_vector(IntVector v) {
  Positivity p;
  p.v_ = std::move(v);
  return p;
}

Positivity Positivity::parse(const std::string& text) {
  if (text == "lex") return lex();
  const std::string prefix = "vector:";
  if (text.rfind(prefix, 0) != 0) throw ParseError("positivity must be lex or vector:<ints>");
  IntVector v;
  std::stringstream ss(text.substr(prefix.size()));
  std::string item;
  while (std::getline(ss, item, ',')) {
    Integer x;
    if (item.empty() || x.set_str(item, 10) != 0) throw ParseError("bad integer in positivity vector: " + item);
    v.push_back(x);
  }
  if (v.empty()) throw ParseError("empty positivity vector");
  return by_vector(std::move(v));
}

std::string Positivity::to_string() const {
  if (!v_) return "lex";
  std::string s = "vector:";
  for (std::size_t i = 0; i < v_->size(); ++i) {
    if (i) s += ",";
    s += (*v_)[i].get_str();
  }
  return s;
}

bool Positivity::is_positive(const IntVector& alpha) const {
  if (v_) {
    if (v_->size() != alpha.size()) throw PreconditionFailed("positivity vector has wrong length");
    Integer s = dot(*v_, alpha);
    if (s != 0) return s > 0;
  }
  for (const auto& x : alpha)
    if (x != 0) return x > 0;
  return false;
}

std::optional<std::string> RootData::moved_of(const IntVector& alpha) const {
  for (const auto& r : all_roots)
    if (r.alpha == alpha) return r.moved;
  return std::nullopt;
}

RootData phi(const std::vector<DemazureRoot>& roots, const RaySet& stable) {
  RootData rd;
  rd.all_roots = roots;
  std::sort(rd.all_roots.begin(), rd.all_roots.end());
  rd.stable = stable;
  std::sort(rd.stable.begin(), rd.stable.end());
  auto is_stable = [&](const std::string& n) { return std::binary_search(rd.stable.begin(), rd.stable.end(), n); };
  for (const auto& r : rd.all_roots) {
    if (is_stable(r.moved)) continue;
    auto m = rd.moved_of(neg(r.alpha));
    if (m && !is_stable(*m)) rd.phi.push_back(r);
  }
  return rd;
}

void positive_system(RootData& rd, const Positivity& positivity) {
  rd.positivity = positivity;
  rd.phi_plus.clear();
  rd.psi.clear();
  for (const auto& r : rd.phi)
    if (positivity.is_positive(r.alpha)) rd.phi_plus.push_back(r);
  std::set<IntVector> sums;
  for (const auto& a : rd.phi_plus)
    for (const auto& b : rd.phi_plus) sums.insert(add(a.alpha, b.alpha));
  for (const auto& r : rd.phi_plus)
    if (!sums.count(r.alpha)) rd.psi.push_back(r);
}

TripleReport check_triple(const std::vector<DemazureRoot>& roots) {
  TripleReport rep;
  std::map<IntVector, std::string> moved;
  for (const auto& r : roots) moved[r.alpha] = r.moved;
  auto lookup = [&](const IntVector& a) -> std::optional<std::string> {
    auto it = moved.find(a);
    if (it == moved.end()) return std::nullopt;
    return it->second;
  };
  for (const auto& a : roots) {
    auto ma = lookup(neg(a.alpha));
    if (!ma) continue;
    for (const auto& b : roots) {
      if (a.alpha == b.alpha || a.moved != b.moved) continue;
      auto mb = lookup(neg(b.alpha));
      if (!mb) continue;
      ++rep.pairs_checked;
      auto g = lookup(sub(a.alpha, b.alpha));
      auto h = lookup(sub(b.alpha, a.alpha));
      if (!g || *g != *mb || !h || *h != *ma) {
        rep.ok = false;
        rep.failures.push_back("pair " + to_string(a.alpha) + ", " + to_string(b.alpha));
      }
    }
  }
  return rep;
}

IndependenceReport check_independent(const RootData& rd, const Fan& f) {
  IndependenceReport rep;
  const std::size_t k = rd.psi.size();
  std::vector<IntVector> us;
  std::set<std::string> names;
  for (const auto& a : rd.psi) {
    names.insert(a.moved);
    us.push_back(f.rays.at(a.moved));
  }
  rep.distinct = names.size() == k;
  rep.independent = rank(us, f.rank) == k;
  rep.gram = IntMatrix(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) rep.gram(i, j) = dot(us[i], rd.psi[j].alpha);
  rep.nondegenerate = determinant(rep.gram) != 0;
  rep.ok = rep.distinct && rep.independent && rep.nondegenerate;
  return rep;
}

}  // namespace fanaut

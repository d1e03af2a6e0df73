#include "fanaut/cone.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "fanaut/errors.hpp"

namespace fanaut {

namespace {

using ZeroSet = std::vector<bool>;

ZeroSet zero_set(const IntVector& r, const std::vector<IntVector>& processed) {
  ZeroSet z(processed.size());
  for (std::size_t i = 0; i < processed.size(); ++i) z[i] = dot(processed[i], r) == 0;
  return z;
}

bool subset(const ZeroSet& a, const ZeroSet& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

ZeroSet meet(const ZeroSet& a, const ZeroSet& b) {
  ZeroSet z(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) z[i] = a[i] && b[i];
  return z;
}

void dedupe(std::vector<IntVector>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

DoubleDescription double_description(std::span<const IntVector> inequalities,
                                     std::span<const IntVector> equations, std::size_t dim) {
  std::vector<IntVector> constraints;
  for (const auto& a : inequalities) constraints.push_back(a);
  for (const auto& e : equations) {
    constraints.push_back(e);
    constraints.push_back(neg(e));
  }
  std::vector<IntVector> lin = IntMatrix::identity(dim).row_list();
  std::vector<IntVector> rays;
  std::vector<IntVector> processed;
  for (const auto& a : constraints) {
    if (a.size() != dim) throw std::invalid_argument("constraint length mismatch");
    if (is_zero(a)) continue;
    auto it = std::find_if(lin.begin(), lin.end(), [&](const IntVector& l) { return dot(a, l) != 0; });
    if (it != lin.end()) {
      IntVector l = *it;
      lin.erase(it);
      Integer al = dot(a, l);
      if (al < 0) {
        l = neg(l);
        al = -al;
      }
      for (auto& other : lin) other = primitive(sub(scale(al, other), scale(dot(a, other), l)));
      for (auto& r : rays) r = primitive(sub(scale(al, r), scale(dot(a, r), l)));
      rays.push_back(primitive(l));
    } else {
      std::vector<IntVector> pos, zero, negv;
      for (const auto& r : rays) {
        Integer s = dot(a, r);
        (s > 0 ? pos : s == 0 ? zero : negv).push_back(r);
      }
      std::vector<IntVector> next = pos;
      next.insert(next.end(), zero.begin(), zero.end());
      if (!pos.empty() && !negv.empty()) {
        std::vector<ZeroSet> zs;
        zs.reserve(rays.size());
        for (const auto& r : rays) zs.push_back(zero_set(r, processed));
        auto index_of = [&](const IntVector& v) {
          return static_cast<std::size_t>(std::find(rays.begin(), rays.end(), v) - rays.begin());
        };
        for (const auto& p : pos) {
          std::size_t ip = index_of(p);
          for (const auto& n : negv) {
            std::size_t in = index_of(n);
            ZeroSet common = meet(zs[ip], zs[in]);
            bool adjacent = true;
            for (std::size_t k = 0; k < rays.size() && adjacent; ++k) {
              if (k == ip || k == in) continue;
              if (subset(common, zs[k])) adjacent = false;
            }
            if (adjacent) next.push_back(primitive(sub(scale(dot(a, p), n), scale(dot(a, n), p))));
          }
        }
      }
      rays = std::move(next);
    }
    dedupe(rays);
    processed.push_back(a);
  }
  DoubleDescription out;
  if (!lin.empty()) out.lineality = Sublattice::span(dim, lin).basis();
  out.rays = std::move(rays);
  return out;
}

Cone Cone::from_generators(std::size_t dim, std::span<const IntVector> generators) {
  Cone c;
  c.dim_ = dim;
  std::vector<IntVector> gens;
  for (const auto& g : generators) {
    if (g.size() != dim) throw std::invalid_argument("generator length mismatch");
    if (!is_zero(g)) gens.push_back(primitive(g));
  }
  dedupe(gens);
  if (gens.empty()) {
    c.span_eqs_ = IntMatrix::identity(dim).row_list();
    return c;
  }
  c.span_eqs_ = annihilator(gens, dim).basis();
  c.span_dim_ = dim - c.span_eqs_.size();
  auto dual = double_description(gens, {}, dim);
  c.facets_ = dual.rays;
  std::vector<IntVector> test = c.facets_;
  test.insert(test.end(), c.span_eqs_.begin(), c.span_eqs_.end());
  if (annihilator(test, dim).rank() != 0)
    throw NotStrictlyConvex("cone generated by the given vectors contains a line");
  for (const auto& g : gens) {
    std::vector<IntVector> tight = c.span_eqs_;
    for (const auto& f : c.facets_)
      if (dot(f, g) == 0) tight.push_back(f);
    if (rank(tight, dim) + 1 == dim) c.rays_.push_back(g);
  }
  return c;
}

Cone Cone::from_inequalities(std::size_t dim, std::span<const IntVector> inequalities,
                             std::span<const IntVector> equations) {
  auto dd = double_description(inequalities, equations, dim);
  if (!dd.lineality.empty()) throw NotStrictlyConvex("inequalities do not cut out a pointed cone");
  return from_generators(dim, dd.rays);
}

bool Cone::contains(const IntVector& v) const {
  for (const auto& e : span_eqs_)
    if (dot(e, v) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, v) < 0) return false;
  return true;
}

bool Cone::relint_contains(const IntVector& v) const {
  for (const auto& e : span_eqs_)
    if (dot(e, v) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, v) <= 0) return false;
  return true;
}

IntVector Cone::interior_point() const {
  IntVector p(dim_);
  for (const auto& r : rays_) p = add(p, r);
  return p;
}

std::vector<Cone> Cone::faces() const {
  std::vector<std::vector<std::size_t>> facet_sets;
  for (const auto& f : facets_) {
    std::vector<std::size_t> z;
    for (std::size_t i = 0; i < rays_.size(); ++i)
      if (dot(f, rays_[i]) == 0) z.push_back(i);
    facet_sets.push_back(std::move(z));
  }
  std::vector<std::size_t> all(rays_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  std::set<std::vector<std::size_t>> seen{all};
  std::vector<std::vector<std::size_t>> work{all};
  while (!work.empty()) {
    auto cur = work.back();
    work.pop_back();
    for (const auto& z : facet_sets) {
      std::vector<std::size_t> next;
      std::set_intersection(cur.begin(), cur.end(), z.begin(), z.end(), std::back_inserter(next));
      if (seen.insert(next).second) work.push_back(next);
    }
  }
  std::vector<Cone> out;
  for (const auto& s : seen) {
    std::vector<IntVector> gens;
    for (auto i : s) gens.push_back(rays_[i]);
    out.push_back(from_generators(dim_, gens));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Cone> Cone::facet_faces() const {
  std::vector<Cone> out;
  for (auto& f : faces())
    if (f.dim() + 1 == span_dim_) out.push_back(std::move(f));
  return out;
}

bool Cone::is_face_of(const Cone& other) const {
  if (dim_ != other.dim_) return false;
  for (const auto& r : rays_)
    if (!std::binary_search(other.rays_.begin(), other.rays_.end(), r)) return false;
  // Minimal face of other containing this cone: rays on every facet tight on this cone.
  std::vector<IntVector> minimal;
  for (const auto& r : other.rays_) {
    bool in = true;
    for (const auto& f : other.facets_) {
      bool tight = std::all_of(rays_.begin(), rays_.end(), [&](const IntVector& s) { return dot(f, s) == 0; });
      if (tight && dot(f, r) != 0) {
        in = false;
        break;
      }
    }
    if (in) minimal.push_back(r);
  }
  return minimal == rays_;
}

Cone Cone::intersect(const Cone& other) const {
  std::vector<IntVector> ineqs = facets_;
  ineqs.insert(ineqs.end(), other.facets_.begin(), other.facets_.end());
  std::vector<IntVector> eqs = span_eqs_;
  eqs.insert(eqs.end(), other.span_eqs_.begin(), other.span_eqs_.end());
  return from_inequalities(dim_, ineqs, eqs);
}

Cone Cone::intersect_subspace(const Sublattice& w) const {
  std::vector<IntVector> eqs = span_eqs_;
  const auto perp = annihilator(w).basis();
  eqs.insert(eqs.end(), perp.begin(), perp.end());
  return from_inequalities(dim_, facets_, eqs);
}

bool Cone::operator<(const Cone& o) const {
  if (span_dim_ != o.span_dim_) return span_dim_ < o.span_dim_;
  return rays_ < o.rays_;
}

HalfspaceCone::HalfspaceCone(std::size_t dim, std::vector<IntVector> inequalities)
    : dim_(dim), ineqs_(std::move(inequalities)) {
  for (const auto& q : ineqs_)
    if (q.size() != dim_) throw std::invalid_argument("inequality length mismatch");
}

HalfspaceCone HalfspaceCone::from_generators(std::size_t dim, std::span<const IntVector> lineality,
                                             std::span<const IntVector> rays) {
  auto dual = double_description(rays, lineality, dim);
  std::vector<IntVector> ineqs = dual.rays;
  for (const auto& l : dual.lineality) {
    ineqs.push_back(l);
    ineqs.push_back(neg(l));
  }
  return HalfspaceCone(dim, std::move(ineqs));
}

bool HalfspaceCone::contains(const IntVector& v) const {
  return std::all_of(ineqs_.begin(), ineqs_.end(), [&](const IntVector& q) { return dot(q, v) >= 0; });
}

bool HalfspaceCone::contains(const Cone& c) const {
  return std::all_of(c.rays().begin(), c.rays().end(), [&](const IntVector& r) { return contains(r); });
}

bool HalfspaceCone::on_boundary_hyperplane(std::span<const IntVector> vectors) const {
  for (const auto& q : ineqs_) {
    if (is_zero(q)) continue;
    if (std::all_of(vectors.begin(), vectors.end(), [&](const IntVector& v) { return dot(q, v) == 0; }))
      return true;
  }
  return false;
}

DoubleDescription HalfspaceCone::generators() const { return double_description(ineqs_, {}, dim_); }

Sublattice HalfspaceCone::lineality() const { return annihilator(ineqs_, dim_); }

bool HalfspaceCone::same_set(const HalfspaceCone& other) const {
  if (dim_ != other.dim_) return false;
  auto inside = [](const HalfspaceCone& a, const HalfspaceCone& b) {
    auto g = a.generators();
    for (const auto& l : g.lineality)
      if (!b.contains(l) || !b.contains(neg(l))) return false;
    for (const auto& r : g.rays)
      if (!b.contains(r)) return false;
    return true;
  };
  return inside(*this, other) && inside(other, *this);
}

}  // namespace fanaut

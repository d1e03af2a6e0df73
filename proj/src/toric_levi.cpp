#include "fanaut/toric_levi.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "fanaut/errors.hpp"

namespace fanaut {

IntVector to_na(const IntVector& v, const Sublattice& lambda_A) { return evaluate(v, lambda_A.basis()); }

LeviInvariants levi_invariants(const Fan& f, const RootData& rd) {
  LeviInvariants inv;
  const std::size_t n = f.rank;
  std::vector<IntVector> us, psi;
  std::set<std::string> moved_pos, moved_neg;
  for (const auto& a : rd.psi) {
    us.push_back(f.rays.at(a.moved));
    psi.push_back(a.alpha);
    moved_pos.insert(a.moved);
    auto m = rd.moved_of(neg(a.alpha));
    if (!m) throw PreconditionFailed("simple root without opposite root " + to_string(a.alpha));
    moved_neg.insert(*m);
  }
  inv.lambda_A = annihilator(us, n);
  inv.n_A = annihilator(psi, n);
  for (const auto& [name, v] : f.rays) {
    bool orth = std::all_of(psi.begin(), psi.end(), [&](const IntVector& a) { return dot(v, a) == 0; });
    if (orth) inv.boundary.push_back(name);
  }
  for (const auto& d : moved_neg)
    if (!moved_pos.count(d)) inv.colors[d] = to_na(f.rays.at(d), inv.lambda_A);
  for (const auto& a : rd.psi)
    if (!inv.colors.count(*rd.moved_of(neg(a.alpha)))) inv.pa_simple_roots.push_back(a.alpha);
  return inv;
}

RaySet color_set(const RootData& rd, const LeviInvariants& inv, const RaySet& cone) {
  auto in_cone = [&](const std::string& n) { return std::find(cone.begin(), cone.end(), n) != cone.end(); };
  RaySet out;
  for (const auto& [d, functional] : inv.colors) {
    if (!in_cone(d)) continue;
    bool all = true;
    for (const auto& b : rd.phi_plus) {
      auto m = rd.moved_of(neg(b.alpha));
      if (m && *m == d && !in_cone(b.moved)) {
        all = false;
        break;
      }
    }
    if (all) out.push_back(d);
  }
  return out;
}

ColoredFan colored_fan(const Fan& f, const RootData& rd, const LeviInvariants& inv) {
  ColoredFan cf;
  cf.rank = inv.lambda_A.rank();
  cf.color_functionals = inv.colors;
  std::vector<std::pair<RaySet, ColoredCone>> made;
  for (const auto& names : f.all_cones()) {
    Cone k = f.cone_of(names).intersect_subspace(inv.n_A);
    std::vector<IntVector> image;
    for (const auto& r : k.rays()) image.push_back(to_na(r, inv.lambda_A));
    made.push_back({names, {Cone::from_generators(cf.rank, image), color_set(rd, inv, names)}});
  }
  std::set<ColoredCone> distinct;
  for (const auto& [names, cc] : made) distinct.insert(cc);
  cf.cones.assign(distinct.begin(), distinct.end());
  for (const auto& [names, cc] : made)
    cf.source[names] = static_cast<std::size_t>(std::lower_bound(cf.cones.begin(), cf.cones.end(), cc) - cf.cones.begin());
  return cf;
}

bool check_horospherical(const ColoredFan& cf) {
  std::vector<Cone> cones;
  for (const auto& c : cf.cones) cones.push_back(c.cone);
  auto rep = coverage(cones, cf.rank, std::nullopt);
  return rep.is_fan && rep.covers;
}

CheckReport check_empty_color_face(const Fan& f, const RootData& rd, const LeviInvariants& inv) {
  CheckReport rep;
  for (const auto& names : f.all_cones()) {
    Cone c = f.cone_of(names);
    bool face = c.intersect_subspace(inv.n_A).is_face_of(c);
    bool empty = color_set(rd, inv, names).empty();
    if (face != empty) rep.fail("cone " + label_of(names));
  }
  return rep;
}

CheckReport check_abelian_orthogonality(const Fan& f, const RootData& rd, const LeviInvariants& inv) {
  CheckReport rep;
  for (const auto& a : rd.psi) {
    const std::string d = *rd.moved_of(neg(a.alpha));
    if (!inv.colors.count(d)) continue;
    for (const auto& b : rd.phi_plus) {
      if (b.alpha == a.alpha) continue;
      if (b.moved == d || b.moved == a.moved)
        rep.fail("moved ray of " + to_string(b.alpha) + " collides with simple root " + to_string(a.alpha));
      bool simple = std::find(rd.psi.begin(), rd.psi.end(), b) != rd.psi.end();
      if (simple && dot(f.rays.at(d), b.alpha) != 0)
        rep.fail("color of " + to_string(a.alpha) + " pairs nontrivially with " + to_string(b.alpha));
    }
  }
  return rep;
}

CheckReport check_boundary(const Fan& f, const RootData& rd, const LeviInvariants& inv) {
  CheckReport rep;
  std::set<std::string> moved;
  for (const auto& a : rd.phi) moved.insert(a.moved);
  RaySet expected;
  for (const auto& [name, v] : f.rays)
    if (!moved.count(name)) expected.push_back(name);
  if (expected != inv.boundary) rep.fail("boundary " + label_of(inv.boundary) + " != " + label_of(expected));
  return rep;
}

bool colors_independent(const LeviInvariants& inv) {
  std::vector<IntVector> v;
  for (const auto& [d, x] : inv.colors) v.push_back(x);
  return rank(v, inv.lambda_A.rank()) == v.size();
}

CheckReport check_color_pairing(const Fan& f, const RootData& rd, const LeviInvariants& inv) {
  CheckReport rep;
  std::map<std::string, IntVector> simple_of;
  for (const auto& a : rd.psi) {
    const std::string d = *rd.moved_of(neg(a.alpha));
    if (!inv.colors.count(d)) continue;
    if (!simple_of.emplace(d, a.alpha).second) rep.fail("color " + d + " is moved by two simple roots");
    for (const auto& b : rd.psi) {
      Integer want = (b.alpha == a.alpha) ? 1 : 0;
      if (dot(f.rays.at(d), b.alpha) != want)
        rep.fail("color " + d + " pairs to " + dot(f.rays.at(d), b.alpha).get_str() + " with " + to_string(b.alpha));
    }
  }
  if (simple_of.size() != inv.colors.size()) rep.fail("some color is not X(-alpha) for a simple root alpha");
  std::vector<IntVector> v;
  for (const auto& [d, a] : simple_of) v.push_back(f.rays.at(d));
  if (rank(v, f.rank) != v.size()) rep.fail("color functionals are dependent in N");
  return rep;
}

AOrbitPoset a_orbit_poset(const ColoredFan& cf) {
  AOrbitPoset p;
  p.colored = cf;
  const std::size_t n = cf.cones.size();
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ci = cf.cones[i];
    std::string label = "[";
    for (std::size_t k = 0; k < ci.cone.rays().size(); ++k) {
      if (k) label += ",";
      label += to_string(ci.cone.rays()[k]);
    }
    p.hasse.labels.push_back(label + "]" + label_of(ci.colors));
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j) continue;
      const auto& cj = cf.cones[j];
      below[i][j] = ci.cone.is_face_of(cj.cone) &&
                    std::includes(cj.colors.begin(), cj.colors.end(), ci.colors.begin(), ci.colors.end());
    }
  }
  p.hasse.covers = covering_pairs(n, below);
  return p;
}

namespace {

using Signature = std::pair<std::vector<IntVector>, std::vector<IntVector>>;

IntVector apply(const std::vector<IntVector>& m, const IntVector& x) {
  IntVector y(m.empty() ? 0 : m[0].size());
  for (std::size_t j = 0; j < x.size(); ++j) y = add(y, scale(x[j], m[j]));
  return y;
}

std::set<Signature> signatures(const ColoredFan& cf, const std::vector<IntVector>* m) {
  std::set<Signature> out;
  for (const auto& c : cf.cones) {
    std::vector<IntVector> rays, colors;
    for (const auto& r : c.cone.rays()) rays.push_back(m ? apply(*m, r) : r);
    for (const auto& d : c.colors) {
      const auto& x = cf.color_functionals.at(d);
      colors.push_back(m ? apply(*m, x) : x);
    }
    std::sort(rays.begin(), rays.end());
    std::sort(colors.begin(), colors.end());
    out.insert({rays, colors});
  }
  return out;
}

std::vector<IntVector> all_color_vectors(const ColoredFan& cf, const std::vector<IntVector>* m) {
  std::vector<IntVector> out;
  for (const auto& [d, x] : cf.color_functionals) out.push_back(m ? apply(*m, x) : x);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

bool colored_fans_isomorphic(const ColoredFan& a, const ColoredFan& b) {
  if (a.rank != b.rank || a.cones.size() != b.cones.size() ||
      a.color_functionals.size() != b.color_functionals.size())
    return false;
  auto shape = [](const ColoredFan& cf) {
    std::vector<std::pair<std::size_t, std::size_t>> s;
    for (const auto& c : cf.cones) s.emplace_back(c.cone.rays().size(), c.colors.size());
    std::sort(s.begin(), s.end());
    return s;
  };
  if (shape(a) != shape(b)) return false;
  const std::size_t k = a.rank;
  if (k == 0) return true;

  auto ray_degrees = [](const ColoredFan& cf) {
    std::map<IntVector, std::size_t> deg;
    for (const auto& c : cf.cones)
      for (const auto& r : c.cone.rays()) ++deg[r];
    return deg;
  };
  auto deg_a = ray_degrees(a), deg_b = ray_degrees(b);
  if (deg_a.size() != deg_b.size()) return false;
  std::vector<IntVector> rays_b;
  for (const auto& [r, d] : deg_b) rays_b.push_back(r);

  std::vector<IntVector> basis;
  for (const auto& [r, d] : deg_a) {
    basis.push_back(r);
    if (rank(basis, k) != basis.size()) basis.pop_back();
    if (basis.size() == k) break;
  }
  if (basis.size() != k) return false;
  // Coefficients of each unit vector in terms of the chosen basis.
  std::vector<RatVector> unit_coeffs;
  for (std::size_t j = 0; j < k; ++j) {
    IntVector e(k);
    e[j] = 1;
    unit_coeffs.push_back(*solve_row_combination(basis, e));
  }
  const auto sig_b = signatures(b, nullptr);
  const auto colors_b = all_color_vectors(b, nullptr);
  std::vector<IntVector> image(k);
  std::vector<bool> used(rays_b.size());

  std::function<bool(std::size_t)> assign = [&](std::size_t i) -> bool {
    if (i == k) {
      std::vector<IntVector> m(k, IntVector(k));
      for (std::size_t j = 0; j < k; ++j) {
        RatVector col(k);
        for (std::size_t t = 0; t < k; ++t)
          for (std::size_t s = 0; s < k; ++s) col[s] += unit_coeffs[j][t] * image[t][s];
        for (std::size_t s = 0; s < k; ++s) {
          if (col[s].get_den() != 1) return false;
          m[j][s] = col[s].get_num();
        }
      }
      Integer det = determinant(IntMatrix::from_rows(m, k));
      if (det != 1 && det != -1) return false;
      return signatures(a, &m) == sig_b && all_color_vectors(a, &m) == colors_b;
    }
    for (std::size_t t = 0; t < rays_b.size(); ++t) {
      if (used[t] || deg_b[rays_b[t]] != deg_a[basis[i]]) continue;
      used[t] = true;
      image[i] = rays_b[t];
      if (assign(i + 1)) return true;
      used[t] = false;
    }
    return false;
  };
  return assign(0);
}

}  // namespace fanaut

#include "fanaut/fan.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "fanaut/errors.hpp"

namespace fanaut {

std::vector<IntVector> Fan::vectors_of(const RaySet& names) const {
  std::vector<IntVector> out;
  out.reserve(names.size());
  for (const auto& n : names) {
    auto it = rays.find(n);
    if (it == rays.end()) throw InvalidData("unknown ray " + n);
    out.push_back(it->second);
  }
  return out;
}

Cone Fan::cone_of(const RaySet& names) const { return Cone::from_generators(rank, vectors_of(names)); }

std::vector<RaySet> Fan::all_cones() const {
  std::set<RaySet> all;
  for (auto c : cones) {
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    const std::size_t k = c.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << k); ++mask) {
      RaySet s;
      for (std::size_t i = 0; i < k; ++i)
        if (mask >> i & 1) s.push_back(c[i]);
      all.insert(std::move(s));
    }
  }
  if (all.empty()) all.insert({});
  std::vector<RaySet> out(all.begin(), all.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const RaySet& a, const RaySet& b) { return a.size() < b.size(); });
  return out;
}

std::vector<RaySet> Fan::maximal_cones() const {
  auto all = all_cones();
  std::vector<RaySet> out;
  for (const auto& c : all) {
    bool maximal = true;
    for (const auto& d : all)
      if (d.size() > c.size() && std::includes(d.begin(), d.end(), c.begin(), c.end())) {
        maximal = false;
        break;
      }
    if (maximal) out.push_back(c);
  }
  return out;
}

std::optional<std::string> Fan::ray_named(const IntVector& v) const {
  for (const auto& [name, r] : rays)
    if (r == v) return name;
  return std::nullopt;
}

std::string label_of(const RaySet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += s[i];
  }
  return out + "}";
}

ValidationReport validate(const Fan& f) {
  ValidationReport rep;
  auto add = [&](std::string kind, std::string msg, std::optional<IntVector> w = std::nullopt) {
    rep.valid = false;
    rep.violations.push_back({std::move(kind), std::move(msg), std::move(w)});
  };
  bool rays_ok = true;
  std::map<IntVector, std::string> by_vector;
  for (const auto& [name, v] : f.rays) {
    if (v.size() != f.rank) {
      add("ray_length", "ray " + name + " has wrong length");
      rays_ok = false;
      continue;
    }
    if (is_zero(v)) {
      add("zero_ray", "ray " + name + " is zero");
      rays_ok = false;
      continue;
    }
    if (content(v) != 1) add("non_primitive_ray", "ray " + name + " is not primitive");
    auto [it, fresh] = by_vector.emplace(v, name);
    if (!fresh) add("duplicate_ray", "rays " + it->second + " and " + name + " coincide");
  }
  std::set<std::string> used;
  for (const auto& c : f.cones)
    for (const auto& n : c) {
      if (!f.rays.count(n)) {
        add("unknown_ray", "cone " + label_of(c) + " uses unknown ray " + n);
        rays_ok = false;
      }
      used.insert(n);
    }
  for (const auto& [name, v] : f.rays)
    if (!used.count(name)) add("unused_ray", "ray " + name + " lies in no cone");
  if (f.support && f.support->ambient_dim() != f.rank) {
    add("support_length", "support inequalities have wrong length");
    rays_ok = false;
  }
  if (!rays_ok) return rep;

  auto maximal = f.maximal_cones();
  std::vector<Cone> cones;
  bool simplicial = true;
  for (const auto& c : maximal) {
    auto vecs = f.vectors_of(c);
    if (rank(vecs, f.rank) != vecs.size()) {
      add("not_simplicial", "cone " + label_of(c) + " is not simplicial");
      simplicial = false;
      continue;
    }
    cones.push_back(Cone::from_generators(f.rank, vecs));
    if (f.support && !f.support->contains(cones.back()))
      add("outside_support", "cone " + label_of(c) + " leaves the support region");
  }
  if (!simplicial) return rep;
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      Cone k = cones[i].intersect(cones[j]);
      if (k.is_face_of(cones[i]) && k.is_face_of(cones[j])) continue;
      add("overlap",
          "relative interiors of faces of " + label_of(maximal[i]) + " and " + label_of(maximal[j]) + " meet",
          k.interior_point());
    }
  return rep;
}

bool is_smooth(const Fan& f) {
  for (const auto& c : f.maximal_cones()) {
    if (c.empty()) continue;
    auto vecs = f.vectors_of(c);
    if (rank(vecs, f.rank) != vecs.size()) return false;
    auto d = smith_normal_form(IntMatrix::from_rows(vecs, f.rank));
    for (std::size_t i = 0; i < vecs.size(); ++i)
      if (d[i] != 1) return false;
  }
  return true;
}

CoverageReport coverage(std::span<const Cone> cones, std::size_t dim,
                        const std::optional<HalfspaceCone>& region) {
  CoverageReport rep;
  std::vector<Cone> distinct(cones.begin(), cones.end());
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  std::vector<Cone> maximal;
  for (const auto& c : distinct) {
    bool inside_other = false;
    for (const auto& d : distinct) {
      if (d == c || d.dim() < c.dim()) continue;
      if (std::all_of(c.rays().begin(), c.rays().end(), [&](const IntVector& r) { return d.contains(r); })) {
        inside_other = true;
        if (!c.is_face_of(d)) {
          rep.is_fan = false;
          rep.detail = "a cone lies inside another without being a face";
        }
        break;
      }
    }
    if (!inside_other) maximal.push_back(c);
  }
  if (region)
    for (const auto& c : maximal)
      if (!region->contains(c)) {
        rep.inside = false;
        rep.detail = "a cone leaves the region";
      }
  for (std::size_t i = 0; i < maximal.size(); ++i)
    for (std::size_t j = i + 1; j < maximal.size(); ++j) {
      Cone k = maximal[i].intersect(maximal[j]);
      if (!k.is_face_of(maximal[i]) || !k.is_face_of(maximal[j])) {
        rep.is_fan = false;
        rep.detail = "two cones overlap";
      }
    }
  if (!rep.is_fan || !rep.inside) return rep;
  if (maximal.empty()) {
    rep.detail = "no cones";
    return rep;
  }
  if (dim == 0) {
    rep.covers = true;
    return rep;
  }
  for (const auto& c : maximal)
    if (c.dim() != dim) {
      rep.detail = "a maximal cone is not full-dimensional";
      return rep;
    }
  std::map<std::vector<IntVector>, int> facet_count;
  for (const auto& c : maximal)
    for (const auto& fc : c.facet_faces()) ++facet_count[fc.rays()];
  for (const auto& [facet, count] : facet_count) {
    if (count >= 2) continue;
    if (region && region->on_boundary_hyperplane(facet)) continue;
    rep.detail = "an interior facet lies in only one cone";
    return rep;
  }
  rep.covers = true;
  return rep;
}

bool is_complete(const Fan& f) {
  std::vector<Cone> cones;
  for (const auto& c : f.maximal_cones()) cones.push_back(f.cone_of(c));
  auto rep = coverage(cones, f.rank, f.support);
  return rep.is_fan && rep.inside && rep.covers;
}

RestrictedFan restrict_to_subspace(const Fan& f, const Sublattice& w) {
  if (w.ambient_rank() != f.rank) throw std::invalid_argument("subspace in wrong ambient lattice");
  RestrictedFan out;
  out.subspace = w.saturation();
  std::set<Cone> distinct;
  std::vector<std::pair<Cone, Cone>> pairs;
  for (const auto& names : f.all_cones()) {
    Cone c = f.cone_of(names);
    Cone k = c.intersect_subspace(out.subspace);
    if (!k.is_face_of(c)) out.faces_ok = false;
    distinct.insert(k);
  }
  out.ambient_cones.assign(distinct.begin(), distinct.end());

  std::set<IntVector> all_rays;
  for (const auto& c : out.ambient_cones) all_rays.insert(c.rays().begin(), c.rays().end());
  std::map<IntVector, std::string> names;
  std::set<std::string> taken;
  for (const auto& [n, v] : f.rays) taken.insert(n);
  int counter = 0;
  for (const auto& r : all_rays) {
    if (auto n = f.ray_named(r)) {
      names[r] = *n;
      continue;
    }
    std::string n;
    do n = "_r" + std::to_string(++counter);
    while (taken.count(n));
    names[r] = n;
  }
  Fan& g = out.fan;
  g.rank = out.subspace.rank();
  for (const auto& [r, n] : names) g.rays[n] = *out.subspace.coordinates(r);
  for (const auto& c : out.ambient_cones) {
    RaySet s;
    for (const auto& r : c.rays()) s.push_back(names[r]);
    std::sort(s.begin(), s.end());
    g.cones.push_back(std::move(s));
  }
  // Keep only maximal cones in the listing.
  g.cones = g.maximal_cones();
  if (f.support) {
    std::vector<IntVector> ineqs;
    for (const auto& q : f.support->inequalities()) ineqs.push_back(evaluate(q, out.subspace.basis()));
    g.support = HalfspaceCone(g.rank, std::move(ineqs));
  }
  return out;
}

bool is_join(const Fan& f, std::span<const Cone> sub, const std::string& ray) {
  auto it = f.rays.find(ray);
  if (it == f.rays.end()) throw InvalidData("unknown ray " + ray);
  std::vector<Cone> fcones;
  for (const auto& c : f.all_cones()) fcones.push_back(f.cone_of(c));
  for (const auto& s : sub)
    if (std::find(fcones.begin(), fcones.end(), s) == fcones.end()) return false;
  for (const auto& c : fcones) {
    if (std::find(sub.begin(), sub.end(), c) != sub.end()) continue;
    bool found = false;
    for (const auto& s : sub) {
      std::vector<IntVector> gens = s.rays();
      gens.push_back(it->second);
      if (Cone::from_generators(f.rank, gens) == c) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool is_join(const Fan& f, const Fan& sub, const std::string& ray) {
  if (sub.rank != f.rank) throw std::invalid_argument("is_join: rank mismatch");
  std::vector<Cone> cones;
  for (const auto& c : sub.all_cones()) cones.push_back(sub.cone_of(c));
  return is_join(f, cones, ray);
}

std::vector<std::pair<std::size_t, std::size_t>> covering_pairs(
    std::size_t n, const std::vector<std::vector<bool>>& below) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!below[i][j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < n && cover; ++k)
        if (below[i][k] && below[k][j]) cover = false;
      if (cover) out.emplace_back(i, j);
    }
  return out;
}

OrbitPoset orbit_closure_poset(const Fan& f) {
  OrbitPoset p;
  p.cones = f.all_cones();
  const std::size_t n = p.cones.size();
  std::vector<std::vector<bool>> below(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i) {
    p.hasse.labels.push_back(label_of(p.cones[i]));
    for (std::size_t j = 0; j < n; ++j)
      below[i][j] = p.cones[i].size() < p.cones[j].size() &&
                    std::includes(p.cones[j].begin(), p.cones[j].end(), p.cones[i].begin(), p.cones[i].end());
  }
  p.hasse.covers = covering_pairs(n, below);
  return p;
}

}  // namespace fanaut

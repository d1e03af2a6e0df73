#include "fanaut/spherical_nonlinear.hpp"

#include <algorithm>
#include <set>

#include "fanaut/errors.hpp"

namespace fanaut {

namespace {

IntVector to_na_basis(const IntVector& v, const Sublattice& lambda) { return evaluate(v, lambda.basis()); }

}  // namespace

HalfspaceCone valuation_cone(std::size_t rank, const NamedVectors& sigma) {
  std::vector<IntVector> ineqs;
  for (const auto& [name, s] : sigma) ineqs.push_back(neg(s));
  return HalfspaceCone(rank, std::move(ineqs));
}

ValidationReport validate(const SphericalData& sd) {
  ValidationReport rep;
  auto add = [&](std::string kind, std::string msg) {
    rep.valid = false;
    rep.violations.push_back({std::move(kind), std::move(msg), std::nullopt});
  };
  if (sd.fan.rank != sd.rank) add("rank_mismatch", "fan rank differs from lattice rank");
  bool sigma_ok = true;
  if (sd.sigma) {
    std::vector<IntVector> vs;
    for (const auto& [name, s] : *sd.sigma) {
      if (s.size() != sd.rank) {
        add("sigma_length", "spherical root " + name + " has wrong length");
        sigma_ok = false;
        continue;
      }
      if (is_zero(s)) {
        add("sigma_zero", "spherical root " + name + " is zero");
        sigma_ok = false;
        continue;
      }
      if (content(s) != 1) add("sigma_divisible", "spherical root " + name + " is divisible");
      vs.push_back(s);
    }
    if (sigma_ok && rank(vs, sd.rank) != vs.size()) add("sigma_dependent", "spherical roots are linearly dependent");
    if (sigma_ok && sd.fan.support && !sd.fan.support->same_set(valuation_cone(sd.rank, *sd.sigma)))
      add("support_mismatch", "support region differs from the valuation cone of the spherical roots");
  }
  for (const auto& [name, c] : sd.colors)
    if (c.size() != sd.rank) add("color_length", "color " + name + " has wrong length");
  if (!rep.valid) return rep;
  auto fr = validate(sd.fan);
  for (auto& v : fr.violations) {
    rep.valid = false;
    rep.violations.push_back(std::move(v));
  }
  if (!rep.valid) return rep;
  if (!is_smooth(sd.fan)) add("not_smooth", "fan is not smooth");
  if (!is_complete(sd.fan)) add("not_complete", "fan does not cover the valuation cone");
  return rep;
}

BoundaryClasses classify_boundary(const SphericalData& sd) {
  Sublattice lin = sd.fan.support ? sd.fan.support->lineality() : Sublattice::full(sd.rank);
  BoundaryClasses out;
  for (const auto& [name, v] : sd.fan.rays) (lin.contains(v) ? out.linear : out.nonlinear).push_back(name);
  return out;
}

RaySet moved_complement(const Fan& f, const RaySet& stable) {
  for (const auto& s : stable)
    if (!f.rays.count(s)) throw InvalidData("unknown ray " + s);
  RaySet out;
  for (const auto& [name, v] : f.rays)
    if (std::find(stable.begin(), stable.end(), name) == stable.end()) out.push_back(name);
  return out;
}

std::map<std::string, std::string> sigma_of_moved(const SphericalData& sd, const RaySet& moved) {
  if (!sd.sigma) throw PreconditionFailed("spherical roots are unknown");
  auto classes = classify_boundary(sd);
  std::map<std::string, std::string> out;
  for (const auto& e : moved) {
    auto it = sd.fan.rays.find(e);
    if (it == sd.fan.rays.end()) throw InvalidData("unknown ray " + e);
    if (std::find(classes.linear.begin(), classes.linear.end(), e) != classes.linear.end())
      throw PreconditionFailed("ray " + e + " lies in the linear part");
    const IntVector& v = it->second;
    std::optional<std::string> found;
    for (const auto& [name, s] : *sd.sigma) {
      Integer p = dot(v, s);
      if (p == 0) continue;
      if (p != -1 || found) throw NotMovable("ray " + e + " pairs with spherical roots in the wrong pattern");
      found = name;
    }
    if (!found) throw NotMovable("ray " + e + " pairs with no spherical root");
    const IntVector& s = sd.sigma->at(*found);
    for (const auto& [name, w] : sd.fan.rays)
      if (name != e && dot(w, s) != 0)
        throw NotMovable("ray " + name + " is not orthogonal to the spherical root of " + e);
    out[e] = *found;
  }
  return out;
}

LambdaDecomposition lambda_decomposition(const SphericalData& sd, const RaySet& moved) {
  auto sig = sigma_of_moved(sd, moved);
  std::vector<IntVector> rhos, roots;
  for (const auto& [e, s] : sig) {
    rhos.push_back(sd.fan.rays.at(e));
    roots.push_back(sd.sigma->at(s));
  }
  LambdaDecomposition d{annihilator(rhos, sd.rank), Sublattice::span(sd.rank, roots)};
  if (!is_direct_sum(d.orthogonal, d.roots))
    throw DecompositionFails("lattice is not the direct sum of rho(E)^perp and the span of sigma_E");
  return d;
}

NonlinearResult nonlinear_restrict(const SphericalData& sd, const RaySet& stable) {
  NonlinearResult out;
  const Fan& f = sd.fan;
  RaySet moved = moved_complement(f, stable);
  out.sigma_of = sigma_of_moved(sd, moved);
  auto decomp = lambda_decomposition(sd, moved);
  out.lambda_A = decomp.orthogonal;
  out.n_A = annihilator(decomp.roots);
  const std::size_t k = out.lambda_A.rank();

  auto rf = restrict_to_subspace(f, out.n_A);
  out.faces_ok = rf.faces_ok;
  for (const auto& [e, s] : out.sigma_of) {
    auto sub = restrict_to_subspace(f, annihilator(std::vector<IntVector>{sd.sigma->at(s)}, sd.rank));
    if (!is_join(f, sub.ambient_cones, e)) out.joins_ok = false;
  }

  SphericalData& r = out.restricted;
  r.rank = k;
  r.sp = sd.sp;
  for (const auto& [name, c] : sd.colors) r.colors[name] = to_na_basis(c, out.lambda_A);
  r.fan.rank = k;
  std::set<IntVector> images;
  for (const auto& [name, v] : rf.fan.rays) {
    IntVector amb(sd.rank);
    // Back to the ambient vector, then to coordinates dual to lambda_A.
    for (std::size_t i = 0; i < v.size(); ++i) amb = add(amb, scale(v[i], rf.subspace.basis()[i]));
    IntVector img = to_na_basis(amb, out.lambda_A);
    if (is_zero(img) || !images.insert(img).second) out.injective = false;
    r.fan.rays[name] = img;
  }
  r.fan.cones = rf.fan.cones;
  DoubleDescription vg = f.support ? f.support->generators()
                                   : DoubleDescription{IntMatrix::identity(sd.rank).row_list(), {}};
  std::vector<IntVector> lin, rays;
  for (const auto& l : vg.lineality) lin.push_back(to_na_basis(l, out.lambda_A));
  for (const auto& x : vg.rays) rays.push_back(to_na_basis(x, out.lambda_A));
  r.fan.support = HalfspaceCone::from_generators(k, lin, rays);

  if (out.injective) {
    out.smooth = is_smooth(r.fan);
    out.complete = validate(r.fan).valid && is_complete(r.fan);
  } else {
    out.smooth = out.complete = false;
  }
  auto before = classify_boundary(sd);
  auto after = classify_boundary(r);
  RaySet expected;
  for (const auto& l : before.linear)
    if (std::find(stable.begin(), stable.end(), l) != stable.end()) expected.push_back(l);
  RaySet stable_sorted = stable;
  std::sort(stable_sorted.begin(), stable_sorted.end());
  RaySet out_rays;
  for (const auto& [name, v] : r.fan.rays) out_rays.push_back(name);
  out.l_set_preserved = after.linear == expected && out_rays == stable_sorted;
  return out;
}

WonderfulLattice wonderful_closure_lattice(const SphericalData& sd) {
  if (!sd.sigma) throw PreconditionFailed("spherical roots are unknown");
  std::vector<IntVector> roots;
  for (const auto& [name, s] : *sd.sigma) roots.push_back(s);
  WonderfulLattice w;
  w.xi = Sublattice::span(sd.rank, roots);
  if (roots.empty()) {
    w.invariant_factors.assign(sd.rank, Integer(0));
  } else {
    w.invariant_factors = smith_normal_form(IntMatrix::from_rows(roots, sd.rank));
  }
  for (const auto& d : w.invariant_factors)
    if (d != 1) w.nontrivial_factors.push_back(d);
  return w;
}

}  // namespace fanaut

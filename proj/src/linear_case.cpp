#include "fanaut/linear_case.hpp"

#include <algorithm>
#include <set>

#include "fanaut/errors.hpp"

namespace fanaut {

namespace {

Sublattice linear_part(const SphericalData& sd) {
  return sd.fan.support ? sd.fan.support->lineality() : Sublattice::full(sd.rank);
}

bool contains_name(const RaySet& s, const std::string& n) { return std::find(s.begin(), s.end(), n) != s.end(); }

IntVector from_coordinates(const IntVector& y, const Sublattice& l) {
  IntVector x(l.ambient_rank());
  for (std::size_t i = 0; i < y.size(); ++i) x = add(x, scale(y[i], l.basis()[i]));
  return x;
}

}  // namespace

FiberFan fiber_fan(const SphericalData& sd) {
  FiberFan out;
  out.lattice = linear_part(sd);
  Fan& g = out.fan;
  g.rank = out.lattice.rank();
  auto classes = classify_boundary(sd);
  for (const auto& n : classes.linear) g.rays[n] = *out.lattice.coordinates(sd.fan.rays.at(n));
  std::set<RaySet> cones;
  for (const auto& c : sd.fan.all_cones()) {
    if (std::all_of(c.begin(), c.end(), [&](const std::string& n) { return contains_name(classes.linear, n); }))
      cones.insert(c);
  }
  g.cones.assign(cones.begin(), cones.end());
  g.cones = g.maximal_cones();
  if (!validate(g).valid || !is_smooth(g) || !is_complete(g))
    throw FiberNotComplete("the subfan in the linear part is not smooth and complete");
  return out;
}

RestrictedRoots restricted_roots(const SphericalData& sd, const RaySet& stable) {
  RestrictedRoots out;
  const Sublattice lin = linear_part(sd);
  RaySet moved = moved_complement(sd.fan, stable);
  auto classes = classify_boundary(sd);
  for (const auto& e : moved)
    if (!contains_name(classes.linear, e)) throw PreconditionFailed("ray " + e + " is not in the linear part");

  for (const auto& e : moved) {
    std::vector<AffineConstraint> ineqs;
    for (const auto& [name, v] : sd.fan.rays)
      if (name != e) ineqs.push_back({v, 0});
    for (const auto& [name, v] : sd.colors) ineqs.push_back({v, 0});
    std::vector<IntVector> points;
    try {
      points = lattice_points(sd.rank, ineqs, {{sd.fan.rays.at(e), -1}});
    } catch (const Unbounded&) {
      throw UnboundedSearch("search region for roots moving " + e + " is unbounded");
    }
    for (auto& g : points) out.gammas.push_back({g, e, evaluate(g, lin.basis())});
  }
  std::sort(out.gammas.begin(), out.gammas.end(),
            [](const RestrictedRoot& a, const RestrictedRoot& b) { return a.gamma < b.gamma; });

  std::map<IntVector, std::string> moved_of;
  for (const auto& g : out.gammas) {
    auto [it, fresh] = moved_of.emplace(g.restriction, g.moved);
    if (!fresh && it->second != g.moved)
      out.opposite.fail("restriction " + to_string(g.restriction) + " moves two rays");
  }
  for (const auto& [a, m] : moved_of) out.restrictions.push_back({a, m});
  for (const auto& r : out.restrictions)
    if (moved_of.count(neg(r.alpha))) out.phi.push_back(r);

  for (const auto& g : out.gammas) {
    if (!moved_of.count(neg(g.restriction))) continue;
    for (const auto& n : classes.nonlinear)
      if (dot(sd.fan.rays.at(n), g.gamma) != 0)
        out.opposite.fail("ray " + n + " pairs nontrivially with " + to_string(g.gamma));
    for (const auto& [name, v] : sd.colors)
      if (dot(v, g.gamma) != 0) out.opposite.fail("color " + name + " pairs nontrivially with " + to_string(g.gamma));
  }
  return out;
}

ContainmentReport phi_containment_check(const SphericalData& sd, const RaySet& stable) {
  ContainmentReport rep;
  auto rr = restricted_roots(sd, stable);
  auto fib = fiber_fan(sd);
  RaySet fiber_stable;
  for (const auto& s : stable)
    if (fib.fan.rays.count(s)) fiber_stable.push_back(s);
  rep.phi_x = rr.phi;
  rep.phi_fiber = phi(demazure_roots(fib.fan), fiber_stable).phi;
  for (const auto& a : rep.phi_x)
    if (std::find(rep.phi_fiber.begin(), rep.phi_fiber.end(), a) == rep.phi_fiber.end()) rep.ok = false;
  rep.strict = rep.ok && rep.phi_x.size() < rep.phi_fiber.size();
  return rep;
}

LinearLevi linear_levi_invariants(const SphericalData& sd, const RaySet& stable, const Positivity& positivity) {
  LinearLevi ll;
  auto rr = restricted_roots(sd, stable);
  ll.fiber = fiber_fan(sd);
  RootData& rd = ll.fiber_roots;
  rd.all_roots = demazure_roots(ll.fiber.fan);
  for (const auto& s : stable)
    if (ll.fiber.fan.rays.count(s)) rd.stable.push_back(s);
  std::sort(rd.stable.begin(), rd.stable.end());
  for (const auto& a : rr.phi) {
    if (rd.moved_of(a.alpha) != a.moved) throw PreconditionFailed("restricted root " + to_string(a.alpha) + " is not a fiber root");
    rd.phi.push_back(a);
  }
  positive_system(rd, positivity);
  ll.fiber_levi = levi_invariants(ll.fiber.fan, rd);

  // Preimage of the fiber weight lattice under restriction to the linear part.
  std::vector<IntVector> ann;
  const Sublattice fiber_perp = annihilator(ll.fiber_levi.lambda_A);
  for (const auto& w : fiber_perp.basis()) ann.push_back(from_coordinates(w, ll.fiber.lattice));
  ll.lambda_A = annihilator(ann, sd.rank);

  for (const auto& [name, v] : sd.colors) ll.colors[name] = evaluate(v, ll.lambda_A.basis());
  RaySet moved = moved_complement(sd.fan, stable);
  for (const auto& e : moved)
    if (ll.fiber_levi.colors.count(e)) ll.colors[e] = evaluate(sd.fan.rays.at(e), ll.lambda_A.basis());
  ll.sp = sd.sp;
  ll.pa_simple_roots = ll.fiber_levi.pa_simple_roots;
  return ll;
}

ColoredFan linear_colored_fan(const SphericalData& sd, const LinearLevi& ll) {
  ColoredFan cf;
  cf.rank = ll.lambda_A.rank();
  cf.color_functionals = ll.colors;
  auto classes = classify_boundary(sd);
  const auto& lam = ll.lambda_A.basis();
  std::vector<std::pair<RaySet, ColoredCone>> made;
  for (const auto& names : sd.fan.all_cones()) {
    RaySet lin_part;
    std::vector<IntVector> gens;
    for (const auto& n : names) {
      if (contains_name(classes.linear, n))
        lin_part.push_back(n);
      else
        gens.push_back(evaluate(sd.fan.rays.at(n), lam));
    }
    Cone fiber_cone = ll.fiber.fan.cone_of(lin_part).intersect_subspace(ll.fiber_levi.n_A);
    for (const auto& y : fiber_cone.rays()) gens.push_back(evaluate(from_coordinates(y, ll.fiber.lattice), lam));
    made.push_back({names, {Cone::from_generators(cf.rank, gens), color_set(ll.fiber_roots, ll.fiber_levi, lin_part)}});
  }
  std::set<ColoredCone> distinct;
  for (const auto& [names, cc] : made) distinct.insert(cc);
  cf.cones.assign(distinct.begin(), distinct.end());
  for (const auto& [names, cc] : made)
    cf.source[names] = static_cast<std::size_t>(std::lower_bound(cf.cones.begin(), cf.cones.end(), cc) - cf.cones.begin());
  return cf;
}

CoverageReport sigma_preservation_check(const SphericalData& sd, const LinearLevi& ll, const ColoredFan& cf) {
  const auto& lam = ll.lambda_A.basis();
  DoubleDescription v = sd.fan.support ? sd.fan.support->generators()
                                       : DoubleDescription{IntMatrix::identity(sd.rank).row_list(), {}};
  std::vector<IntVector> lin, rays;
  for (const auto& l : v.lineality) lin.push_back(evaluate(l, lam));
  for (const auto& r : v.rays) rays.push_back(evaluate(r, lam));
  auto region = HalfspaceCone::from_generators(cf.rank, lin, rays);
  std::vector<Cone> cones;
  for (const auto& c : cf.cones) cones.push_back(c.cone);
  return coverage(cones, cf.rank, region);
}

}  // namespace fanaut

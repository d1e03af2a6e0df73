#include "fanaut/corpus.hpp"

#include <algorithm>
#include <stdexcept>

namespace fanaut {

Fan projective_space(std::size_t n, const std::string& prefix) {
  Fan f;
  f.rank = n;
  std::vector<std::string> names;
  for (std::size_t i = 0; i <= n; ++i) names.push_back(prefix + std::to_string(i + 1));
  for (std::size_t i = 0; i < n; ++i) {
    IntVector e(n);
    e[i] = 1;
    f.rays[names[i]] = e;
  }
  f.rays[names[n]] = IntVector(n, Integer(-1));
  for (std::size_t skip = 0; skip <= n; ++skip) {
    RaySet c;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip) c.push_back(names[i]);
    std::sort(c.begin(), c.end());
    f.cones.push_back(c);
  }
  std::sort(f.cones.begin(), f.cones.end());
  return f;
}

Fan hirzebruch(long a) {
  Fan f;
  f.rank = 2;
  f.rays["u1"] = make_vector({1, 0});
  f.rays["u2"] = make_vector({0, 1});
  f.rays["u3"] = make_vector({-1, a});
  f.rays["u4"] = make_vector({0, -1});
  f.cones = {{"u1", "u2"}, {"u2", "u3"}, {"u3", "u4"}, {"u1", "u4"}};
  return f;
}

Fan product(const Fan& a, const Fan& b) {
  Fan f;
  f.rank = a.rank + b.rank;
  for (const auto& [n, v] : a.rays) {
    IntVector w = v;
    w.resize(f.rank);
    f.rays[n] = w;
  }
  for (const auto& [n, v] : b.rays) {
    if (f.rays.count(n)) throw std::invalid_argument("product: ray names collide");
    IntVector w(a.rank);
    w.insert(w.end(), v.begin(), v.end());
    f.rays[n] = w;
  }
  for (const auto& ca : a.maximal_cones())
    for (const auto& cb : b.maximal_cones()) {
      RaySet c = ca;
      c.insert(c.end(), cb.begin(), cb.end());
      std::sort(c.begin(), c.end());
      f.cones.push_back(c);
    }
  return f;
}

Fan star_subdivision(const Fan& f, const RaySet& face, const std::string& new_ray) {
  if (f.rays.count(new_ray)) throw std::invalid_argument("star_subdivision: ray name taken");
  RaySet tau = face;
  std::sort(tau.begin(), tau.end());
  Fan g = f;
  IntVector w(f.rank);
  for (const auto& v : f.vectors_of(tau)) w = add(w, v);
  g.rays[new_ray] = w;
  g.cones.clear();
  for (const auto& c : f.maximal_cones()) {
    if (!std::includes(c.begin(), c.end(), tau.begin(), tau.end())) {
      g.cones.push_back(c);
      continue;
    }
    for (const auto& drop : tau) {
      RaySet d;
      for (const auto& n : c)
        if (n != drop) d.push_back(n);
      d.push_back(new_ray);
      std::sort(d.begin(), d.end());
      g.cones.push_back(d);
    }
  }
  return g;
}

Fan change_basis(const Fan& f, const IntMatrix& u) {
  auto apply = [&](const IntVector& v) {
    IntMatrix row = IntMatrix::from_rows(std::vector<IntVector>{v}, f.rank);
    return (row * u).row(0);
  };
  Fan g = f;
  for (auto& [n, v] : g.rays) v = apply(v);
  if (f.support) {
    // Inequalities transform by the inverse transpose; u^-1 is integral.
    IntMatrix inv(f.rank, f.rank);
    for (std::size_t j = 0; j < f.rank; ++j) {
      IntVector e(f.rank);
      e[j] = 1;
      auto c = solve_row_combination(u.row_list(), e);
      for (std::size_t i = 0; i < f.rank; ++i) inv(j, i) = Integer((*c)[i].get_num());
    }
    std::vector<IntVector> ineqs;
    IntMatrix invt = inv.transpose();
    for (const auto& q : f.support->inequalities())
      ineqs.push_back((IntMatrix::from_rows(std::vector<IntVector>{q}, f.rank) * invt).row(0));
    g.support = HalfspaceCone(f.rank, std::move(ineqs));
  }
  return g;
}

SphericalData toric_as_spherical(const Fan& f) {
  SphericalData sd;
  sd.rank = f.rank;
  sd.sigma = NamedVectors{};
  sd.fan = f;
  sd.fan.support = valuation_cone(f.rank, {});
  return sd;
}

SphericalData synthetic_nonlinear() {
  SphericalData sd;
  sd.rank = 2;
  sd.sigma = NamedVectors{{"s1", make_vector({1, 0})}};
  sd.fan.rank = 2;
  sd.fan.rays = {{"E1", make_vector({-1, 0})}, {"D2", make_vector({0, 1})}, {"D3", make_vector({0, -1})}};
  sd.fan.cones = {{"D2", "E1"}, {"D3", "E1"}};
  sd.fan.support = valuation_cone(2, *sd.sigma);
  return sd;
}

SphericalData synthetic_linear() {
  SphericalData sd = synthetic_nonlinear();
  sd.colors["Z1"] = make_vector({1, 0});
  return sd;
}

SphericalData synthetic_strict_fiber() {
  SphericalData sd;
  sd.rank = 3;
  sd.sigma = NamedVectors{{"s1", make_vector({1, 0, 0})}};
  sd.colors["Z1"] = make_vector({1, 1, 0});
  sd.fan.rank = 3;
  sd.fan.rays = {{"E0", make_vector({-1, 0, 0})}, {"A1", make_vector({0, 1, 0})}, {"A2", make_vector({0, -1, 0})},
                 {"B1", make_vector({0, 0, 1})},  {"B2", make_vector({0, 0, -1})}};
  for (const char* a : {"A1", "A2"})
    for (const char* b : {"B1", "B2"}) sd.fan.cones.push_back({a, b, "E0"});
  sd.fan.support = valuation_cone(3, *sd.sigma);
  return sd;
}

Fan overlapping_fan() {
  Fan f;
  f.rank = 2;
  f.rays = {{"X1", make_vector({1, 0})}, {"X2", make_vector({0, 1})}, {"Y", make_vector({1, 1})}};
  f.cones = {{"X1", "X2"}, {"X1", "Y"}};
  return f;
}

std::vector<CorpusEntry> corpus_entries() {
  std::vector<CorpusEntry> out;
  for (std::size_t n = 1; n <= 4; ++n)
    out.push_back({"p" + std::to_string(n), fan_to_json(projective_space(n)),
                   {{"valid", true}, {"smooth", true}, {"complete", true}, {"root_count", n * (n + 1)}}});
  out.push_back({"p1xp1", fan_to_json(product(projective_space(1, "X"), projective_space(1, "Y"))),
                 {{"valid", true}, {"smooth", true}, {"complete", true}, {"root_count", 4}}});
  for (long a = 0; a <= 3; ++a)
    out.push_back({"f" + std::to_string(a), fan_to_json(hirzebruch(a)),
                   {{"valid", true}, {"smooth", true}, {"complete", true}, {"root_count", a == 0 ? 4 : a + 3}}});
  out.push_back({"overlap_invalid", fan_to_json(overlapping_fan()), {{"valid", false}, {"witness", {2, 1}}}});
  out.push_back({"spherical_nonlinear", spherical_to_json(synthetic_nonlinear()),
                 {{"stable", {"D2", "D3"}},
                  {"lambda_A", {{0, 1}}},
                  {"sigma_of", {{"E1", "s1"}}},
                  {"restricted_rays", {{"D2", {1}}, {"D3", {-1}}}}}});
  out.push_back({"spherical_linear", spherical_to_json(synthetic_linear()),
                 {{"stable", {"E1"}},
                  {"restricted_roots", {{-1}, {1}}},
                  {"lambda_A", {{1, 0}}},
                  {"colors_A", {"D2", "Z1"}},
                  {"colored_fan_rays", {Json::array(), {{-1}}}}}});
  out.push_back({"spherical_strict_fiber", spherical_to_json(synthetic_strict_fiber()),
                 {{"stable", {"B1", "B2", "E0"}},
                  {"phi_x", Json::array()},
                  {"phi_fiber", {{-1, 0}, {1, 0}}},
                  {"strict", true}}});
  return out;
}

}  // namespace fanaut

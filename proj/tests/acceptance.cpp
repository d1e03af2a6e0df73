// Acceptance checks: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include <unistd.h>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <random>
#include <set>

#include "fanaut/corpus.hpp"
#include "fanaut/errors.hpp"
#include "fanaut/linear_case.hpp"
#include "support/fan_gen.hpp"
#include "support/process.hpp"
#include "support/properties.hpp"
#include "support/spherical_gen.hpp"

using namespace fanaut;
namespace fs = std::filesystem;

namespace {

int failures = 0;

void report(const std::string& id, const std::string& what, bool ok, const std::string& detail = "") {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << "  [" << id << "] " << what;
  if (!detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << std::endl;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string ms(double s) { return std::to_string(static_cast<long>(s * 1000)) + " ms"; }

std::set<IntVector> alphas(const std::vector<DemazureRoot>& rs) {
  std::set<IntVector> out;
  for (const auto& r : rs) out.insert(r.alpha);
  return out;
}

ColoredCone colored_ray(const IntVector& v, RaySet colors) {
  std::vector<IntVector> g{v};
  return {Cone::from_generators(v.size(), g), std::move(colors)};
}

std::vector<Fan> toric_corpus() {
  std::vector<Fan> fans;
  for (std::size_t n = 1; n <= 4; ++n) fans.push_back(projective_space(n));
  fans.push_back(product(projective_space(1, "X"), projective_space(1, "Y")));
  for (long a = 0; a <= 3; ++a) fans.push_back(hirzebruch(a));
  return fans;
}

void criterion1(const fs::path& dir) {
  auto t0 = std::chrono::steady_clock::now();
  Fan p2 = projective_space(2);
  RootData rd = phi(demazure_roots(p2), {"X3"});
  positive_system(rd, Positivity::parse("vector:0,1"));
  auto inv = levi_invariants(p2, rd);
  auto cf = colored_fan(p2, rd, inv);

  const IntVector a1 = make_vector({-1, 1}), a2 = make_vector({0, -1});
  bool phi_ok = alphas(rd.phi) == std::set<IntVector>{a1, neg(a1)};
  std::vector<IntVector> a2v{a2};
  bool lambda_ok = inv.lambda_A == Sublattice::span(2, a2v);
  bool colors_ok = inv.colors.size() == 1 && inv.colors.count("X2");
  bool pa_ok = inv.pa_simple_roots.empty();
  const IntVector rho3 = to_na(p2.rays.at("X3"), inv.lambda_A);
  std::vector<ColoredCone> maximal;
  for (const auto& c : cf.cones)
    if (c.cone.dim() == cf.rank) maximal.push_back(c);
  std::vector<ColoredCone> expected{colored_ray(rho3, {}), colored_ray(neg(rho3), {"X2"})};
  std::sort(expected.begin(), expected.end());
  bool cones_ok = maximal == expected && cf.cones.size() == 3;

  auto r = support::run_cli("levi " + (dir / "p2.json").string() + " --stable X3 --positivity vector:0,1");
  bool golden = r.code == 0 && r.out == support::slurp(fs::path(GOLDEN_DIR) / "levi_p2_X3.json");
  double t = seconds_since(t0);
  report("1", "P^2 with stable {X3}: Phi = {+-a1}, Lambda_A = Z a2, colors {X2}, no P_A simple roots, maximal colored cones (Q+ rho(X3), {}) and (-Q+ rho(X3), {X2}), CLI output equals golden file, < 1 s",
         phi_ok && lambda_ok && colors_ok && pa_ok && cones_ok && golden && t < 1.0,
         "phi=" + std::to_string(phi_ok) + " lambda=" + std::to_string(lambda_ok) + " colors=" +
             std::to_string(colors_ok) + " pa=" + std::to_string(pa_ok) + " cones=" + std::to_string(cones_ok) +
             " golden=" + std::to_string(golden) + ", " + ms(t));
}

void criterion2() {
  auto t0 = std::chrono::steady_clock::now();
  struct Case {
    std::string name;
    Fan fan;
    std::size_t expected;
  };
  std::vector<Case> cases;
  for (std::size_t n = 1; n <= 4; ++n) cases.push_back({"P" + std::to_string(n), projective_space(n), n * (n + 1)});
  // a + 3 for a >= 1; F_0 is P^1 x P^1 with 4 roots.
  for (long a = 0; a <= 3; ++a)
    cases.push_back({"F" + std::to_string(a), hirzebruch(a), static_cast<std::size_t>(a == 0 ? 4 : a + 3)});
  cases.push_back({"P1xP1", product(projective_space(1, "X"), projective_space(1, "Y")), 4});
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    auto roots = demazure_roots(c.fan);
    std::vector<DemazureRoot> oracle;
    for (long bound = 1;; bound *= 2) {
      try {
        oracle = roots_oracle(c.fan, bound);
        break;
      } catch (const BoundTooSmall&) {
      }
    }
    bool good = roots.size() == c.expected && roots == oracle;
    if (!good) detail += c.name + ":" + std::to_string(roots.size()) + " ";
    ok = ok && good;
  }
  double t = seconds_since(t0);
  report("2", "Demazure root counts P^n = n(n+1) (n <= 4), F_a, P^1 x P^1 = 4, equal as sets to the box-scan oracle, < 5 s",
         ok && t < 5.0, (detail.empty() ? "" : detail + ", ") + std::to_string(cases.size()) + " fans, " + ms(t));
}

void criterion3() {
  auto t0 = std::chrono::steady_clock::now();
  std::mt19937 rng(20240601);
  std::vector<Fan> fans = toric_corpus();
  const std::size_t corpus_size = fans.size();
  const std::size_t random_count = 500;
  for (std::size_t i = 0; i < random_count; ++i) fans.push_back(support::random_smooth_complete_fan(rng, 4, 3));

  std::map<std::string, std::size_t> violations;
  std::map<std::string, std::string> first;
  std::size_t pairs = 0, na_dependent = 0;
  std::string na_example;
  for (const auto& f : fans) {
    auto roots = demazure_roots(f);
    for (const auto& s : support::stable_subsets(f, rng, 6, 12)) {
      ++pairs;
      for (const auto& msg : support::levi_property_failures(f, roots, s)) {
        std::string key = msg.substr(msg.find(": ") + 2);
        key = key.substr(0, key.find(" ("));
        if (!violations[key]++) first[key] = msg + " on " + fan_to_json(f).dump();
      }
      if (!support::colors_independent_in_na(f, roots, s)) {
        if (!na_dependent++) na_example = "stable " + label_of(s) + " on " + fan_to_json(f).dump();
      }
    }
  }
  double t = seconds_since(t0);
  const std::string scope = std::to_string(corpus_size) + " corpus + " + std::to_string(random_count) +
                            " random fans, " + std::to_string(pairs) + " stable sets, " + ms(t);
  std::size_t total = 0;
  for (const auto& [k, n] : violations) total += n;
  report("3", "property suite: triple closure, independence nondegeneracy, abelian orthogonality, d(c) empty iff face, boundary, horospherical, color/simple-root pairing, positivity invariance",
         total == 0, total == 0 ? scope : std::to_string(total) + " violations, first: " + first.begin()->second);
  report("3-NA", "A-color functionals linearly independent in N_A (literal form)", na_dependent == 0,
         na_dependent == 0 ? scope
                           : std::to_string(na_dependent) + " of " + std::to_string(pairs) +
                                 " stable sets dependent; first: " + na_example);
}

void criterion4(const fs::path& dir) {
  bool direct = true, joins = true, smooth = true, l_set = true, faces = true;
  std::size_t checked = 0;
  auto absorb = [&](const SphericalData& sd, const RaySet& stable) {
    auto r = nonlinear_restrict(sd, stable);
    auto d = lambda_decomposition(sd, moved_complement(sd.fan, stable));
    direct = direct && is_direct_sum(d.orthogonal, d.roots) && r.lambda_A == d.orthogonal;
    joins = joins && r.joins_ok;
    faces = faces && r.faces_ok;
    smooth = smooth && r.smooth && r.complete && r.injective;
    l_set = l_set && r.l_set_preserved;
    ++checked;
  };
  absorb(synthetic_nonlinear(), {"D2", "D3"});
  absorb(synthetic_linear(), {"D2", "D3"});
  absorb(synthetic_strict_fiber(), {"A1", "A2", "B1", "B2"});
  std::mt19937 rng(4242);
  for (int i = 0; i < 100; ++i) {
    auto sample = support::random_toroidal(rng, 2, 2);
    std::bernoulli_distribution coin(0.5);
    RaySet stable;
    for (const auto& [name, v] : sample.data.fan.rays) {
      bool nl = std::find(sample.nonlinear.begin(), sample.nonlinear.end(), name) != sample.nonlinear.end();
      if (!nl || coin(rng)) stable.push_back(name);
    }
    absorb(sample.data, stable);
  }
  const std::string scope = std::to_string(checked) + " instances";
  report("4a", "nonlinear: lattice is the direct sum of rho(E)^perp and the span of sigma_E", direct, scope);
  report("4b", "nonlinear: join decomposition holds for every moved divisor", joins, scope);
  report("4c", "nonlinear: restricted fan smooth and complete in its support", smooth && faces, scope);
  report("4d", "nonlinear: linear-part rays are exactly the stable linear rays after restriction", l_set, scope);
  auto r = support::run_cli("nonlinear " + (dir / "spherical_nonlinear.json").string() + " --stable D2,D3");
  report("4e", "synthetic nonlinear instance reproduces its golden file",
         r.code == 0 && r.out == support::slurp(fs::path(GOLDEN_DIR) / "nonlinear_synthetic.json"));
}

void criterion5(const fs::path& dir) {
  std::mt19937 rng(5);
  bool ok = true;
  std::size_t pairs = 0;
  std::string detail;
  for (const auto& f : toric_corpus()) {
    auto roots = demazure_roots(f);
    auto sd = toric_as_spherical(f);
    for (const auto& s : support::stable_subsets(f, rng, 6, 0)) {
      ++pairs;
      RootData rd = phi(roots, s);
      positive_system(rd, Positivity::lex());
      auto toric = colored_fan(f, rd, levi_invariants(f, rd));
      auto ll = linear_levi_invariants(sd, s, Positivity::lex());
      auto lin = linear_colored_fan(sd, ll);
      bool same = lin.rank == toric.rank && lin.cones == toric.cones && lin.color_functionals == toric.color_functionals;
      if (!same && detail.empty()) detail = "first mismatch: stable " + label_of(s) + " on " + fan_to_json(f).dump();
      ok = ok && same;
    }
  }
  report("5a", "linear path on toric corpus with empty Sigma equals the toric colored fan", ok,
         detail.empty() ? std::to_string(pairs) + " (fan, stable set) pairs" : detail);
  auto r = support::run_cli("linear " + (dir / "spherical_linear.json").string() + " --stable E1");
  report("5b", "synthetic rank-2 linear instance reproduces its golden file",
         r.code == 0 && r.out == support::slurp(fs::path(GOLDEN_DIR) / "linear_synthetic.json"));
}

void criterion6(const fs::path& dir) {
  const std::string p2 = (dir / "p2.json").string();
  auto a = support::run_cli("orbits " + p2 + " --stable X3 --positivity vector:0,1");
  auto b = support::run_cli("orbits " + p2 + " --stable X1,X2,X3");
  bool counts = a.code == 0 && b.code == 0 && a.json()["orbit_count"] == 3 && b.json()["orbit_count"] == 7;
  bool golden = a.out == support::slurp(fs::path(GOLDEN_DIR) / "orbits_p2_X3.json") &&
                b.out == support::slurp(fs::path(GOLDEN_DIR) / "orbits_p2_all.json");
  Fan f = projective_space(2);
  bool lib = orbit_closure_poset(f).cones.size() == 7;
  report("6", "A-orbits of P^2: 3 with stable {X3}, 7 with all stable; Hasse diagrams equal golden files",
         counts && golden && lib);
}

void criterion7() {
  Fan f = projective_space(2);
  std::size_t d = f.rank + demazure_roots(f).size();
  report("7", "P^2: rank + number of Demazure roots = 8 = dim PGL(3)", d == 8, std::to_string(d));
}

}  // namespace

int main() {
  fs::path dir = fs::temp_directory_path() / ("fan_aut_acceptance_" + std::to_string(getpid()));
  fs::create_directories(dir);
  if (support::run_cli("corpus " + dir.string()).code != 0) {
    std::cout << "FAIL  could not write the corpus" << std::endl;
    return 1;
  }
  try {
    criterion1(dir);
    criterion2();
    criterion3();
    criterion4(dir);
    criterion5(dir);
    criterion6(dir);
    criterion7();
  } catch (const std::exception& e) {
    std::cout << "FAIL  unexpected exception: " << e.what() << std::endl;
    ++failures;
  }
  fs::remove_all(dir);
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criterion line(s) failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}

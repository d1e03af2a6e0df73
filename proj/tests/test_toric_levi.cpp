#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fanaut/corpus.hpp"
#include "fanaut/toric_levi.hpp"
#include "support/fan_gen.hpp"
#include "support/properties.hpp"

using namespace fanaut;

namespace {

// Borel of SL(2) acting on the first two coordinates with highest weight
// direction chosen so that alpha_1 = (-1, 1) is positive.
const Positivity kBorel = Positivity::parse("vector:0,1");

support::LeviBundle p2_bundle(const RaySet& stable, const Positivity& pos = kBorel) {
  Fan f = projective_space(2);
  return support::levi_bundle(f, demazure_roots(f), stable, pos);
}

ColoredCone cc(std::initializer_list<long> ray, RaySet colors, std::size_t rank = 1) {
  std::vector<IntVector> g;
  if (ray.size()) g.push_back(make_vector(ray));
  return {Cone::from_generators(rank, g), std::move(colors)};
}

}  // namespace

TEST(LeviInvariants, ProjectivePlaneStableX3) {
  auto b = p2_bundle({"X3"});
  ASSERT_EQ(b.inv.lambda_A.rank(), 1u);
  EXPECT_EQ(b.inv.lambda_A.basis()[0], make_vector({0, 1}));  // the line through alpha_2 = (0,-1)
  ASSERT_EQ(b.inv.colors.size(), 1u);
  EXPECT_EQ(b.inv.colors.at("X2"), make_vector({1}));
  EXPECT_EQ(b.inv.boundary, (RaySet{"X3"}));
  EXPECT_TRUE(b.inv.pa_simple_roots.empty());
  EXPECT_EQ(to_na(make_vector({-1, -1}), b.inv.lambda_A), make_vector({-1}));
}

TEST(LeviInvariants, AllStableGivesTorus) {
  auto b = p2_bundle({"X1", "X2", "X3"});
  EXPECT_EQ(b.inv.lambda_A, Sublattice::full(2));
  EXPECT_TRUE(b.inv.colors.empty());
  EXPECT_EQ(b.inv.boundary, (RaySet{"X1", "X2", "X3"}));
}

TEST(LeviInvariants, ProjectiveLineHomogeneous) {
  Fan f = projective_space(1);
  auto b = support::levi_bundle(f, demazure_roots(f), {}, Positivity::lex());
  EXPECT_EQ(b.rd.phi.size(), 2u);
  ASSERT_EQ(b.rd.psi.size(), 1u);
  EXPECT_EQ(b.rd.psi[0].alpha, make_vector({1}));
  EXPECT_EQ(b.inv.lambda_A.rank(), 0u);
  ASSERT_EQ(b.inv.colors.size(), 1u);
  EXPECT_TRUE(b.inv.colors.count("X1"));  // X(-1) is the ray (1)
  EXPECT_TRUE(b.inv.boundary.empty());
  ASSERT_EQ(b.cf.cones.size(), 1u);
  EXPECT_EQ(b.cf.cones[0].cone, Cone::zero(0));
  EXPECT_TRUE(b.cf.cones[0].colors.empty());
}

TEST(ColoredFan, ProjectivePlaneStableX3) {
  auto b = p2_bundle({"X3"});
  EXPECT_EQ(b.cf.rank, 1u);
  std::vector<ColoredCone> expected{cc({}, {}), cc({-1}, {}), cc({1}, {"X2"})};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(b.cf.cones, expected);
  // Every source cone of the fan maps somewhere; cone(X1, X2) carries the color.
  EXPECT_EQ(b.cf.source.size(), 7u);
  EXPECT_EQ(b.cf.cones[b.cf.source.at({"X1", "X2"})], cc({1}, {"X2"}));
  EXPECT_EQ(b.cf.cones[b.cf.source.at({"X1", "X3"})], cc({-1}, {}));
}

TEST(ColoredFan, DefaultPositivityIsIsomorphic) {
  auto a = p2_bundle({"X3"});
  auto lex = p2_bundle({"X3"}, Positivity::lex());
  EXPECT_EQ(lex.inv.colors.size(), 1u);
  EXPECT_TRUE(colored_fans_isomorphic(a.cf, lex.cf));
  EXPECT_FALSE(colored_fans_isomorphic(a.cf, p2_bundle({"X1", "X2", "X3"}).cf));
}

TEST(ColoredFan, AllStableIsOriginalFan) {
  Fan f = projective_space(2);
  auto b = p2_bundle({"X1", "X2", "X3"});
  std::set<Cone> original;
  for (const auto& c : f.all_cones()) original.insert(f.cone_of(c));
  std::set<Cone> got;
  for (const auto& c : b.cf.cones) {
    EXPECT_TRUE(c.colors.empty());
    got.insert(c.cone);
  }
  EXPECT_EQ(got, original);
}

TEST(ColoredFan, ColorSets) {
  auto b = p2_bundle({"X3"});
  EXPECT_EQ(color_set(b.rd, b.inv, {"X1", "X2"}), (RaySet{"X2"}));
  EXPECT_TRUE(color_set(b.rd, b.inv, {"X1", "X3"}).empty());
  EXPECT_TRUE(color_set(b.rd, b.inv, {}).empty());
  EXPECT_TRUE(color_set(b.rd, b.inv, {"X2"}).empty());
}

TEST(Horospherical, PositiveAndNegative) {
  auto b = p2_bundle({"X3"});
  EXPECT_TRUE(check_horospherical(b.cf));
  EXPECT_TRUE(check_horospherical(p2_bundle({"X1", "X2", "X3"}).cf));
  ColoredFan broken = b.cf;
  broken.cones.erase(std::remove(broken.cones.begin(), broken.cones.end(), cc({-1}, {})), broken.cones.end());
  EXPECT_FALSE(check_horospherical(broken));
}

TEST(Checks, ProjectivePlane) {
  Fan f = projective_space(2);
  for (const RaySet& s : std::vector<RaySet>{{}, {"X3"}, {"X1", "X2", "X3"}, {"X1"}}) {
    auto b = p2_bundle(s);
    EXPECT_TRUE(check_empty_color_face(f, b.rd, b.inv).ok);
    EXPECT_TRUE(check_abelian_orthogonality(f, b.rd, b.inv).ok);
    EXPECT_TRUE(check_boundary(f, b.rd, b.inv).ok);
    EXPECT_TRUE(check_color_pairing(f, b.rd, b.inv).ok);
  }
  EXPECT_TRUE(colors_independent(p2_bundle({"X3"}).inv));
}

TEST(Checks, ColorFunctionalsInNA) {
  // Homogeneous P^2: one color, N_A = 0, so the functional is zero.
  auto homogeneous = p2_bundle({});
  ASSERT_EQ(homogeneous.inv.colors.size(), 1u);
  EXPECT_EQ(homogeneous.inv.lambda_A.rank(), 0u);
  EXPECT_FALSE(colors_independent(homogeneous.inv));

  // Blow-up of P^3 along the line X1 = X3 = 0: the Levi is GL2 x GL2 with a
  // rank one action and two colors pairing to +1 and -1.
  Fan bl = star_subdivision(projective_space(3), {"X1", "X3"}, "B");
  auto b = support::levi_bundle(bl, demazure_roots(bl), {}, Positivity::lex());
  EXPECT_EQ(demazure_roots(bl).size(), 8u);
  EXPECT_EQ(b.rd.phi.size(), 4u);
  ASSERT_EQ(b.inv.lambda_A.rank(), 1u);
  ASSERT_EQ(b.inv.colors.size(), 2u);
  std::set<IntVector> values;
  for (const auto& [d, v] : b.inv.colors) values.insert(v);
  EXPECT_EQ(values, (std::set<IntVector>{make_vector({-1}), make_vector({1})}));
  EXPECT_FALSE(colors_independent(b.inv));
  EXPECT_TRUE(check_color_pairing(bl, b.rd, b.inv).ok);
  EXPECT_TRUE(check_horospherical(b.cf));
}

TEST(AOrbits, ProjectivePlaneStableX3) {
  auto p = a_orbit_poset(p2_bundle({"X3"}).cf);
  ASSERT_EQ(p.colored.cones.size(), 3u);
  std::size_t open = 0;
  while (!(p.colored.cones[open].cone == Cone::zero(1))) ++open;
  ASSERT_EQ(p.hasse.covers.size(), 2u);
  for (auto [i, j] : p.hasse.covers) {
    EXPECT_EQ(i, open);
    EXPECT_NE(j, open);
  }
}

TEST(AOrbits, AllStableMatchesTorusOrbits) {
  Fan f = projective_space(2);
  auto a = a_orbit_poset(p2_bundle({"X1", "X2", "X3"}).cf);
  auto g = orbit_closure_poset(f);
  EXPECT_EQ(a.colored.cones.size(), g.cones.size());
  EXPECT_EQ(a.hasse.covers.size(), g.hasse.covers.size());
}

TEST(AOrbits, ProjectiveLineSingleOrbit) {
  Fan f = projective_space(1);
  auto b = support::levi_bundle(f, demazure_roots(f), {}, Positivity::lex());
  auto p = a_orbit_poset(b.cf);
  EXPECT_EQ(p.colored.cones.size(), 1u);
  EXPECT_TRUE(p.hasse.covers.empty());
}

TEST(Properties, CorpusFansAllStableSets) {
  std::mt19937 rng(1);
  std::vector<Fan> fans{projective_space(1), projective_space(2), projective_space(3),
                        product(projective_space(1, "X"), projective_space(1, "Y"))};
  for (long a = 0; a <= 3; ++a) fans.push_back(hirzebruch(a));
  for (const auto& f : fans) {
    auto roots = demazure_roots(f);
    for (const auto& s : support::stable_subsets(f, rng)) {
      auto fails = support::levi_property_failures(f, roots, s);
      EXPECT_TRUE(fails.empty()) << fails.front() << " on " << f.rays.size() << " rays";
    }
  }
}

TEST(Properties, RandomFans) {
  std::mt19937 rng(99);
  for (int t = 0; t < 40; ++t) {
    Fan f = support::random_smooth_complete_fan(rng, 3);
    auto roots = demazure_roots(f);
    for (const auto& s : support::stable_subsets(f, rng, 5, 8)) {
      auto fails = support::levi_property_failures(f, roots, s);
      ASSERT_TRUE(fails.empty()) << fails.front();
    }
  }
}

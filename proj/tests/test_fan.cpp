#include <gtest/gtest.h>

#include <random>

#include "fanaut/corpus.hpp"
#include "fanaut/fan.hpp"
#include "support/fan_gen.hpp"

using namespace fanaut;

namespace {

Fan fan2(std::map<std::string, std::vector<long>> rays, std::vector<RaySet> cones) {
  Fan f;
  f.rank = 2;
  for (auto& [n, v] : rays) f.rays[n] = make_vector({v[0], v[1]});
  f.cones = std::move(cones);
  return f;
}

bool has_kind(const ValidationReport& r, const std::string& kind) {
  for (const auto& v : r.violations)
    if (v.kind == kind) return true;
  return false;
}

Sublattice perp_of(std::initializer_list<long> alpha) {
  std::vector<IntVector> a{make_vector(alpha)};
  return annihilator(a, a[0].size());
}

}  // namespace

TEST(FanValidate, ProjectivePlane) {
  auto rep = validate(projective_space(2));
  EXPECT_TRUE(rep.valid);
  EXPECT_TRUE(rep.violations.empty());
}

TEST(FanValidate, OverlapHasWitness) {
  auto rep = validate(overlapping_fan());
  ASSERT_FALSE(rep.valid);
  ASSERT_TRUE(has_kind(rep, "overlap"));
  for (const auto& v : rep.violations)
    if (v.kind == "overlap") {
      ASSERT_TRUE(v.witness);
      EXPECT_EQ(*v.witness, make_vector({2, 1}));
      // The witness lies in the relative interior of both cones.
      auto f = overlapping_fan();
      EXPECT_TRUE(f.cone_of({"X1", "X2"}).relint_contains(*v.witness));
      EXPECT_TRUE(f.cone_of({"X1", "Y"}).relint_contains(*v.witness));
    }
}

TEST(FanValidate, EmptyRankZero) {
  Fan f;
  EXPECT_TRUE(validate(f).valid);
  EXPECT_TRUE(is_smooth(f));
  f.cones = {{}};
  EXPECT_TRUE(validate(f).valid);
  EXPECT_TRUE(is_complete(f));
}

TEST(FanValidate, MalformedRaysAndCones) {
  EXPECT_TRUE(has_kind(validate(fan2({{"A", {2, 0}}}, {{"A"}})), "non_primitive_ray"));
  EXPECT_TRUE(has_kind(validate(fan2({{"A", {0, 0}}}, {{"A"}})), "zero_ray"));
  EXPECT_TRUE(has_kind(validate(fan2({{"A", {1, 0}}, {"B", {1, 0}}}, {{"A"}, {"B"}})), "duplicate_ray"));
  EXPECT_TRUE(has_kind(validate(fan2({{"A", {1, 0}}}, {{"A", "Q"}})), "unknown_ray"));
  EXPECT_TRUE(has_kind(validate(fan2({{"A", {1, 0}}, {"B", {0, 1}}}, {{"A"}})), "unused_ray"));
  EXPECT_TRUE(has_kind(validate(fan2({{"A", {1, 0}}, {"B", {0, 1}}, {"C", {1, 1}}}, {{"A", "B", "C"}})),
                       "not_simplicial"));
  Fan f = fan2({{"A", {1, 0}}}, {{"A"}});
  f.support = HalfspaceCone(2, {make_vector({-1, 0})});
  EXPECT_TRUE(has_kind(validate(f), "outside_support"));
}

TEST(FanSmooth, Examples) {
  EXPECT_TRUE(is_smooth(projective_space(2)));
  EXPECT_FALSE(is_smooth(fan2({{"A", {1, 0}}, {"B", {1, 2}}}, {{"A", "B"}})));
  Fan weighted = fan2({{"A", {1, 0}}, {"B", {0, 1}}, {"C", {-1, -2}}}, {{"A", "B"}, {"A", "C"}, {"B", "C"}});
  EXPECT_TRUE(validate(weighted).valid);
  EXPECT_FALSE(is_smooth(weighted));
}

TEST(FanComplete, Examples) {
  EXPECT_TRUE(is_complete(projective_space(2)));
  EXPECT_FALSE(is_complete(fan2({{"A", {1, 0}}, {"B", {0, 1}}}, {{"A", "B"}})));
  EXPECT_TRUE(is_complete(synthetic_nonlinear().fan));
  Fan p2 = projective_space(2);
  p2.cones.pop_back();
  EXPECT_FALSE(is_complete(p2));
}

TEST(FanRestrict, ProjectivePlaneOnRootHyperplane) {
  auto r = restrict_to_subspace(projective_space(2), perp_of({-1, 1}));
  EXPECT_TRUE(r.faces_ok == false);  // cone(X1, X2) meets the line in its interior
  EXPECT_EQ(r.fan.rank, 1u);
  EXPECT_EQ(r.fan.rays.size(), 2u);
  EXPECT_EQ(r.fan.rays.at("X3"), make_vector({-1}));
  EXPECT_TRUE(validate(r.fan).valid);
  EXPECT_TRUE(is_complete(r.fan));
  ASSERT_EQ(r.ambient_cones.size(), 3u);
  std::vector<IntVector> neg{make_vector({-1, -1})}, pos{make_vector({1, 1})};
  EXPECT_NE(std::find(r.ambient_cones.begin(), r.ambient_cones.end(), Cone::from_generators(2, neg)),
            r.ambient_cones.end());
  EXPECT_NE(std::find(r.ambient_cones.begin(), r.ambient_cones.end(), Cone::from_generators(2, pos)),
            r.ambient_cones.end());
}

TEST(FanRestrict, FullLatticeIsIdentity) {
  for (Fan f : {projective_space(2), hirzebruch(2), projective_space(3)}) {
    auto r = restrict_to_subspace(f, Sublattice::full(f.rank));
    EXPECT_TRUE(r.faces_ok);
    EXPECT_EQ(r.fan.rays, f.rays);
    EXPECT_EQ(r.fan.maximal_cones(), f.maximal_cones());
  }
}

TEST(FanRestrict, HalfPlaneOnVerticalLine) {
  std::vector<IntVector> y{make_vector({0, 1})};
  auto r = restrict_to_subspace(synthetic_nonlinear().fan, Sublattice::span(2, y));
  EXPECT_TRUE(r.faces_ok);
  EXPECT_EQ(r.fan.rays.at("D2"), make_vector({1}));
  EXPECT_EQ(r.fan.rays.at("D3"), make_vector({-1}));
  EXPECT_EQ(r.fan.rays.size(), 2u);
  EXPECT_TRUE(is_complete(r.fan));
}

TEST(FanJoin, Examples) {
  Fan s = synthetic_nonlinear().fan;
  std::vector<IntVector> y{make_vector({0, 1})};
  auto sub = restrict_to_subspace(s, Sublattice::span(2, y));
  EXPECT_TRUE(is_join(s, sub.ambient_cones, "E1"));

  Fan p2 = projective_space(2);
  auto line = restrict_to_subspace(p2, perp_of({-1, 1}));
  EXPECT_FALSE(is_join(p2, line.ambient_cones, "X1"));

  Fan degenerate = fan2({{"D2", {0, 1}}, {"D3", {0, -1}}, {"E1", {-1, 0}}}, {{"D2"}, {"D3"}, {"E1"}});
  EXPECT_TRUE(is_join(degenerate, sub.ambient_cones, "E1"));
}

TEST(FanOrbits, ProjectivePlane) {
  auto p = orbit_closure_poset(projective_space(2));
  ASSERT_EQ(p.cones.size(), 7u);
  std::map<std::size_t, int> covered_by;
  for (auto [i, j] : p.hasse.covers) {
    EXPECT_EQ(p.cones[i].size() + 1, p.cones[j].size());
    ++covered_by[j];
  }
  int points = 0;
  for (std::size_t j = 0; j < p.cones.size(); ++j)
    if (p.cones[j].size() == 2) {
      ++points;
      EXPECT_EQ(covered_by[j], 2);
    }
  EXPECT_EQ(points, 3);
  EXPECT_EQ(p.hasse.covers.size(), 9u);
}

TEST(FanOrbits, SmallCases) {
  Fan zero;
  zero.rank = 2;
  zero.cones = {{}};
  EXPECT_EQ(orbit_closure_poset(zero).cones.size(), 1u);
  auto p1 = orbit_closure_poset(projective_space(1));
  EXPECT_EQ(p1.cones.size(), 3u);
  EXPECT_EQ(p1.hasse.covers.size(), 2u);
}

TEST(FanProperties, RandomSmoothCompleteFans) {
  std::mt19937 rng(17);
  for (int t = 0; t < 120; ++t) {
    Fan f = support::random_smooth_complete_fan(rng);
    ASSERT_TRUE(validate(f).valid);
    ASSERT_TRUE(is_smooth(f));
    ASSERT_TRUE(is_complete(f));
    // The orbit poset has one node per cone and Euler characteristic zero
    // for the alternating count of cones of a complete fan: sum (-1)^dim = (-1)^n.
    auto p = orbit_closure_poset(f);
    long chi = 0;
    for (const auto& c : p.cones) chi += (c.size() % 2 == 0) ? 1 : -1;
    ASSERT_EQ(chi, f.rank % 2 == 0 ? 1 : -1);
    Fan g = f;
    g.cones = g.maximal_cones();
    g.cones.erase(g.cones.begin());
    ASSERT_FALSE(is_complete(g));
  }
}

TEST(FanCoverage, NonFaceSubconeIsRejected) {
  std::vector<IntVector> q{make_vector({1, 0}), make_vector({0, 1})};
  std::vector<IntVector> inner{make_vector({1, 1})};
  std::vector<Cone> cones{Cone::from_generators(2, q), Cone::from_generators(2, inner)};
  auto rep = coverage(cones, 2, std::nullopt);
  EXPECT_FALSE(rep.is_fan);
  std::vector<Cone> faces{Cone::from_generators(2, q), Cone::from_generators(2, std::vector<IntVector>{q[0]})};
  EXPECT_TRUE(coverage(faces, 2, std::nullopt).is_fan);
}

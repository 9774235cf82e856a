#include <gtest/gtest.h>

#include <cmath>

#include "noncongruent/splitting.hpp"
#include "noncongruent/verification.hpp"
#include "test_support.hpp"

using namespace noncongruent;
using nctest::cone_from_angles;

namespace {

RunParams params_for(std::uint64_t seed, double radius) {
  RunParams p;
  p.seed = seed;
  p.radius = radius;
  return p;
}

const TilingState& small_run() {
  static const TilingState state = [] {
    TilingState s = init_tiling(params_for(42, 10));
    run(s);
    return s;
  }();
  return state;
}

AuditOptions small_options() {
  AuditOptions o = audit_options_for(small_run().params());
  o.coverage_samples = 20000;
  return o;
}

}  // namespace

TEST(PropertyP, Examples) {
  const double sym = 1.51967137130318509;
  const Cone initial = cone_from_angles(sym * std::sqrt(3.0), 5 * kPi / 6, 5 * kPi / 6);
  EXPECT_TRUE(audit_property_p(initial, 1e-9).pass);

  const PropertyPResult steep = audit_property_p(cone_from_angles(3.0, 0.97 * kPi, 0.5 * kPi), 1e-9);
  EXPECT_FALSE(steep.pass);
  EXPECT_EQ(steep.failures.size(), 1u);

  const PropertyPResult thin = audit_property_p(cone_from_angles(1.5, 0.6 * kPi, 0.6 * kPi), 1e-9);
  EXPECT_FALSE(thin.pass);
  EXPECT_DOUBLE_EQ(thin.width, 1.5);

  EXPECT_FALSE(audit_property_p(cone_from_angles(3.0, 0.9 * kPi, 0.9 * kPi), 1e-9).pass);
}

TEST(PerimeterBounds, ClosedForms) {
  EXPECT_NEAR(cut_perimeter_bound(), 139.638505765000741, 1e-12);
  EXPECT_NEAR(initial_perimeter_bound(), 6.50763181020188672, 1e-13);
}

TEST(CutReplay, PropertyPConesOfWidthAtMostFour) {
  Rng rng(31);
  for (int i = 0; i < 10000; ++i) {
    const Cone c = nctest::random_property_p_cone(rng, 2.0, 4.0);
    const CutResult cut = cut_triangle(c, choose_cut_side(c));
    ASSERT_GE(triangle_angle(cut.triangle, 2), kPi / 12 - 1e-9);
    ASSERT_TRUE(audit_property_p(cut.remainder, 1e-9).pass);
    ASSERT_NEAR(triangle_area(cut.triangle), 1.0, 1e-9);
    ASSERT_LE(triangle_metrics(cut.triangle).perimeter, cut_perimeter_bound());
  }
}

TEST(Clipping, SquaresAndSharedEdges) {
  const Polygon a{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  const Polygon b{{0.5, 0.5}, {1.5, 0.5}, {1.5, 1.5}, {0.5, 1.5}};
  EXPECT_NEAR(convex_intersection_area(a, b), 0.25, 1e-15);
  const Polygon reversed(b.rbegin(), b.rend());
  EXPECT_NEAR(convex_intersection_area(a, reversed), 0.25, 1e-15);
  const Polygon neighbour{{1, 0}, {2, 0}, {1, 1}};
  EXPECT_LE(convex_intersection_area(a, neighbour), 1e-15);
  EXPECT_NEAR(polygon_area(clip_left_of(a, {0, 0.25}, {1, 0.25})), 0.75, 1e-15);
}

TEST(TriangleDiskArea, AnalyticCases) {
  const Triangle t({0, 0}, {3, 0}, {0, 3});
  EXPECT_NEAR(triangle_disk_area(t, 2.0), kPi, 1e-12);
  const double r = 2.5, d = 3.0 / std::sqrt(2.0);
  const double segment = r * r * std::acos(d / r) - d * std::sqrt(r * r - d * d);
  EXPECT_NEAR(triangle_disk_area(t, r), kPi * r * r / 4 - segment, 1e-12);
  EXPECT_NEAR(triangle_disk_area(t, 10.0), 4.5, 1e-12);

  const Triangle far({5, 5}, {6, 5}, {5, 6});
  EXPECT_EQ(triangle_disk_area(far, 1.0), 0.0);
  const Triangle around({-10, -10}, {20, -10}, {-10, 20});
  EXPECT_NEAR(triangle_disk_area(around, 1.0), kPi, 1e-12);
}

TEST(TriangleDiskArea, SumsToDiskOverFan) {
  Rng rng(32);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 3 + static_cast<int>(rng.next() % 8);
    const double r = rng.uniform_open(0.5, 3.0);
    const double start = rng.uniform_open(0, 2 * kPi);
    double total = 0.0;
    for (int k = 0; k < n; ++k) {
      const Point a = direction_from_polar(start + 2 * kPi * k / n) * 10.0;
      const Point b = direction_from_polar(start + 2 * kPi * (k + 1) / n) * 10.0;
      total += triangle_disk_area(Triangle({0, 0}, a, b), r);
    }
    EXPECT_NEAR(total, kPi * r * r, 1e-12);
  }
}

TEST(TriangleContains, Tolerance) {
  const Triangle t({0, 0}, {2, 0}, {0, 2});
  EXPECT_TRUE(triangle_contains(t, {0.5, 0.5}, 0));
  EXPECT_TRUE(triangle_contains(t, {1, 1}, 1e-12));
  EXPECT_FALSE(triangle_contains(t, {1.01, 1.01}, 1e-9));
  EXPECT_TRUE(triangle_contains(t, {-1e-10, 0.5}, 1e-9));
}

TEST(AuditTiling, ReferenceRunPasses) {
  const AuditReport r = audit_tiling(small_run(), small_options());
  EXPECT_TRUE(r.pass());
  EXPECT_GE(r.min_congruence_separation, 1e-6);
  EXPECT_EQ(r.coverage_misses, 0u);
  EXPECT_NEAR(r.coverage_radius, 9.9, 1e-12);
}

TEST(AuditTiling, DuplicatedTriangleFailsNoncongruenceAndOverlap) {
  std::vector<Triangle> tris = small_run().triangles();
  tris.push_back(tris[10].with_id(100000));
  const std::vector<Cone> cones = small_run().cones();
  const AuditReport r = audit_tiling(tris, cones, small_options());
  EXPECT_FALSE(r.flags.noncongruence);
  EXPECT_FALSE(r.flags.overlap);
  EXPECT_TRUE(r.flags.area);
  ASSERT_EQ(r.overlap_pairs.size(), 1u);
  EXPECT_NEAR(r.overlap_pairs[0].area, 1.0, 1e-9);
}

TEST(AuditTiling, DeletedTriangleLeavesCoverageHole) {
  std::vector<Triangle> tris = small_run().triangles();
  tris.erase(tris.begin() + 5);
  const std::vector<Cone> cones = small_run().cones();
  const AuditReport r = audit_tiling(tris, cones, small_options());
  EXPECT_GT(r.coverage_misses, 0u);
  EXPECT_FALSE(r.flags.area_accounting);
  EXPECT_TRUE(r.flags.noncongruence);
}

TEST(AuditTiling, CoverageIsDeterministicGivenSeed) {
  std::vector<Triangle> tris = small_run().triangles();
  tris.erase(tris.begin() + 20);
  const std::vector<Cone> cones = small_run().cones();
  AuditOptions o = small_options();
  const AuditReport a = audit_tiling(tris, cones, o);
  const AuditReport b = audit_tiling(tris, cones, o);
  EXPECT_EQ(a.coverage_misses, b.coverage_misses);
  o.seed += 1;
  EXPECT_GT(audit_tiling(tris, cones, o).coverage_misses, 0u);
}

TEST(AuditTiling, MinPairwiseSeparation) {
  EXPECT_TRUE(std::isinf(min_pairwise_separation({})));
  const std::vector<Triangle> two{Triangle({0, 0}, {1, 0}, {0, 2}, 0), Triangle({0, 0}, {2, 0}, {1, 1}, 1)};
  EXPECT_NEAR(min_pairwise_separation(two), 2.0 - std::sqrt(2.0), 1e-15);
}

TEST(AuditPartition, InitialStateAndMissingCone) {
  const TilingState s = init_tiling(params_for(3, 30));
  const std::vector<Cone> cones = s.cones();
  EXPECT_TRUE(audit_partition(s.triangles(), cones, 30.0, 20000, 1).pass());
  const std::vector<Cone> missing(cones.begin(), cones.end() - 1);
  EXPECT_GT(audit_partition(s.triangles(), missing, 30.0, 20000, 1).coverage_misses, 0u);
  std::vector<Cone> doubled = cones;
  doubled.push_back(cones[0].with_id(99));
  EXPECT_GT(audit_partition(s.triangles(), doubled, 30.0, 2000, 1).overlap_count, 0u);
}

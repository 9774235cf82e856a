#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "noncongruent/geometry.hpp"
#include "noncongruent/splitting.hpp"

namespace noncongruent {

inline constexpr double kPropertyPMinWidth = 2.0;
inline constexpr double kPropertyPMaxAngle = 11.0 * kPi / 12.0;
inline constexpr double kPropertyPMaxAngleSum = 5.0 * kPi / 3.0;

struct PropertyPResult {
  bool pass = false;
  double width = 0.0;
  ConeAngles angles;
  std::vector<std::string> failures;
};

// width > 2 - tol, both angles <= 11 pi / 12 + tol, sum <= 5 pi / 3 + tol.
PropertyPResult audit_property_p(const Cone& c, double tol);

// Longest cut-triangle perimeter: base < 16 and each other side at most
// base / sin(pi/12).
double cut_perimeter_bound();

// Largest perimeter an initial triangle can have over the feasible leg range.
double initial_perimeter_bound();

using Polygon = std::vector<Point>;

// Part of a convex polygon to the left of the directed line a -> b.
Polygon clip_left_of(const Polygon& poly, Point a, Point b);

// Area of a simple polygon (unsigned).
double polygon_area(const Polygon& poly);

// Intersection area of two convex polygons (either orientation).
double convex_intersection_area(const Polygon& a, const Polygon& b);

// Area of triangle t inside the disk of the given radius centered at the origin.
double triangle_disk_area(const Triangle& t, double radius);

// Closed containment with an absolute distance tolerance.
bool triangle_contains(const Triangle& t, Point x, double tol);

// The cone clipped to the square [-half_size, half_size]^2.
Polygon cone_polygon(const Cone& c, double half_size);

struct AuditOptions {
  double radius = 30.0;
  double margin = 1e-6;
  double tol = 1e-9;
  double coverage_fraction = 0.99;
  std::size_t coverage_samples = 100000;
  std::uint64_t seed = 0x5eedULL;
  double area_tolerance = 1e-9;
  double overlap_tolerance = 1e-12;
  double accounting_tolerance = 1e-6;  // relative
};

AuditOptions audit_options_for(const RunParams& params);

struct PropertyPViolation {
  ConeId cone = 0;
  std::string reason;
};

struct OverlapPair {
  TriangleId first = 0;
  TriangleId second = 0;
  double area = 0.0;
};

struct AuditFlags {
  bool area = false;
  bool perimeter = false;
  bool initial_perimeter = false;
  bool property_p = false;
  bool noncongruence = false;
  bool overlap = false;
  bool coverage = false;
  bool area_accounting = false;

  bool all() const {
    return area && perimeter && initial_perimeter && property_p && noncongruence && overlap && coverage &&
           area_accounting;
  }
};

struct AuditReport {
  std::size_t triangle_count = 0;
  std::size_t cone_count = 0;

  double area_max_error = 0.0;
  double perimeter_max = 0.0;
  double perimeter_bound = 0.0;
  double initial_perimeter_max = 0.0;
  double initial_perimeter_bound = 0.0;
  std::vector<PropertyPViolation> property_p_violations;
  double min_congruence_separation = 0.0;
  double separation_threshold = 0.0;
  std::vector<OverlapPair> overlap_pairs;
  double max_overlap_area = 0.0;
  double coverage_radius = 0.0;
  std::size_t coverage_samples = 0;
  std::size_t coverage_misses = 0;
  double accounted_area = 0.0;
  double disk_area = 0.0;
  double accounting_relative_error = 0.0;

  AuditFlags flags;

  bool pass() const { return flags.all(); }
};

// Smallest signature distance over all pairs (+inf for fewer than two).
double min_pairwise_separation(std::span<const Triangle> triangles);

AuditReport audit_tiling(std::span<const Triangle> triangles, std::span<const Cone> cones, const AuditOptions& options);
AuditReport audit_tiling(const TilingState& state, const AuditOptions& options);

// Tiling check for intermediate states, where cones still cover part of the
// disk: pairwise overlaps among triangles and cones (cones truncated to a
// square) and Monte Carlo coverage of the disk by their union.
struct PartitionReport {
  std::size_t overlap_count = 0;
  double max_overlap_area = 0.0;
  std::size_t coverage_samples = 0;
  std::size_t coverage_misses = 0;

  bool pass() const { return overlap_count == 0 && coverage_misses == 0; }
};

PartitionReport audit_partition(std::span<const Triangle> triangles, std::span<const Cone> cones, double radius,
                                std::size_t samples, std::uint64_t seed, double tol = 1e-9);

}  // namespace noncongruent

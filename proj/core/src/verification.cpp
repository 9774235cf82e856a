#include "noncongruent/verification.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "noncongruent/genericity.hpp"
#include "noncongruent/random.hpp"

namespace noncongruent {

PropertyPResult audit_property_p(const Cone& c, double tol) {
  PropertyPResult r;
  r.width = cone_width(c);
  r.angles = cone_angles(c);
  auto fail = [&](const std::string& what, double value) {
    std::ostringstream os;
    os.precision(17);
    os << what << " (" << value << ")";
    r.failures.push_back(os.str());
  };
  if (!(r.width > kPropertyPMinWidth - tol)) fail("width <= 2", r.width);
  if (!(r.angles.at_p <= kPropertyPMaxAngle + tol)) fail("angle at p > 11pi/12", r.angles.at_p);
  if (!(r.angles.at_q <= kPropertyPMaxAngle + tol)) fail("angle at q > 11pi/12", r.angles.at_q);
  if (!(r.angles.sum() <= kPropertyPMaxAngleSum + tol)) fail("angle sum > 5pi/3", r.angles.sum());
  r.pass = r.failures.empty();
  return r;
}

double cut_perimeter_bound() { return 16.0 + 32.0 / std::sin(kPi / 12.0); }

double initial_perimeter_bound() {
  // The perimeter is l + K/l + sqrt(l^2 + (K/l)^2 + K), largest at the ends
  // of the feasible interval (symmetric under l -> K/l).
  const double k = initial_leg_product();
  const double l = feasible_leg_interval().hi;
  const double m = k / l;
  return l + m + std::sqrt(l * l + m * m + l * m);
}

Polygon clip_left_of(const Polygon& poly, Point a, Point b) {
  Polygon out;
  if (poly.empty()) return out;
  out.reserve(poly.size() + 1);
  const Point dir = b - a;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& cur = poly[i];
    const Point& nxt = poly[(i + 1) % poly.size()];
    const double sc = cross(dir, cur - a);
    const double sn = cross(dir, nxt - a);
    if (sc >= 0.0) out.push_back(cur);
    if ((sc >= 0.0) != (sn >= 0.0)) {
      const double s = sc / (sc - sn);
      out.push_back(cur + s * (nxt - cur));
    }
  }
  return out;
}

double polygon_area(const Polygon& poly) {
  double twice = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) twice += cross(poly[i], poly[(i + 1) % poly.size()]);
  return std::abs(twice) / 2.0;
}

namespace {

double signed_area(const Polygon& poly) {
  double twice = 0.0;
  for (std::size_t i = 0; i < poly.size(); ++i) twice += cross(poly[i], poly[(i + 1) % poly.size()]);
  return twice / 2.0;
}

Polygon ccw(Polygon poly) {
  if (signed_area(poly) < 0.0) std::reverse(poly.begin(), poly.end());
  return poly;
}

Polygon as_polygon(const Triangle& t) { return ccw({t[0], t[1], t[2]}); }

// Signed area of (disk of radius r) intersected with triangle (0, a, b).
double disk_wedge_area(Point a, Point b, double r) {
  const double r2 = r * r;
  auto sector = [r2](Point u, Point v) { return r2 * std::atan2(cross(u, v), dot(u, v)) / 2.0; };
  if (dot(a, a) <= r2 && dot(b, b) <= r2) return cross(a, b) / 2.0;
  const Point d = b - a;
  const double qa = dot(d, d);
  if (qa == 0.0) return 0.0;
  const double qb = dot(a, d);
  const double qc = dot(a, a) - r2;
  const double disc = qb * qb - qa * qc;
  if (disc <= 0.0) return sector(a, b);
  const double s = std::sqrt(disc);
  const double t1 = (-qb - s) / qa;
  const double t2 = (-qb + s) / qa;
  if (t2 <= 0.0 || t1 >= 1.0) return sector(a, b);
  const Point p1 = a + std::max(t1, 0.0) * d;
  const Point p2 = a + std::min(t2, 1.0) * d;
  return sector(a, p1) + cross(p1, p2) / 2.0 + sector(p2, b);
}

struct Box {
  double min_x, min_y, max_x, max_y;
};

Box bounds(const Triangle& t) {
  return {std::min({t[0].x, t[1].x, t[2].x}), std::min({t[0].y, t[1].y, t[2].y}),
          std::max({t[0].x, t[1].x, t[2].x}), std::max({t[0].y, t[1].y, t[2].y})};
}

bool boxes_meet(const Box& a, const Box& b) {
  return a.min_x <= b.max_x && b.min_x <= a.max_x && a.min_y <= b.max_y && b.min_y <= a.max_y;
}

// Uniform bucket grid over triangle bounding boxes.
class TriangleGrid {
 public:
  explicit TriangleGrid(std::span<const Triangle> triangles) : triangles_(triangles) {
    boxes_.reserve(triangles.size());
    Box all{std::numeric_limits<double>::max(), std::numeric_limits<double>::max(),
            std::numeric_limits<double>::lowest(), std::numeric_limits<double>::lowest()};
    for (const Triangle& t : triangles) {
      const Box b = bounds(t);
      boxes_.push_back(b);
      all = {std::min(all.min_x, b.min_x), std::min(all.min_y, b.min_y), std::max(all.max_x, b.max_x),
             std::max(all.max_y, b.max_y)};
    }
    if (triangles.empty()) all = {0.0, 0.0, 1.0, 1.0};
    origin_ = {all.min_x, all.min_y};
    const double extent = std::max(all.max_x - all.min_x, all.max_y - all.min_y);
    cell_ = std::max(2.0, extent / 1024.0);
    nx_ = static_cast<std::size_t>((all.max_x - all.min_x) / cell_) + 1;
    ny_ = static_cast<std::size_t>((all.max_y - all.min_y) / cell_) + 1;
    cells_.assign(nx_ * ny_, {});
    for (std::size_t i = 0; i < boxes_.size(); ++i) {
      const auto [x0, y0] = cell_of({boxes_[i].min_x, boxes_[i].min_y});
      const auto [x1, y1] = cell_of({boxes_[i].max_x, boxes_[i].max_y});
      for (std::size_t y = y0; y <= y1; ++y) {
        for (std::size_t x = x0; x <= x1; ++x) cells_[y * nx_ + x].push_back(i);
      }
    }
  }

  std::pair<std::size_t, std::size_t> cell_of(Point p) const {
    auto clamp_index = [](double v, std::size_t n) {
      if (!(v > 0.0)) return std::size_t{0};
      return std::min(static_cast<std::size_t>(v), n - 1);
    };
    return {clamp_index((p.x - origin_.x) / cell_, nx_), clamp_index((p.y - origin_.y) / cell_, ny_)};
  }

  // Calls f(i, j) once for every pair i < j with intersecting boxes.
  template <class F>
  void for_each_candidate_pair(F&& f) const {
    for (std::size_t c = 0; c < cells_.size(); ++c) {
      const auto& bucket = cells_[c];
      for (std::size_t a = 0; a < bucket.size(); ++a) {
        for (std::size_t b = a + 1; b < bucket.size(); ++b) {
          const std::size_t i = std::min(bucket[a], bucket[b]);
          const std::size_t j = std::max(bucket[a], bucket[b]);
          if (!boxes_meet(boxes_[i], boxes_[j])) continue;
          // Report each pair only in the cell holding the corner of the box overlap.
          const auto [cx, cy] = cell_of({std::max(boxes_[i].min_x, boxes_[j].min_x),
                                         std::max(boxes_[i].min_y, boxes_[j].min_y)});
          if (cy * nx_ + cx != c) continue;
          f(i, j);
        }
      }
    }
  }

  bool covers(Point p, double tol) const {
    const auto [cx, cy] = cell_of(p);
    for (std::size_t i : cells_[cy * nx_ + cx]) {
      if (triangle_contains(triangles_[i], p, tol)) return true;
    }
    return false;
  }

 private:
  std::span<const Triangle> triangles_;
  std::vector<Box> boxes_;
  Point origin_;
  double cell_ = 1.0;
  std::size_t nx_ = 1;
  std::size_t ny_ = 1;
  std::vector<std::vector<std::size_t>> cells_;
};

Point sample_disk(Rng& rng, double radius) {
  const double r = radius * std::sqrt(rng.uniform());
  const double theta = 2.0 * kPi * rng.uniform();
  return {r * std::cos(theta), r * std::sin(theta)};
}

}  // namespace

double convex_intersection_area(const Polygon& a, const Polygon& b) {
  Polygon clipped = ccw(a);
  const Polygon clip = ccw(b);
  for (std::size_t i = 0; i < clip.size() && !clipped.empty(); ++i) {
    clipped = clip_left_of(clipped, clip[i], clip[(i + 1) % clip.size()]);
  }
  return clipped.size() < 3 ? 0.0 : polygon_area(clipped);
}

double triangle_disk_area(const Triangle& t, double radius) {
  double total = 0.0;
  for (std::size_t i = 0; i < 3; ++i) total += disk_wedge_area(t[i], t[(i + 1) % 3], radius);
  return std::abs(total);
}

bool triangle_contains(const Triangle& t, Point x, double tol) {
  const Polygon p = as_polygon(t);
  for (std::size_t i = 0; i < 3; ++i) {
    const Point& u = p[i];
    const Point& v = p[(i + 1) % 3];
    if (orient(u, v, x) / distance(u, v) < -tol) return false;
  }
  return true;
}

Polygon cone_polygon(const Cone& c, double half_size) {
  Polygon square{{-half_size, -half_size}, {half_size, -half_size}, {half_size, half_size}, {-half_size, half_size}};
  Polygon poly = clip_left_of(square, c.base_p(), c.base_q());
  poly = clip_left_of(poly, c.base_p() + c.dir_p(), c.base_p());
  poly = clip_left_of(poly, c.base_q(), c.base_q() + c.dir_q());
  return poly;
}

AuditOptions audit_options_for(const RunParams& params) {
  AuditOptions o;
  o.radius = params.radius;
  o.margin = params.margin;
  o.tol = params.tol;
  return o;
}

double min_pairwise_separation(std::span<const Triangle> triangles) {
  std::vector<CongruenceSignature> sigs;
  sigs.reserve(triangles.size());
  for (const Triangle& t : triangles) sigs.push_back(triangle_metrics(t).signature);
  std::sort(sigs.begin(), sigs.end(),
            [](const CongruenceSignature& a, const CongruenceSignature& b) { return a.longest() < b.longest(); });
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < sigs.size(); ++i) {
    for (std::size_t j = i + 1; j < sigs.size() && sigs[j].longest() - sigs[i].longest() < best; ++j) {
      best = std::min(best, signature_distance(sigs[i], sigs[j]));
    }
  }
  return best;
}

AuditReport audit_tiling(std::span<const Triangle> triangles, std::span<const Cone> cones, const AuditOptions& options) {
  AuditReport r;
  r.triangle_count = triangles.size();
  r.cone_count = cones.size();
  r.perimeter_bound = cut_perimeter_bound();
  r.initial_perimeter_bound = initial_perimeter_bound();

  for (const Triangle& t : triangles) {
    const TriangleMetrics m = triangle_metrics(t);
    r.area_max_error = std::max(r.area_max_error, std::abs(m.area - 1.0));
    if (t.provenance().kind == Provenance::Kind::initial) {
      r.initial_perimeter_max = std::max(r.initial_perimeter_max, m.perimeter);
    } else {
      r.perimeter_max = std::max(r.perimeter_max, m.perimeter);
    }
  }
  r.flags.area = r.area_max_error <= options.area_tolerance;
  r.flags.perimeter = r.perimeter_max <= r.perimeter_bound;
  r.flags.initial_perimeter = r.initial_perimeter_max <= r.initial_perimeter_bound + options.tol;

  for (const Cone& c : cones) {
    const PropertyPResult p = audit_property_p(c, options.tol);
    for (const std::string& f : p.failures) r.property_p_violations.push_back({c.id(), f});
  }
  r.flags.property_p = r.property_p_violations.empty();

  r.min_congruence_separation = min_pairwise_separation(triangles);
  r.separation_threshold = options.margin - 2.0 * options.tol;
  r.flags.noncongruence = r.min_congruence_separation >= r.separation_threshold;

  const TriangleGrid grid(triangles);
  grid.for_each_candidate_pair([&](std::size_t i, std::size_t j) {
    const double area = convex_intersection_area(as_polygon(triangles[i]), as_polygon(triangles[j]));
    r.max_overlap_area = std::max(r.max_overlap_area, area);
    if (area > options.overlap_tolerance) r.overlap_pairs.push_back({triangles[i].id(), triangles[j].id(), area});
  });
  std::sort(r.overlap_pairs.begin(), r.overlap_pairs.end(), [](const OverlapPair& a, const OverlapPair& b) {
    return std::pair{a.first, a.second} < std::pair{b.first, b.second};
  });
  r.flags.overlap = r.overlap_pairs.empty();

  r.coverage_radius = options.coverage_fraction * options.radius;
  r.coverage_samples = options.coverage_samples;
  Rng rng(options.seed);
  for (std::size_t s = 0; s < options.coverage_samples; ++s) {
    if (!grid.covers(sample_disk(rng, r.coverage_radius), options.tol)) ++r.coverage_misses;
  }
  r.flags.coverage = r.coverage_misses == 0;

  for (const Triangle& t : triangles) r.accounted_area += triangle_disk_area(t, r.coverage_radius);
  r.disk_area = kPi * r.coverage_radius * r.coverage_radius;
  r.accounting_relative_error = std::abs(r.accounted_area - r.disk_area) / r.disk_area;
  r.flags.area_accounting = r.accounting_relative_error <= options.accounting_tolerance;
  return r;
}

AuditReport audit_tiling(const TilingState& state, const AuditOptions& options) {
  const std::vector<Cone> cones = state.cones();
  return audit_tiling(state.triangles(), cones, options);
}

PartitionReport audit_partition(std::span<const Triangle> triangles, std::span<const Cone> cones, double radius,
                                std::size_t samples, std::uint64_t seed, double tol) {
  PartitionReport r;
  double reach = radius;
  for (const Triangle& t : triangles) {
    for (const Point& v : t.vertices()) reach = std::max({reach, std::abs(v.x), std::abs(v.y)});
  }
  for (const Cone& c : cones) {
    for (const Point& v : {c.base_p(), c.base_q()}) reach = std::max({reach, std::abs(v.x), std::abs(v.y)});
  }
  const double half = 2.0 * reach + 1.0;
  const double area_tol = 1e-9;
  const double cone_area_tol = 1e-12 * half * half;

  auto record = [&](double area, double limit) {
    r.max_overlap_area = std::max(r.max_overlap_area, area);
    if (area > limit) ++r.overlap_count;
  };

  const TriangleGrid grid(triangles);
  grid.for_each_candidate_pair([&](std::size_t i, std::size_t j) {
    record(convex_intersection_area(as_polygon(triangles[i]), as_polygon(triangles[j])), area_tol);
  });

  std::vector<Polygon> cone_polys;
  cone_polys.reserve(cones.size());
  for (const Cone& c : cones) cone_polys.push_back(cone_polygon(c, half));
  for (const Polygon& cp : cone_polys) {
    for (const Triangle& t : triangles) record(convex_intersection_area(as_polygon(t), cp), area_tol);
  }
  for (std::size_t i = 0; i < cone_polys.size(); ++i) {
    for (std::size_t j = i + 1; j < cone_polys.size(); ++j) {
      record(convex_intersection_area(cone_polys[i], cone_polys[j]), cone_area_tol);
    }
  }

  Rng rng(seed);
  r.coverage_samples = samples;
  for (std::size_t s = 0; s < samples; ++s) {
    const Point x = sample_disk(rng, radius);
    if (grid.covers(x, tol)) continue;
    if (std::any_of(cones.begin(), cones.end(), [&](const Cone& c) { return cone_contains(c, x, tol); })) continue;
    ++r.coverage_misses;
  }
  return r;
}

}  // namespace noncongruent

#include "noncongruent/geometry.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace noncongruent {

namespace {

bool finite(Point p) { return std::isfinite(p.x) && std::isfinite(p.y); }

std::string describe(Point p) {
  std::ostringstream os;
  os.precision(17);
  os << '(' << p.x << ", " << p.y << ')';
  return os.str();
}

// Leaves vectors that are already unit to rounding untouched, so that
// reconstructing a cone from its stored directions is bit-exact.
Point unit_direction(Point v) {
  const double n = norm(v);
  if (std::abs(n - 1.0) <= 4.0 * std::numeric_limits<double>::epsilon()) return v;
  return normalized(v);
}

}  // namespace

Point normalized(Point v) {
  const double n = norm(v);
  if (!(n > 0.0) || !std::isfinite(n)) {
    throw GeometryError("cannot normalize vector " + describe(v));
  }
  return {v.x / n, v.y / n};
}

double distance_to_segment(Point x, Point a, Point b) {
  const Point ab = b - a;
  const double len2 = dot(ab, ab);
  if (len2 == 0.0) return distance(x, a);
  const double s = std::clamp(dot(x - a, ab) / len2, 0.0, 1.0);
  return distance(x, a + s * ab);
}

double distance_to_half_line(Point x, Point origin, Point dir) {
  const double len2 = dot(dir, dir);
  const double s = std::max(0.0, dot(x - origin, dir) / len2);
  return distance(x, origin + s * dir);
}

CongruenceSignature CongruenceSignature::from_lengths(double a, double b, double c) {
  CongruenceSignature sig;
  sig.sides_ = {a, b, c};
  std::sort(sig.sides_.begin(), sig.sides_.end());
  if (!(sig.sides_[0] > 0.0) || !std::isfinite(sig.sides_[2]) || sig.sides_[2] > sig.sides_[0] + sig.sides_[1]) {
    throw GeometryError("side lengths violate the triangle inequality");
  }
  return sig;
}

double signature_distance(const CongruenceSignature& a, const CongruenceSignature& b) {
  double d = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    d = std::max(d, std::abs(a.sides()[i] - b.sides()[i]));
  }
  return d;
}

Triangle::Triangle(Point a, Point b, Point c, TriangleId id, Provenance provenance)
    : vertices_{a, b, c}, id_(id), provenance_(provenance) {
  if (!finite(a) || !finite(b) || !finite(c)) {
    throw GeometryError("triangle has non-finite vertex");
  }
  if (!(std::abs(orient(a, b, c)) / 2.0 > kMinTriangleArea)) {
    throw GeometryError("degenerate triangle " + describe(a) + " " + describe(b) + " " + describe(c));
  }
}

Triangle Triangle::with_id(TriangleId id) const {
  Triangle t = *this;
  t.id_ = id;
  return t;
}

double triangle_area(const Triangle& t) { return std::abs(orient(t[0], t[1], t[2])) / 2.0; }

TriangleMetrics triangle_metrics(const Triangle& t) {
  const double a = distance(t[1], t[2]);
  const double b = distance(t[2], t[0]);
  const double c = distance(t[0], t[1]);
  return {triangle_area(t), a + b + c, CongruenceSignature::from_lengths(a, b, c)};
}

double triangle_diameter(const Triangle& t) {
  return std::max({distance(t[0], t[1]), distance(t[1], t[2]), distance(t[2], t[0])});
}

double triangle_angle(const Triangle& t, std::size_t i) {
  const Point& v = t[i % 3];
  return angle_between(t[(i + 1) % 3] - v, t[(i + 2) % 3] - v);
}

double congruence_distance(const Triangle& a, const Triangle& b) {
  return signature_distance(triangle_metrics(a).signature, triangle_metrics(b).signature);
}

Cone::Cone(Point base_p, Point base_q, Point dir_p, Point dir_q, ConeId id)
    : base_p_(base_p), base_q_(base_q), id_(id) {
  if (!finite(base_p) || !finite(base_q) || !finite(dir_p) || !finite(dir_q)) {
    throw GeometryError("cone has non-finite data");
  }
  if (distance(base_p, base_q) < kMinBaseLength) {
    throw GeometryError("cone base shorter than " + std::to_string(kMinBaseLength));
  }
  dir_p_ = unit_direction(dir_p);
  dir_q_ = unit_direction(dir_q);
  const double between = angle_between(dir_p_, dir_q_);
  if (between < kMinSideSeparation || between > kPi - kMinSideSeparation) {
    throw GeometryError("cone sides are parallel");
  }
  const Point base = base_q - base_p;
  if (!(cross(base, dir_p_) > 0.0) || !(cross(base, dir_q_) > 0.0)) {
    throw GeometryError("cone sides must point to the left of the base " + describe(base_p) + " -> " +
                        describe(base_q));
  }
}

bool Cone::diverges() const { return cone_angles(*this).sum() > kPi; }

Cone Cone::with_id(ConeId id) const {
  Cone c = *this;
  c.id_ = id;
  return c;
}

ConeAngles cone_angles(const Cone& c) {
  return {angle_between(c.base_q() - c.base_p(), c.dir_p()), angle_between(c.base_p() - c.base_q(), c.dir_q())};
}

double cone_width(const Cone& c) {
  return std::min({c.base_length(), distance_to_half_line(c.base_p(), c.base_q(), c.dir_q()),
                   distance_to_half_line(c.base_q(), c.base_p(), c.dir_p())});
}

Side choose_cut_side(const Cone& c) {
  const ConeAngles a = cone_angles(c);
  return a.at_q < a.at_p ? Side::right : Side::left;
}

double cut_apex_offset(const Cone& c, Side side) {
  const double d = 2.0 / (c.base_length() * std::sin(cone_angles(c).at(side)));
  if (!(d > 0.0) || !std::isfinite(d)) {
    throw GeometryError("cut apex offset is not a positive finite number");
  }
  return d;
}

CutResult cut_triangle(const Cone& c, Side side) {
  const double d = cut_apex_offset(c, side);
  const Point r = c.base(side) + d * c.dir(side);
  Triangle t(c.base_p(), c.base_q(), r, 0, Provenance::cut(c.id(), side));
  if (side == Side::left) {
    return {t, Cone(r, c.base_q(), c.dir_p(), c.dir_q())};
  }
  return {t, Cone(c.base_p(), r, c.dir_p(), c.dir_q())};
}

double split_angle_at_x(const Cone& c, double t, double phi) {
  const Point x = c.base_p() + t * (c.base_q() - c.base_p());
  return angle_between(c.base_p() - x, direction_from_polar(phi));
}

double split_direction(const Cone& c, double alpha) {
  const Point e = normalized(c.base_q() - c.base_p());
  const Point n{-e.y, e.x};
  return polar_angle(-std::cos(alpha) * e + std::sin(alpha) * n);
}

SplitResult split_cone_unchecked(const Cone& c, double t, double phi) {
  if (!(t > 0.0 && t < 1.0) || !std::isfinite(phi)) {
    throw SplitRejected(SplitRejection::parameter_out_of_range, "split parameter t must lie in (0, 1)");
  }
  const Point x = c.base_p() + t * (c.base_q() - c.base_p());
  const Point u = direction_from_polar(phi);
  return {Cone(c.base_p(), x, c.dir_p(), u), Cone(x, c.base_q(), u, c.dir_q())};
}

SplitResult split_cone(const Cone& c, double t, double phi) {
  if (!(t > 0.0 && t < 1.0) || !std::isfinite(phi)) {
    throw SplitRejected(SplitRejection::parameter_out_of_range, "split parameter t must lie in (0, 1)");
  }
  const ConeAngles angles = cone_angles(c);
  const Point u = direction_from_polar(phi);
  const double alpha = split_angle_at_x(c, t, phi);
  // The ray must point into the cone and both parts must keep diverging sides.
  if (!(cross(c.base_q() - c.base_p(), u) > 0.0) || !(alpha + angles.at_p > kPi) || !(alpha < angles.at_q)) {
    throw SplitRejected(SplitRejection::outside_recession_cone, "splitting ray outside the recession cone");
  }
  SplitResult parts = split_cone_unchecked(c, t, phi);
  if (!(cone_width(parts.near_p) > kMinSplitWidth) || !(cone_width(parts.near_q) > kMinSplitWidth)) {
    throw SplitRejected(SplitRejection::width_too_small, "split part has width <= 2");
  }
  return parts;
}

double cone_distance_to_origin(const Cone& c) { return distance_to_segment({0.0, 0.0}, c.base_p(), c.base_q()); }

bool cone_contains(const Cone& c, Point x, double tol) {
  const Point e = normalized(c.base_q() - c.base_p());
  return cross(e, x - c.base_p()) >= -tol && cross(c.dir_p(), x - c.base_p()) <= tol &&
         cross(c.dir_q(), x - c.base_q()) >= -tol;
}

double cone_region_distance_to_origin(const Cone& c) {
  const Point origin{0.0, 0.0};
  if (cone_contains(c, origin)) return 0.0;
  return std::min({cone_distance_to_origin(c), distance_to_half_line(origin, c.base_p(), c.dir_p()),
                   distance_to_half_line(origin, c.base_q(), c.dir_q())});
}

}  // namespace noncongruent

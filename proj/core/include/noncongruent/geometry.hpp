#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>

namespace noncongruent {

inline constexpr double kPi = std::numbers::pi;

// Guards applied by the Cone constructor.
inline constexpr double kMinBaseLength = 1e-9;
inline constexpr double kMinSideSeparation = 1e-9;  // radians
inline constexpr double kMinTriangleArea = 1e-12;

using TriangleId = std::uint64_t;
using ConeId = std::uint64_t;

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point&, const Point&) = default;
};

inline Point operator+(Point a, Point b) { return {a.x + b.x, a.y + b.y}; }
inline Point operator-(Point a, Point b) { return {a.x - b.x, a.y - b.y}; }
inline Point operator*(double s, Point a) { return {s * a.x, s * a.y}; }
inline Point operator*(Point a, double s) { return {s * a.x, s * a.y}; }

inline double dot(Point a, Point b) { return a.x * b.x + a.y * b.y; }
inline double cross(Point a, Point b) { return a.x * b.y - a.y * b.x; }
inline double norm(Point a) { return std::hypot(a.x, a.y); }
inline double distance(Point a, Point b) { return norm(b - a); }

// Signed orientation of (a, b, c): positive when counter-clockwise.
inline double orient(Point a, Point b, Point c) { return cross(b - a, c - a); }

// Unsigned angle in [0, pi] between two nonzero vectors.
inline double angle_between(Point u, Point v) { return std::atan2(std::abs(cross(u, v)), dot(u, v)); }

inline Point direction_from_polar(double phi) { return {std::cos(phi), std::sin(phi)}; }
inline double polar_angle(Point v) { return std::atan2(v.y, v.x); }

Point normalized(Point v);

// Distance from x to the closed segment [a, b].
double distance_to_segment(Point x, Point a, Point b);

// Distance from x to the half-line starting at origin with direction dir
// (dir need not be unit). Clamps at the endpoint.
double distance_to_half_line(Point x, Point origin, Point dir);

enum class Side : std::uint8_t { left = 0, right = 1 };

inline int bit_of(Side s) { return s == Side::left ? 0 : 1; }
inline const char* to_string(Side s) { return s == Side::left ? "left" : "right"; }

// Ascending triple of side lengths. Two triangles are congruent iff their
// signatures coincide.
class CongruenceSignature {
 public:
  CongruenceSignature() = default;

  // Sorts the lengths; throws GeometryError if the triangle inequality fails.
  static CongruenceSignature from_lengths(double a, double b, double c);

  const std::array<double, 3>& sides() const { return sides_; }
  double shortest() const { return sides_[0]; }
  double longest() const { return sides_[2]; }

  friend bool operator==(const CongruenceSignature&, const CongruenceSignature&) = default;

 private:
  std::array<double, 3> sides_{};
};

// L-infinity distance between two signatures.
double signature_distance(const CongruenceSignature& a, const CongruenceSignature& b);

struct Provenance {
  enum class Kind : std::uint8_t { initial, cut };

  Kind kind = Kind::initial;
  int region = 0;    // initial: angular region index 0..2
  ConeId cone = 0;   // cut: id of the cone the triangle was cut from
  Side side = Side::left;

  static Provenance initial(int region) { return {Kind::initial, region, 0, Side::left}; }
  static Provenance cut(ConeId cone, Side side) { return {Kind::cut, 0, cone, side}; }

  friend bool operator==(const Provenance&, const Provenance&) = default;
};

class Triangle {
 public:
  // Throws GeometryError if the vertices are non-finite or (nearly) collinear.
  Triangle(Point a, Point b, Point c, TriangleId id = 0, Provenance provenance = {});

  const std::array<Point, 3>& vertices() const { return vertices_; }
  const Point& operator[](std::size_t i) const { return vertices_[i]; }
  TriangleId id() const { return id_; }
  const Provenance& provenance() const { return provenance_; }

  Triangle with_id(TriangleId id) const;

  friend bool operator==(const Triangle&, const Triangle&) = default;

 private:
  std::array<Point, 3> vertices_;
  TriangleId id_ = 0;
  Provenance provenance_;
};

struct TriangleMetrics {
  double area = 0.0;
  double perimeter = 0.0;
  CongruenceSignature signature;
};

TriangleMetrics triangle_metrics(const Triangle& t);
double triangle_area(const Triangle& t);
double triangle_diameter(const Triangle& t);

// Interior angle of the triangle at vertex i.
double triangle_angle(const Triangle& t, std::size_t i);

// Signature distance; invariant under isometries and vertex reordering.
double congruence_distance(const Triangle& a, const Triangle& b);

// Unbounded convex region bounded by the base segment [base_p, base_q] and
// two half-lines leaving base_p along dir_p and base_q along dir_q. The
// region lies to the left of the directed base p -> q, so "left" below means
// the side at base_p and "right" the side at base_q.
//
// The constructor enforces a nondegenerate base, unit non-parallel side
// directions, and both sides pointing into the left half-plane of the base.
// It does not require the sides to diverge; see diverges().
class Cone {
 public:
  Cone(Point base_p, Point base_q, Point dir_p, Point dir_q, ConeId id = 0);

  const Point& base_p() const { return base_p_; }
  const Point& base_q() const { return base_q_; }
  const Point& dir_p() const { return dir_p_; }
  const Point& dir_q() const { return dir_q_; }
  ConeId id() const { return id_; }

  double base_length() const { return distance(base_p_, base_q_); }
  const Point& base(Side s) const { return s == Side::left ? base_p_ : base_q_; }
  const Point& dir(Side s) const { return s == Side::left ? dir_p_ : dir_q_; }

  // Angle sum exceeds pi, i.e. the side half-lines never meet.
  bool diverges() const;

  Cone with_id(ConeId id) const;

  friend bool operator==(const Cone&, const Cone&) = default;

 private:
  Point base_p_;
  Point base_q_;
  Point dir_p_;
  Point dir_q_;
  ConeId id_ = 0;
};

struct ConeAngles {
  double at_p = 0.0;
  double at_q = 0.0;

  double sum() const { return at_p + at_q; }
  double at(Side s) const { return s == Side::left ? at_p : at_q; }
};

ConeAngles cone_angles(const Cone& c);

// min(|pq|, dist(p, side_q), dist(q, side_p)); the minimum distance between
// the two side half-lines whenever the cone diverges.
double cone_width(const Cone& c);

// Smaller angle wins; ties go left.
Side choose_cut_side(const Cone& c);

struct CutResult {
  Triangle triangle;
  Cone remainder;
};

// Cuts the unit-area triangle spanned by the base and a point on the chosen
// side. The remainder keeps the orientation convention: for a left cut its
// base runs r -> q, for a right cut p -> r.
CutResult cut_triangle(const Cone& c, Side side);

// Distance along the chosen side at which the unit-area cut places its apex.
double cut_apex_offset(const Cone& c, Side side);

struct SplitResult {
  Cone near_p;  // base p -> x, sides dir_p and the splitting ray
  Cone near_q;  // base x -> q, sides the splitting ray and dir_q
};

enum class SplitRejection : std::uint8_t { parameter_out_of_range, outside_recession_cone, width_too_small };

class SplitRejected : public GeometryError {
 public:
  SplitRejected(SplitRejection reason, const std::string& what) : GeometryError(what), reason_(reason) {}
  SplitRejection reason() const { return reason_; }

 private:
  SplitRejection reason_;
};

inline constexpr double kMinSplitWidth = 2.0;

// Splits along the ray leaving x = p + t (q - p) at polar angle phi. Throws
// SplitRejected unless t is in (0, 1), the ray lies strictly inside the
// recession cone of c, and both parts have width > kMinSplitWidth.
SplitResult split_cone(const Cone& c, double t, double phi);

// Same construction without the recession-cone and width checks. Used for
// limit studies where one part degenerates; still throws if t is outside
// (0, 1) or a part would be geometrically degenerate.
SplitResult split_cone_unchecked(const Cone& c, double t, double phi);

// Angle at x of the p-side part for a splitting ray at polar angle phi.
double split_angle_at_x(const Cone& c, double t, double phi);

// Polar angle of the ray leaving the base at angle alpha, measured from the
// direction x -> p toward the interior.
double split_direction(const Cone& c, double alpha);

// Distance from the origin to the base segment; the priority key for the
// closest-cone rule.
double cone_distance_to_origin(const Cone& c);

// Distance from the origin to the whole cone region (base and both sides, or
// zero if the origin lies inside).
double cone_region_distance_to_origin(const Cone& c);

// True if x lies in the closed cone region (with tolerance tol).
bool cone_contains(const Cone& c, Point x, double tol = 0.0);

}  // namespace noncongruent

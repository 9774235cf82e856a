#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "noncongruent/geometry.hpp"
#include "noncongruent/random.hpp"

namespace noncongruent {

// Finite sequence of cut choices, 0 = left, 1 = right. At most 32 bits.
class BitString {
 public:
  static constexpr std::size_t kMaxLength = 32;

  BitString() = default;

  // Parses a string of '0'/'1' characters; throws std::invalid_argument.
  static BitString parse(std::string_view text);

  std::size_t size() const { return length_; }
  bool empty() const { return length_ == 0; }
  Side operator[](std::size_t i) const { return ((bits_ >> i) & 1u) ? Side::right : Side::left; }

  BitString appended(Side s) const;

  // True if *this is an initial segment of other (equality included).
  bool is_prefix_of(const BitString& other) const;

  std::string to_string() const;

  friend bool operator==(const BitString&, const BitString&) = default;
  friend auto operator<=>(const BitString& a, const BitString& b) {
    if (auto c = a.length_ <=> b.length_; c != 0) return c;
    return a.to_string() <=> b.to_string();
  }

 private:
  std::uint32_t bits_ = 0;  // bit i is the i-th choice
  std::uint8_t length_ = 0;
};

// The triangle obtained from a cone by cutting along the given path.
struct PotentialTriangle {
  ConeId owner = 0;
  BitString path;
  Triangle triangle;
};

// All potential triangles for nonempty paths of length <= depth, ordered by
// path length and then lexicographically: 2^(depth+1) - 2 entries.
std::vector<PotentialTriangle> potential_triangles(const Cone& c, int depth);

// Follows the cut path and returns the resulting cone.
Cone cone_after_path(const Cone& c, const BitString& path);

struct TriangleRef {
  enum class Kind : std::uint8_t { realized, potential };

  Kind kind = Kind::realized;
  TriangleId triangle = 0;  // realized
  ConeId cone = 0;          // potential
  BitString path;           // potential

  static TriangleRef realized(TriangleId id) { return {Kind::realized, id, 0, {}}; }
  static TriangleRef potential(ConeId cone, BitString path) { return {Kind::potential, 0, cone, path}; }

  std::string to_string() const;

  friend bool operator==(const TriangleRef&, const TriangleRef&) = default;
  friend auto operator<=>(const TriangleRef&, const TriangleRef&) = default;
};

struct Candidate {
  TriangleRef ref;
  CongruenceSignature signature;
};

enum class ConflictKind : std::uint8_t { realized_realized, type_i, type_ii, type_iii };

const char* to_string(ConflictKind k);

struct Conflict {
  ConflictKind kind = ConflictKind::realized_realized;
  TriangleRef first;
  TriangleRef second;
  double distance = 0.0;

  friend bool operator==(const Conflict&, const Conflict&) = default;
};

struct ConflictReport {
  std::vector<Conflict> conflicts;

  bool empty() const { return conflicts.empty(); }
  std::size_t count(ConflictKind k) const;
  // Smallest conflict distance, or +inf if there are none.
  double min_distance() const;
};

// Cones created together by one split; potential pairs across them are
// classified as type (iii).
using SiblingPair = std::pair<ConeId, ConeId>;

// Flags every pair of candidates whose signatures are closer than margin,
// except potential triangles of the same cone whose paths are
// prefix-incomparable. The report is sorted and independent of input order.
ConflictReport find_conflicts(std::span<const Candidate> candidates, double margin,
                              std::span<const SiblingPair> siblings = {});

std::vector<Candidate> exclusion_candidates(std::span<const Triangle> realized, std::span<const Cone> cones,
                                            int depth);

ConflictReport exclusion_check(std::span<const Triangle> realized, std::span<const Cone> cones, int depth,
                               double margin, std::span<const SiblingPair> siblings = {});

class SamplingError : public std::runtime_error {
 public:
  SamplingError(const std::string& what, int attempts, double best_margin, ConflictReport last_report = {})
      : std::runtime_error(what), attempts_(attempts), best_margin_(best_margin), last_report_(std::move(last_report)) {}

  int attempts() const { return attempts_; }
  double best_margin() const { return best_margin_; }
  const ConflictReport& last_report() const { return last_report_; }

 private:
  int attempts_;
  double best_margin_;
  ConflictReport last_report_;
};

// Step 0 geometry: three half-lines from the origin at polar angles
// pi/2 + 2 pi k / 3 and, in region k, the apex-at-origin triangle whose leg on
// the counter-clockwise side has length legs[k].
struct InitialConfiguration {
  std::array<Triangle, 3> triangles;
  std::array<Cone, 3> cones;
};

inline constexpr double kApexAngle = 2.0 * kPi / 3.0;
inline constexpr double kMinTriangleAngle = kPi / 12.0;

double initial_ray_angle(int k);

// Product of the two legs of a unit-area triangle with apex angle 2 pi / 3.
double initial_leg_product();

struct LegInterval {
  double lo = 0.0;
  double hi = 0.0;
};

// Legs for which all three angles are at least pi/12.
LegInterval feasible_leg_interval();

// Throws GeometryError if a leg lies outside the feasible interval.
InitialConfiguration initial_configuration(const std::array<double, 3>& legs);

ConflictReport check_initial_legs(const std::array<double, 3>& legs, int depth, double margin);

struct InitialSample {
  std::array<double, 3> legs{};
  int attempts = 0;
};

// Draws leg triples uniformly from the feasible interval until the initial
// tiling passes the exclusion check. Throws SamplingError after max_attempts.
InitialSample sample_generic_initial(Rng& rng, int depth, double margin, int max_attempts);

struct SplitContext {
  std::span<const Triangle> realized;
  std::span<const Cone> other_cones;
};

struct SplitChoice {
  double t = 0.0;
  double phi = 0.0;
  SplitResult parts;
  int attempts = 0;         // exclusion-check evaluations
  long geometric_draws = 0; // (t, phi) draws including width/recession rejections
};

inline constexpr double kSplitThresholdWidth = 4.0;
inline constexpr long kMaxGeometricDraws = 200000;

// Axis-aligned box in (t, alpha) containing every permissible split, where
// alpha is the angle at x between x -> p and the splitting ray. Derived from
// width(part) <= base length, the sine bounds on the side distances and the
// recession-cone limits. Empty when lo >= hi on either axis.
struct SplitBox {
  double t_lo = 0.0;
  double t_hi = 0.0;
  double alpha_lo = 0.0;
  double alpha_hi = 0.0;

  bool empty() const { return !(t_lo < t_hi) || !(alpha_lo < alpha_hi); }
};

SplitBox split_parameter_box(const Cone& c);

// Draws (t, phi) uniformly over the permissible region (t in (0,1), ray in the
// recession cone, both widths > 2) by rejection from split_parameter_box, and
// accepts the first draw for which the exclusion check of the post-split
// configuration reports no conflict involving a potential triangle of the new
// parts. The two parts receive new_ids. Throws SamplingError if no permissible draw is found or the
// attempts run out.
SplitChoice sample_generic_split(const Cone& c, const SplitContext& context, Rng& rng, int depth, double margin,
                                 int max_attempts, std::array<ConeId, 2> new_ids);

}  // namespace noncongruent

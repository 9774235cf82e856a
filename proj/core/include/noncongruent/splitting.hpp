#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "noncongruent/genericity.hpp"
#include "noncongruent/geometry.hpp"
#include "noncongruent/random.hpp"

namespace noncongruent {

struct RunParams {
  std::uint64_t seed = 42;
  double radius = 30.0;
  long max_steps = 1'000'000;
  int depth = 4;
  double margin = 1e-6;
  double tol = 1e-9;
  int max_attempts = 64;

  // Throws std::invalid_argument unless radius > 0, depth >= 1,
  // 0 < tol < margin, max_steps >= 0 and max_attempts >= 1.
  void validate() const;

  friend bool operator==(const RunParams&, const RunParams&) = default;
};

struct Event {
  enum class Kind : std::uint8_t { init, cut, split };

  Kind kind = Kind::init;
  long step = 0;  // 0 for init, otherwise the 1-based step number
  int attempts = 0;

  // init
  std::array<double, 3> legs{};

  // cut and split: the processed cone and its width
  ConeId cone = 0;
  double width = 0.0;

  // cut
  Side side = Side::left;
  TriangleId triangle = 0;
  ConeId remainder = 0;

  // split
  double t = 0.0;
  double phi = 0.0;
  std::array<ConeId, 2> parts{};

  friend bool operator==(const Event&, const Event&) = default;
};

const char* to_string(Event::Kind k);

enum class RunOutcome : std::uint8_t { covered, step_budget_exhausted };

const char* to_string(RunOutcome o);

// Finitely many triangles and live cones that jointly tile the plane. Cones
// are ordered by (distance of the base to the origin, id).
class TilingState {
 public:
  // Assembles a state from explicit parts, for tests and imported data. Ids
  // are kept; new ids continue after the largest ones present.
  static TilingState from_parts(RunParams params, std::vector<Triangle> triangles, std::vector<Cone> cones);

  const RunParams& params() const { return params_; }
  const std::vector<Triangle>& triangles() const { return triangles_; }
  const std::vector<Event>& events() const { return events_; }
  long step_count() const { return step_count_; }
  std::size_t cone_count() const { return cones_.size(); }
  bool has_cone(ConeId id) const { return cones_.contains(id); }
  const Cone& cone(ConeId id) const;

  // Live cones in priority order.
  std::vector<Cone> cones() const;

  const Rng& rng() const { return rng_; }

  friend bool operator==(const TilingState&, const TilingState&) = default;

 private:
  TilingState(RunParams params) : params_(params), rng_(params.seed) {}

  void insert_cone(const Cone& c);
  void erase_cone(ConeId id);
  TriangleId take_triangle_id() { return next_triangle_id_++; }
  ConeId take_cone_id() { return next_cone_id_++; }

  RunParams params_;
  std::vector<Triangle> triangles_;
  std::map<ConeId, Cone> cones_;
  std::set<std::pair<double, ConeId>> queue_;
  long step_count_ = 0;
  Rng rng_;
  std::vector<Event> events_;
  TriangleId next_triangle_id_ = 0;
  ConeId next_cone_id_ = 0;

  friend TilingState init_tiling(const RunParams& params);
  friend const Cone& next_cone(const TilingState& state);
  friend void step(TilingState& state);
  friend bool disk_cleared(const TilingState& state, double radius);
};

// Step 0: three regions of angle 2 pi / 3, each holding one unit-area triangle
// with apex at the origin and one cone. Leg lengths are sampled generically.
TilingState init_tiling(const RunParams& params);

// The cone whose base is closest to the origin; ties by smaller id.
// Throws std::logic_error if there are no cones.
const Cone& next_cone(const TilingState& state);

// Processes next_cone: split it if its width exceeds 4, otherwise cut the
// unit-area triangle on its smaller-angle side.
void step(TilingState& state);

// Steps until every cone region lies farther than params.radius from the
// origin, or the step budget is spent.
RunOutcome run(TilingState& state);

// True once every live cone region is farther than radius from the origin.
bool disk_cleared(const TilingState& state, double radius);

}  // namespace noncongruent

#include "noncongruent/splitting.hpp"

#include <algorithm>
#include <stdexcept>

namespace noncongruent {

void RunParams::validate() const {
  if (!(radius > 0.0)) throw std::invalid_argument("radius must be positive");
  if (depth < 1) throw std::invalid_argument("depth must be at least 1");
  if (!(tol > 0.0) || !(tol < margin)) throw std::invalid_argument("need 0 < tol < margin");
  if (max_steps < 0) throw std::invalid_argument("max_steps must be non-negative");
  if (max_attempts < 1) throw std::invalid_argument("max_attempts must be at least 1");
}

const char* to_string(Event::Kind k) {
  switch (k) {
    case Event::Kind::init: return "init";
    case Event::Kind::cut: return "cut";
    case Event::Kind::split: return "split";
  }
  return "unknown";
}

const char* to_string(RunOutcome o) {
  return o == RunOutcome::covered ? "covered" : "step_budget_exhausted";
}

TilingState TilingState::from_parts(RunParams params, std::vector<Triangle> triangles, std::vector<Cone> cones) {
  TilingState state(params);
  state.triangles_ = std::move(triangles);
  for (const Triangle& t : state.triangles_) state.next_triangle_id_ = std::max(state.next_triangle_id_, t.id() + 1);
  for (const Cone& c : cones) {
    if (state.cones_.contains(c.id())) throw std::invalid_argument("duplicate cone id " + std::to_string(c.id()));
    state.insert_cone(c);
    state.next_cone_id_ = std::max(state.next_cone_id_, c.id() + 1);
  }
  return state;
}

const Cone& TilingState::cone(ConeId id) const {
  auto it = cones_.find(id);
  if (it == cones_.end()) throw std::out_of_range("no live cone with id " + std::to_string(id));
  return it->second;
}

std::vector<Cone> TilingState::cones() const {
  std::vector<Cone> out;
  out.reserve(queue_.size());
  for (const auto& [key, id] : queue_) out.push_back(cones_.at(id));
  return out;
}

void TilingState::insert_cone(const Cone& c) {
  cones_.emplace(c.id(), c);
  queue_.emplace(cone_distance_to_origin(c), c.id());
}

void TilingState::erase_cone(ConeId id) {
  const Cone& c = cone(id);
  queue_.erase({cone_distance_to_origin(c), id});
  cones_.erase(id);
}

TilingState init_tiling(const RunParams& params) {
  params.validate();
  TilingState state(params);
  const InitialSample sample = sample_generic_initial(state.rng_, params.depth, params.margin, params.max_attempts);
  const InitialConfiguration init = initial_configuration(sample.legs);
  for (const Triangle& t : init.triangles) state.triangles_.push_back(t.with_id(state.take_triangle_id()));
  for (const Cone& c : init.cones) state.insert_cone(c.with_id(state.take_cone_id()));

  Event e;
  e.kind = Event::Kind::init;
  e.legs = sample.legs;
  e.attempts = sample.attempts;
  state.events_.push_back(e);
  return state;
}

const Cone& next_cone(const TilingState& state) {
  if (state.queue_.empty()) throw std::logic_error("tiling state has no cones");
  return state.cones_.at(state.queue_.begin()->second);
}

void step(TilingState& state) {
  const Cone c = next_cone(state);
  const RunParams& params = state.params_;

  Event e;
  e.step = state.step_count_ + 1;
  e.cone = c.id();
  e.width = cone_width(c);

  if (e.width > kSplitThresholdWidth) {
    std::vector<Cone> others;
    others.reserve(state.cones_.size() - 1);
    for (const auto& [id, other] : state.cones_) {
      if (id != c.id()) others.push_back(other);
    }
    const std::array<ConeId, 2> ids{state.next_cone_id_, state.next_cone_id_ + 1};
    const SplitChoice choice = sample_generic_split(c, {state.triangles_, others}, state.rng_, params.depth,
                                                    params.margin, params.max_attempts, ids);
    state.take_cone_id();
    state.take_cone_id();
    state.erase_cone(c.id());
    state.insert_cone(choice.parts.near_p);
    state.insert_cone(choice.parts.near_q);

    e.kind = Event::Kind::split;
    e.attempts = choice.attempts;
    e.t = choice.t;
    e.phi = choice.phi;
    e.parts = ids;
  } else {
    const Side side = choose_cut_side(c);
    const CutResult cut = cut_triangle(c, side);
    const Triangle t = cut.triangle.with_id(state.take_triangle_id());
    const Cone rest = cut.remainder.with_id(state.take_cone_id());
    state.erase_cone(c.id());
    state.triangles_.push_back(t);
    state.insert_cone(rest);

    e.kind = Event::Kind::cut;
    e.side = side;
    e.triangle = t.id();
    e.remainder = rest.id();
  }

  ++state.step_count_;
  state.events_.push_back(e);
}

bool disk_cleared(const TilingState& state, double radius) {
  return std::all_of(state.cones_.begin(), state.cones_.end(),
                     [radius](const auto& entry) { return cone_region_distance_to_origin(entry.second) > radius; });
}

RunOutcome run(TilingState& state) {
  const RunParams& params = state.params();
  while (!disk_cleared(state, params.radius)) {
    if (state.step_count() >= params.max_steps) return RunOutcome::step_budget_exhausted;
    step(state);
  }
  return RunOutcome::covered;
}

}  // namespace noncongruent

#include "noncongruent/genericity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>

namespace noncongruent {

BitString BitString::parse(std::string_view text) {
  if (text.size() > kMaxLength) throw std::invalid_argument("bit string longer than 32");
  BitString s;
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("bit string may only contain '0' and '1'");
    s = s.appended(ch == '0' ? Side::left : Side::right);
  }
  return s;
}

BitString BitString::appended(Side s) const {
  if (length_ >= kMaxLength) throw std::length_error("bit string longer than 32");
  BitString out = *this;
  if (s == Side::right) out.bits_ |= (1u << length_);
  ++out.length_;
  return out;
}

bool BitString::is_prefix_of(const BitString& other) const {
  if (length_ > other.length_) return false;
  if (length_ == 0) return true;
  const std::uint32_t mask = length_ == 32 ? ~0u : ((1u << length_) - 1u);
  return (bits_ & mask) == (other.bits_ & mask);
}

std::string BitString::to_string() const {
  std::string out;
  out.reserve(length_);
  for (std::size_t i = 0; i < length_; ++i) out.push_back((*this)[i] == Side::left ? '0' : '1');
  return out;
}

std::vector<PotentialTriangle> potential_triangles(const Cone& c, int depth) {
  std::vector<PotentialTriangle> out;
  if (depth < 1) return out;
  out.reserve((std::size_t{2} << depth) - 2);
  std::vector<std::pair<Cone, BitString>> level{{c, BitString{}}};
  for (int len = 1; len <= depth; ++len) {
    std::vector<std::pair<Cone, BitString>> next;
    next.reserve(level.size() * 2);
    for (const auto& [cone, path] : level) {
      for (Side s : {Side::left, Side::right}) {
        CutResult cut = cut_triangle(cone, s);
        const BitString p = path.appended(s);
        out.push_back({c.id(), p, cut.triangle});
        next.emplace_back(cut.remainder, p);
      }
    }
    level = std::move(next);
  }
  // Level order already groups by length; within a level sort lexicographically.
  std::stable_sort(out.begin(), out.end(),
                   [](const PotentialTriangle& a, const PotentialTriangle& b) { return a.path < b.path; });
  return out;
}

Cone cone_after_path(const Cone& c, const BitString& path) {
  Cone cur = c;
  for (std::size_t i = 0; i < path.size(); ++i) cur = cut_triangle(cur, path[i]).remainder.with_id(c.id());
  return cur;
}

std::string TriangleRef::to_string() const {
  if (kind == Kind::realized) return "triangle#" + std::to_string(triangle);
  return "cone#" + std::to_string(cone) + "*" + path.to_string();
}

const char* to_string(ConflictKind k) {
  switch (k) {
    case ConflictKind::realized_realized: return "realized-realized";
    case ConflictKind::type_i: return "type-i";
    case ConflictKind::type_ii: return "type-ii";
    case ConflictKind::type_iii: return "type-iii";
  }
  return "unknown";
}

std::size_t ConflictReport::count(ConflictKind k) const {
  return static_cast<std::size_t>(
      std::count_if(conflicts.begin(), conflicts.end(), [k](const Conflict& c) { return c.kind == k; }));
}

double ConflictReport::min_distance() const {
  double m = std::numeric_limits<double>::infinity();
  for (const Conflict& c : conflicts) m = std::min(m, c.distance);
  return m;
}

namespace {

bool are_siblings(ConeId a, ConeId b, std::span<const SiblingPair> siblings) {
  return std::any_of(siblings.begin(), siblings.end(), [&](const SiblingPair& s) {
    return (s.first == a && s.second == b) || (s.first == b && s.second == a);
  });
}

// Returns false for exempt pairs.
bool classify(const TriangleRef& a, const TriangleRef& b, std::span<const SiblingPair> siblings, ConflictKind& kind) {
  using K = TriangleRef::Kind;
  if (a.kind == K::realized && b.kind == K::realized) {
    kind = ConflictKind::realized_realized;
  } else if (a.kind == K::realized || b.kind == K::realized) {
    kind = ConflictKind::type_i;
  } else if (a.cone == b.cone) {
    if (!a.path.is_prefix_of(b.path) && !b.path.is_prefix_of(a.path)) return false;
    kind = ConflictKind::type_ii;
  } else {
    kind = are_siblings(a.cone, b.cone, siblings) ? ConflictKind::type_iii : ConflictKind::type_i;
  }
  return true;
}

}  // namespace

ConflictReport find_conflicts(std::span<const Candidate> candidates, double margin,
                              std::span<const SiblingPair> siblings) {
  ConflictReport report;
  if (!(margin > 0.0)) return report;

  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    const double li = candidates[i].signature.longest();
    const double lj = candidates[j].signature.longest();
    if (li != lj) return li < lj;
    return candidates[i].ref < candidates[j].ref;
  });

  for (std::size_t a = 0; a < order.size(); ++a) {
    const Candidate& x = candidates[order[a]];
    for (std::size_t b = a + 1; b < order.size(); ++b) {
      const Candidate& y = candidates[order[b]];
      if (y.signature.longest() - x.signature.longest() >= margin) break;
      const double d = signature_distance(x.signature, y.signature);
      if (!(d < margin)) continue;
      ConflictKind kind{};
      if (!classify(x.ref, y.ref, siblings, kind)) continue;
      Conflict c{kind, x.ref, y.ref, d};
      if (c.second < c.first) std::swap(c.first, c.second);
      report.conflicts.push_back(c);
    }
  }
  std::sort(report.conflicts.begin(), report.conflicts.end(), [](const Conflict& a, const Conflict& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  return report;
}

std::vector<Candidate> exclusion_candidates(std::span<const Triangle> realized, std::span<const Cone> cones,
                                            int depth) {
  std::vector<Candidate> out;
  out.reserve(realized.size() + cones.size() * ((std::size_t{2} << std::max(depth, 0)) - 2));
  for (const Triangle& t : realized) out.push_back({TriangleRef::realized(t.id()), triangle_metrics(t).signature});
  for (const Cone& c : cones) {
    for (const PotentialTriangle& p : potential_triangles(c, depth)) {
      out.push_back({TriangleRef::potential(p.owner, p.path), triangle_metrics(p.triangle).signature});
    }
  }
  return out;
}

ConflictReport exclusion_check(std::span<const Triangle> realized, std::span<const Cone> cones, int depth,
                               double margin, std::span<const SiblingPair> siblings) {
  const std::vector<Candidate> candidates = exclusion_candidates(realized, cones, depth);
  return find_conflicts(candidates, margin, siblings);
}

double initial_ray_angle(int k) { return kPi / 2.0 + 2.0 * kPi * static_cast<double>(k) / 3.0; }

double initial_leg_product() { return 2.0 / std::sin(kApexAngle); }

LegInterval feasible_leg_interval() {
  // Law of sines: the leg ratio equals the ratio of the sines of the opposite
  // base angles, which sum to pi/3 and are each at least pi/12.
  const double k = initial_leg_product();
  const double ratio = std::sin(kPi / 4.0) / std::sin(kMinTriangleAngle);
  return {std::sqrt(k / ratio), std::sqrt(k * ratio)};
}

InitialConfiguration initial_configuration(const std::array<double, 3>& legs) {
  const LegInterval range = feasible_leg_interval();
  const double k = initial_leg_product();
  const Point origin{0.0, 0.0};

  auto build = [&](int region) {
    const double leg = legs[static_cast<std::size_t>(region)];
    if (!(leg >= range.lo && leg <= range.hi)) {
      throw GeometryError("initial leg length " + std::to_string(leg) + " outside the feasible interval");
    }
    const Point ccw_dir = direction_from_polar(initial_ray_angle(region + 1));
    const Point cw_dir = direction_from_polar(initial_ray_angle(region));
    const Point ccw_vertex = leg * ccw_dir;
    const Point cw_vertex = (k / leg) * cw_dir;
    Triangle t(origin, cw_vertex, ccw_vertex, 0, Provenance::initial(region));
    Cone c(ccw_vertex, cw_vertex, ccw_dir, cw_dir);
    return std::pair{t, c};
  };

  auto [t0, c0] = build(0);
  auto [t1, c1] = build(1);
  auto [t2, c2] = build(2);
  return {{t0.with_id(0), t1.with_id(1), t2.with_id(2)}, {c0.with_id(0), c1.with_id(1), c2.with_id(2)}};
}

ConflictReport check_initial_legs(const std::array<double, 3>& legs, int depth, double margin) {
  const InitialConfiguration init = initial_configuration(legs);
  return exclusion_check(init.triangles, init.cones, depth, margin);
}

InitialSample sample_generic_initial(Rng& rng, int depth, double margin, int max_attempts) {
  const LegInterval range = feasible_leg_interval();
  double best = 0.0;
  ConflictReport last;
  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    std::array<double, 3> legs{};
    for (double& l : legs) l = rng.uniform_open(range.lo, range.hi);
    last = check_initial_legs(legs, depth, margin);
    if (last.empty()) return {legs, attempt};
    best = std::max(best, last.min_distance());
  }
  std::ostringstream os;
  os << "generic initial tiling not found after " << max_attempts << " attempts (best margin " << best << ")";
  throw SamplingError(os.str(), max_attempts, best, std::move(last));
}

SplitBox split_parameter_box(const Cone& c) {
  const double len = c.base_length();
  const ConeAngles angles = cone_angles(c);
  const double need = kMinSplitWidth;

  // width(D) <= |px| = t len, and <= t len sin(angle_p) when angle_p < pi/2.
  double t_lo = need / len;
  double t_hi = 1.0 - need / len;
  if (angles.at_p < kPi / 2.0) t_lo = std::max(t_lo, need / (len * std::sin(angles.at_p)));
  if (angles.at_q < kPi / 2.0) t_hi = std::min(t_hi, 1.0 - need / (len * std::sin(angles.at_q)));

  SplitBox box{t_lo, t_hi, kPi - angles.at_p, angles.at_q};
  if (!(t_lo < t_hi)) return box;
  // width(D) <= t len sin(alpha) for alpha < pi/2, and symmetrically for E.
  box.alpha_lo = std::max(box.alpha_lo, std::asin(std::min(1.0, need / (len * t_hi))));
  box.alpha_hi = std::min(box.alpha_hi, kPi - std::asin(std::min(1.0, need / (len * (1.0 - t_lo)))));
  return box;
}

namespace {

bool involves_cone(const TriangleRef& r, const std::array<ConeId, 2>& ids) {
  return r.kind == TriangleRef::Kind::potential && (r.cone == ids[0] || r.cone == ids[1]);
}

}  // namespace

SplitChoice sample_generic_split(const Cone& c, const SplitContext& context, Rng& rng, int depth, double margin,
                                 int max_attempts, std::array<ConeId, 2> new_ids) {
  if (!(cone_width(c) > kSplitThresholdWidth)) {
    throw std::invalid_argument("sample_generic_split requires a cone of width > 4");
  }
  const SplitBox box = split_parameter_box(c);
  if (box.empty()) {
    throw SamplingError("permissible split region of cone #" + std::to_string(c.id()) + " is empty", 0, 0.0);
  }

  std::vector<Candidate> base = exclusion_candidates(context.realized, context.other_cones, depth);
  const std::size_t base_size = base.size();
  const std::array<SiblingPair, 1> siblings{SiblingPair{new_ids[0], new_ids[1]}};

  long draws = 0;
  double best = 0.0;
  ConflictReport last;
  std::map<ConflictKind, std::size_t> blocking;

  for (int attempt = 1; attempt <= max_attempts; ++attempt) {
    double t = 0.0;
    double phi = 0.0;
    std::optional<SplitResult> parts;
    for (long local = 0; local < kMaxGeometricDraws && !parts; ++local) {
      ++draws;
      t = rng.uniform_open(box.t_lo, box.t_hi);
      phi = split_direction(c, rng.uniform_open(box.alpha_lo, box.alpha_hi));
      try {
        parts = split_cone(c, t, phi);
      } catch (const SplitRejected&) {
      }
    }
    if (!parts) {
      throw SamplingError("no permissible split found for cone #" + std::to_string(c.id()) + " after " +
                              std::to_string(kMaxGeometricDraws) + " draws",
                          attempt, best);
    }
    const Cone d = parts->near_p.with_id(new_ids[0]);
    const Cone e = parts->near_q.with_id(new_ids[1]);

    base.resize(base_size);
    for (const Cone& part : {d, e}) {
      for (const PotentialTriangle& p : potential_triangles(part, depth)) {
        base.push_back({TriangleRef::potential(p.owner, p.path), triangle_metrics(p.triangle).signature});
      }
    }
    // Conflicts among the untouched candidates cannot depend on (t, phi); a
    // cut may have exposed one at the deepest level, so only conflicts
    // involving the new parts block the draw.
    last = find_conflicts(base, margin, siblings);
    std::erase_if(last.conflicts, [&](const Conflict& cf) {
      return !involves_cone(cf.first, new_ids) && !involves_cone(cf.second, new_ids);
    });
    if (last.empty()) return {t, phi, SplitResult{d, e}, attempt, draws};
    best = std::max(best, last.min_distance());
    for (const Conflict& cf : last.conflicts) ++blocking[cf.kind];
  }

  std::ostringstream os;
  os << "generic split of cone #" << c.id() << " not found after " << max_attempts << " attempts; blocking:";
  for (const auto& [kind, n] : blocking) os << ' ' << to_string(kind) << "=" << n;
  os << " (best margin " << best << ")";
  throw SamplingError(os.str(), max_attempts, best, std::move(last));
}

}  // namespace noncongruent

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include "noncongruent/certificate.hpp"
#include "noncongruent/cli.hpp"
#include "noncongruent/genericity.hpp"
#include "noncongruent/svg.hpp"
#include "test_support.hpp"

using namespace noncongruent;

namespace {

int failures = 0;

void report(int id, const char* name, bool ok, const std::string& detail) {
  std::printf("criterion %d %-28s %s  %s\n", id, name, ok ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
  if (!ok) ++failures;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0, double d = 0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

RunParams reference_params() {
  RunParams p;
  p.seed = 42;
  p.radius = 30;
  return p;
}

AuditOptions reference_options() {
  AuditOptions o = audit_options_for(reference_params());
  o.coverage_samples = 100000;
  return o;
}

struct Reference {
  Generated generated;
  double seconds;
};

Reference reference_run() {
  const auto start = std::chrono::steady_clock::now();
  Generated g = generate(reference_params(), reference_options());
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return {std::move(g), s};
}

void criterion_1(const Reference& ref) {
  const AuditReport& a = ref.generated.audit;
  const bool ok = ref.seconds < 60.0 && ref.generated.outcome == RunOutcome::covered && a.triangle_count >= 200 &&
                  a.area_max_error <= 1e-9 && a.perimeter_max <= cut_perimeter_bound() &&
                  a.min_congruence_separation >= 1e-6;
  report(1, "reference run", ok,
         fmt("%.2fs, %.0f triangles, max|area-1| %.2e, max perimeter %.3f", ref.seconds,
             static_cast<double>(a.triangle_count), a.area_max_error, a.perimeter_max) +
             fmt(" <= %.2f, min separation %.3e", cut_perimeter_bound(), a.min_congruence_separation));
}

void criterion_2() {
  Rng rng(2024);
  int violations = 0;
  double min_angle = 10.0;
  for (int i = 0; i < 10000; ++i) {
    const Cone c = nctest::random_property_p_cone(rng, 2.0, 4.0);
    const CutResult cut = cut_triangle(c, choose_cut_side(c));
    const double angle = triangle_angle(cut.triangle, 2);
    min_angle = std::min(min_angle, angle);
    if (angle < kPi / 12 - 1e-9 || !audit_property_p(cut.remainder, 1e-9).pass) ++violations;
  }
  report(2, "cut replay", violations == 0,
         fmt("10000 cones, %.0f violations, min angle at r %.6f (pi/12 = %.6f)", violations, min_angle, kPi / 12));
}

void criterion_3() {
  Rng rng(3033);
  double worst = 0.0;
  int checked = 0;
  while (checked < 100) {
    const double a = rng.uniform_open(0.05, kPi - 0.05);
    const double b = rng.uniform_open(0.05, kPi - 0.05);
    if (a + b <= kPi + 0.01) continue;
    const Cone c = nctest::cone_from_angles(rng.uniform_open(0.5, 10), a, b, nctest::random_motion(rng));
    worst = std::max(worst, std::abs(cone_width(c) - nctest::sampled_side_distance(c)));
    ++checked;
  }
  int mismatches = 0;
  for (int i = 0; i < 1000; ++i) {
    const Cone c = nctest::cone_from_angles(rng.uniform_open(0.5, 10), rng.uniform_open(kPi / 2, kPi),
                                            rng.uniform_open(kPi / 2, kPi), nctest::random_motion(rng));
    if (cone_width(c) != c.base_length()) ++mismatches;
  }
  report(3, "width oracle", worst <= 1e-6 && mismatches == 0,
         fmt("max |width - sampled| %.2e over 100 cones; %.0f of 1000 obtuse cones differ from base", worst,
             mismatches));
}

void criterion_4() {
  std::size_t dirty_steps = 0;
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    RunParams p;
    p.seed = seed;
    TilingState s = init_tiling(p);
    for (int i = 0; i < 100; ++i) {
      step(s);
      const std::vector<Cone> cones = s.cones();
      if (!exclusion_check(s.triangles(), cones, 4, 1e-6).empty()) ++dirty_steps;
    }
  }

  const Triangle t({0, 0}, {2, 0}, {0.4, 1}, 1);
  const std::vector<Triangle> duplicated{t, t.with_id(2)};
  const ConflictReport dup = exclusion_check(duplicated, {}, 4, 1e-6);
  const bool dup_ok = dup.conflicts.size() == 1 && dup.conflicts[0].kind == ConflictKind::realized_realized;

  const auto sig = CongruenceSignature::from_lengths(1.5, 2.0, 2.5);
  const std::vector<Candidate> prefix{{TriangleRef::potential(5, BitString::parse("0")), sig},
                                      {TriangleRef::potential(5, BitString::parse("01")), sig}};
  const ConflictReport pre = find_conflicts(prefix, 1e-6);
  const bool prefix_ok = pre.conflicts.size() == 1 && pre.conflicts[0].kind == ConflictKind::type_ii;

  report(4, "exclusion maintenance", dirty_steps == 0 && dup_ok && prefix_ok,
         fmt("seeds 1..10 x 100 steps: %.0f steps with conflicts; duplicate -> ", static_cast<double>(dirty_steps)) +
             (dup.conflicts.empty() ? "none" : to_string(dup.conflicts[0].kind)) + ", prefix pair -> " +
             (pre.conflicts.empty() ? "none" : to_string(pre.conflicts[0].kind)));
}

void criterion_5(const Reference& ref) {
  const AuditReport& a = ref.generated.audit;
  const bool ok = a.overlap_pairs.empty() && a.max_overlap_area <= 1e-12 && a.coverage_samples == 100000 &&
                  a.coverage_misses == 0 && std::abs(a.coverage_radius - 29.7) < 1e-12 &&
                  a.accounting_relative_error <= 1e-6;
  report(5, "tiling validity", ok,
         fmt("max overlap %.2e, %.0f misses of 100000 in r=%.2f, accounting rel. error %.2e", a.max_overlap_area,
             static_cast<double>(a.coverage_misses), a.coverage_radius, a.accounting_relative_error));
}

void criterion_6(const Reference& ref) {
  const Reference again = reference_run();
  const std::string cert_a = serialize(ref.generated.certificate);
  const std::string cert_b = serialize(again.generated.certificate);
  const std::string svg_a = render_svg(ref.generated.certificate, 33.0);
  const std::string svg_b = render_svg(again.generated.certificate, 33.0);
  report(6, "determinism", cert_a == cert_b && svg_a == svg_b,
         fmt("certificate %.0f bytes, svg %.0f bytes", static_cast<double>(cert_a.size()),
             static_cast<double>(svg_a.size())));
}

void criterion_7() {
  long init_attempts = 0, split_attempts = 0, splits = 0;
  for (std::uint64_t seed = 0; seed < 64; ++seed) {
    RunParams p;
    p.seed = seed;
    TilingState s = init_tiling(p);
    run(s);
    for (const Event& e : s.events()) {
      if (e.kind == Event::Kind::init) init_attempts += e.attempts;
      if (e.kind == Event::Kind::split) split_attempts += e.attempts, ++splits;
    }
  }
  const double init_mean = static_cast<double>(init_attempts) / 64.0;
  const double split_mean = static_cast<double>(split_attempts) / static_cast<double>(std::max(splits, 1L));
  report(7, "genericity effectiveness", init_mean <= 5.0 && split_mean <= 5.0 && splits > 0,
         fmt("mean attempts: initial %.3f over 64 seeds, split %.3f over %.0f splits", init_mean, split_mean,
             static_cast<double>(splits)));
}

}  // namespace

int main() {
  std::optional<Reference> ref;
  try {
    ref = reference_run();
  } catch (const std::exception& e) {
    std::printf("reference run failed: %s\n", e.what());
    return 1;
  }
  criterion_1(*ref);
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5(*ref);
  criterion_6(*ref);
  criterion_7();
  std::printf("%d of 7 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}

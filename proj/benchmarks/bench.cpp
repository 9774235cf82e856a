#include <benchmark/benchmark.h>

#include "noncongruent/certificate.hpp"
#include "noncongruent/genericity.hpp"
#include "noncongruent/splitting.hpp"
#include "noncongruent/verification.hpp"

using namespace noncongruent;

namespace {

Cone sample_cone() {
  return Cone({0, 0}, {3.5, 0}, direction_from_polar(0.6 * kPi), direction_from_polar(0.45 * kPi), 1);
}

RunParams params(double radius) {
  RunParams p;
  p.radius = radius;
  return p;
}

TilingState finished(double radius) {
  TilingState s = init_tiling(params(radius));
  run(s);
  return s;
}

}  // namespace

static void BM_CutTriangle(benchmark::State& state) {
  const Cone c = sample_cone();
  for (auto _ : state) benchmark::DoNotOptimize(cut_triangle(c, choose_cut_side(c)));
}
BENCHMARK(BM_CutTriangle);

static void BM_ConeWidth(benchmark::State& state) {
  const Cone c = sample_cone();
  for (auto _ : state) benchmark::DoNotOptimize(cone_width(c));
}
BENCHMARK(BM_ConeWidth);

static void BM_PotentialTriangles(benchmark::State& state) {
  const Cone c = sample_cone();
  const int depth = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(potential_triangles(c, depth));
}
BENCHMARK(BM_PotentialTriangles)->Arg(2)->Arg(4)->Arg(6);

static void BM_ExclusionCheck(benchmark::State& state) {
  const TilingState s = finished(state.range(0));
  const std::vector<Cone> cones = s.cones();
  for (auto _ : state) benchmark::DoNotOptimize(exclusion_check(s.triangles(), cones, 4, 1e-6));
  state.counters["triangles"] = static_cast<double>(s.triangles().size());
}
BENCHMARK(BM_ExclusionCheck)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_Run(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(finished(state.range(0)));
}
BENCHMARK(BM_Run)->Arg(10)->Arg(30)->Unit(benchmark::kMillisecond);

static void BM_AuditTiling(benchmark::State& state) {
  const TilingState s = finished(30);
  AuditOptions o = audit_options_for(s.params());
  o.coverage_samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(audit_tiling(s, o));
}
BENCHMARK(BM_AuditTiling)->Arg(10000)->Arg(100000)->Unit(benchmark::kMillisecond);

static void BM_CertificateRoundTrip(benchmark::State& state) {
  const TilingState s = finished(30);
  const Certificate c = make_certificate(s, RunOutcome::covered, std::nullopt);
  for (auto _ : state) benchmark::DoNotOptimize(serialize(parse_certificate(serialize(c))));
}
BENCHMARK(BM_CertificateRoundTrip)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();

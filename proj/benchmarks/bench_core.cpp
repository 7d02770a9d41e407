#include <benchmark/benchmark.h>

#include <cmath>
#include <random>

#include "horokit/counterexample.hpp"
#include "horokit/lemma_lab.hpp"

namespace {

using namespace horokit;

void BM_dist(benchmark::State& state) {
  Point p{0.3, 1.2}, q{-4.7, 0.02};
  for (auto _ : state) {
    benchmark::DoNotOptimize(dist(p, q));
  }
}
BENCHMARK(BM_dist);

void BM_mobius_apply(benchmark::State& state) {
  Mobius m(2, 1, 1, 1);
  Point p{0.3, 1.2};
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply(m, p));
  }
}
BENCHMARK(BM_mobius_apply);

void BM_frame_dist(benchmark::State& state) {
  Frame f(Mobius::rotation(0.4) * Mobius::diagonal(1.1));
  Frame g(Mobius::unipotent(0.7) * Mobius::diagonal(-0.3));
  for (auto _ : state) {
    benchmark::DoNotOptimize(frame_dist(f, g));
  }
}
BENCHMARK(BM_frame_dist);

void BM_fundamental_relation(benchmark::State& state) {
  Frame f(Mobius::rotation(0.4) * Mobius::unipotent(0.7));
  for (auto _ : state) {
    Frame lhs = geodesic_flow(horocycle_flow(f, 1.3), 0.8);
    Frame rhs = horocycle_flow(geodesic_flow(f, 0.8), 1.3 * std::exp(0.8));
    benchmark::DoNotOptimize(frame_dist(lhs, rhs));
  }
}
BENCHMARK(BM_fundamental_relation);

void BM_build_tangent_linear(benchmark::State& state) {
  for (auto _ : state) {
    SchottkySpec spec = build({Variant::Tangent, Schedule::linear(),
                               static_cast<int>(state.range(0))});
    benchmark::DoNotOptimize(spec.pairs.size());
  }
}
BENCHMARK(BM_build_tangent_linear)->Arg(10)->Arg(50);

void BM_enumerate_orbit(benchmark::State& state) {
  SchottkySpec spec = build({Variant::Tangent, Schedule::linear(), 20});
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_orbit(spec, static_cast<int>(state.range(0))).size());
  }
}
BENCHMARK(BM_enumerate_orbit)->Arg(1)->Arg(2);

void BM_census(benchmark::State& state) {
  SchottkySpec spec = build({Variant::Tangent, Schedule::geometric(2.0), 12});
  Frame v = frame_from_endpoints(BoundaryPoint::infinity(), BoundaryPoint::real(0.0),
                                 Point{0.0, 1.0});
  for (auto _ : state) {
    benchmark::DoNotOptimize(census(spec, v, 1.0, 1.0, 2).plus_count);
  }
}
BENCHMARK(BM_census);

void BM_thin_constant(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(estimate_thin_constant(M_PI / 3.0, 1000, 42).estimate);
  }
}
BENCHMARK(BM_thin_constant);

}  // namespace

BENCHMARK_MAIN();

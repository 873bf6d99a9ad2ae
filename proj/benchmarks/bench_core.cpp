#include <benchmark/benchmark.h>

#include "hjelm/arc.hpp"
#include "hjelm/conic.hpp"
#include "hjelm/correspondence.hpp"
#include "hjelm/mub.hpp"

using namespace hjelm;

namespace {

RingPtr ring_for_order(int q, RingKind kind) {
  switch (q) {
    case 2: return Ring::make(2, 1, kind);
    case 3: return Ring::make(3, 1, kind);
    case 4: return Ring::make(2, 2, kind);
    case 5: return Ring::make(5, 1, kind);
    default: throw std::invalid_argument("unsupported order");
  }
}

void BM_GaloisRingConstruction(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto ring = ring_for_order(q, RingKind::GaloisRing);
    benchmark::DoNotOptimize(ring);
  }
}
BENCHMARK(BM_GaloisRingConstruction)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

void BM_PlaneEnumeration(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  auto ring = ring_for_order(q, RingKind::GaloisRing);
  for (auto _ : state) {
    auto plane = Plane::enumerate(ring);
    benchmark::DoNotOptimize(plane);
  }
  state.SetComplexityN(q);
}
BENCHMARK(BM_PlaneEnumeration)->Arg(2)->Arg(3)->Arg(4)->Arg(5);

void BM_ConicPointSet(benchmark::State& state) {
  auto plane = Plane::enumerate(Ring::galois(3, 1));
  auto conic = Conic::canonical(plane->ring());
  for (auto _ : state) {
    auto pts = conic_points(conic, *plane);
    benchmark::DoNotOptimize(pts);
  }
}
BENCHMARK(BM_ConicPointSet);

void BM_PropernessExactSearch(benchmark::State& state) {
  auto plane = Plane::enumerate(Ring::galois(2, 1));
  auto conic = Conic::canonical(plane->ring());
  for (auto _ : state) {
    auto verdict = is_proper(conic, *plane);
    benchmark::DoNotOptimize(verdict);
  }
}
BENCHMARK(BM_PropernessExactSearch);

void BM_ArcSearchGalois(benchmark::State& state) {
  auto plane = Plane::enumerate(Ring::galois(2, 1));
  for (auto _ : state) {
    auto result = max_arc_search(*plane);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_ArcSearchGalois);

void BM_ArcSearchDualNumbers(benchmark::State& state) {
  auto plane = Plane::enumerate(Ring::dual_numbers(2, 1));
  for (auto _ : state) {
    auto result = max_arc_search(*plane);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_ArcSearchDualNumbers);

void BM_MubBuild(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const int r = static_cast<int>(state.range(1));
  for (auto _ : state) {
    auto set = build_mub_set(p, r);
    benchmark::DoNotOptimize(set);
  }
}
BENCHMARK(BM_MubBuild)->Args({2, 3})->Args({3, 2});

void BM_Certify(benchmark::State& state) {
  auto plane = Plane::enumerate(Ring::galois(2, 2));
  auto conic = Conic::canonical(plane->ring());
  auto mubs = build_mub_set(2, 2);
  for (auto _ : state) {
    auto cert = certify(mubs, conic, *plane);
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(BM_Certify);

} // namespace

BENCHMARK_MAIN();

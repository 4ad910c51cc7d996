#include <benchmark/benchmark.h>

#include <vector>

#include "quanthelly/floating_body.hpp"
#include "quanthelly/generators.hpp"
#include "quanthelly/helly.hpp"
#include "quanthelly/piercing.hpp"
#include "quanthelly/random.hpp"

using namespace quanthelly;

namespace {

std::vector<Point> random_points(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Point> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(Point{rng.grid(0, 100, 7), rng.grid(0, 100, 7)});
  return pts;
}

Family family(GeneratorKind kind, std::size_t count, std::uint64_t seed) {
  GeneratorSpec spec;
  spec.kind = kind;
  spec.count = count;
  spec.seed = seed;
  return generate(spec);
}

void BM_ConvexHull(benchmark::State& state) {
  const auto pts = random_points(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(convex_hull(pts));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ConvexHull)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_Intersect(benchmark::State& state) {
  const auto f = family(GeneratorKind::HalfplaneBundle, static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(intersect(f.members));
}
BENCHMARK(BM_Intersect)->DenseRange(2, 10, 4);

void BM_FloatingBodyFarey(benchmark::State& state) {
  const auto sq = ConvexBody::box(Point{Scalar(0), Scalar(0)}, Point{Scalar(1), Scalar(1)});
  const auto dirs = DirectionSet::farey(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(floating_body(sq, Measure::volume(), Scalar(1, 16), dirs));
}
BENCHMARK(BM_FloatingBodyFarey)->Arg(1)->Arg(3)->Arg(7);

void BM_FractionalTransversal(benchmark::State& state) {
  const auto f = family(GeneratorKind::ClusteredVolume, static_cast<std::size_t>(state.range(0)), 3);
  const auto pool = build_pool(f, Measure::volume(), Scalar(1), Scalar(1, 4), 2);
  for (auto _ : state) benchmark::DoNotOptimize(fractional_transversal(f, pool));
}
BENCHMARK(BM_FractionalTransversal)->Arg(4)->Arg(8)->Arg(12);

void BM_PQPierceLattice(benchmark::State& state) {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::ClusteredLattice;
  spec.count = 12;
  spec.clusters = 3;
  spec.seed = 4;
  const auto f = generate(spec);
  const auto z2 = Measure::integer_lattice(2);
  for (auto _ : state) benchmark::DoNotOptimize(pq_pierce(f, 4, 2, z2, Scalar(1), Scalar(0)));
}
BENCHMARK(BM_PQPierceLattice);

void BM_HellyCheckLattice(benchmark::State& state) {
  GeneratorSpec spec;
  spec.kind = GeneratorKind::PlantedLatticeHelly;
  spec.count = static_cast<std::size_t>(state.range(0));
  spec.extent = 4;
  spec.seed = 5;
  const auto f = generate(spec);
  const auto z2 = Measure::integer_lattice(2);
  for (auto _ : state) benchmark::DoNotOptimize(helly_check(f, 4, z2, Scalar(1), Scalar(0)));
}
BENCHMARK(BM_HellyCheckLattice)->Arg(5)->Arg(8);

}  // namespace

BENCHMARK_MAIN();

// Serial reference kernels against their OpenMP counterparts on the same
// inputs. Arguments are problem sizes.

#include <benchmark/benchmark.h>

#include "nondeg/constructions.hpp"
#include "nondeg/incidence.hpp"
#include "nondeg/setsystem.hpp"
#include "nondeg/simtri.hpp"

using namespace nondeg;

namespace {

const Rational kBeta(3, 10);

struct SphereInput {
  std::vector<RationalPoint> points;
  std::vector<Sphere> spheres;
};

SphereInput sphere_input(std::size_t m) {
  SphereInput in;
  in.points = gen_random_points(m, 4, 60, Seed{1});
  in.spheres = gen_sphere_family(in.points, m / 2, Seed{2});
  return in;
}

template <typename Kernel>
void incidence_bench(benchmark::State& state, Kernel kernel) {
  const auto in = sphere_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(kernel(in.points, in.spheres));
  state.SetItemsProcessed(state.iterations() * state.range(0) * state.range(0) / 2);
}

void BM_BuildIncidenceSerial(benchmark::State& state) {
  incidence_bench(state, [](const auto& p, const auto& s) { return build_incidence_serial(p, s); });
}
void BM_BuildIncidenceParallel(benchmark::State& state) {
  incidence_bench(state, [](const auto& p, const auto& s) { return build_incidence(p, s); });
}

template <typename Kernel>
void graph_bench(benchmark::State& state, Kernel kernel) {
  const auto g = random_dense_graph(4000, static_cast<std::size_t>(state.range(0)), kBeta, Seed{3});
  for (auto _ : state) benchmark::DoNotOptimize(kernel(g.graph));
}

void BM_CheckSerial(benchmark::State& state) {
  graph_bench(state, [](const auto& g) { return check_nondegenerate_serial(g, kBeta); });
}
void BM_CheckParallel(benchmark::State& state) {
  graph_bench(state, [](const auto& g) { return check_nondegenerate(g, kBeta); });
}
void BM_PeelSerial(benchmark::State& state) {
  graph_bench(state, [](const auto& g) { return peel_certify_serial(g, kBeta); });
}
void BM_PeelParallel(benchmark::State& state) {
  graph_bench(state, [](const auto& g) { return peel_certify(g, kBeta); });
}

template <typename Kernel>
void simtri_bench(benchmark::State& state, Kernel kernel) {
  const auto pts = gen_random_points(static_cast<std::size_t>(state.range(0)), 3, 4, Seed{4});
  const TriangleShape shape(2, 1, 1);
  for (auto _ : state) benchmark::DoNotOptimize(kernel(pts, shape));
}

void BM_SimtriSerial(benchmark::State& state) {
  simtri_bench(state, [](const auto& p, const auto& s) { return count_similar_orbit_serial(p, s); });
}
void BM_SimtriParallel(benchmark::State& state) {
  simtri_bench(state, [](const auto& p, const auto& s) { return count_similar_orbit(p, s); });
}

}  // namespace

BENCHMARK(BM_BuildIncidenceSerial)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BuildIncidenceParallel)->Arg(200)->Arg(800)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckSerial)->Arg(60)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CheckParallel)->Arg(60)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PeelSerial)->Arg(60)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_PeelParallel)->Arg(60)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimtriSerial)->Arg(150)->Arg(400)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SimtriParallel)->Arg(150)->Arg(400)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

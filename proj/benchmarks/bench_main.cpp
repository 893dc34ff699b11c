#include <benchmark/benchmark.h>

#include <complex>

#include "lightcone/classify.hpp"
#include "lightcone/cmc.hpp"
#include "lightcone/mesh.hpp"

using namespace lightcone;

namespace {

void BM_EvalJet(benchmark::State& state) {
  const ExprPtr g = parse("exp(z)*(z^3+2*z)/(z+4)", ExprMode::Complex);
  Complex z(0.3, -0.4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval_jet(g, z));
    z += Complex(1e-9, 0.0);
  }
}
BENCHMARK(BM_EvalJet);

void BM_CurvatureAnalytic(benchmark::State& state) {
  const GraphFunction tau =
      GraphFunction::analytic_expr(parse("cosh(u)*cosh(v)", ExprMode::Real));
  double u = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(curvature_data(tau, u, -0.2));
    u += 1e-9;
  }
}
BENCHMARK(BM_CurvatureAnalytic);

void BM_CurvatureFiniteDifference(benchmark::State& state) {
  const ExprPtr e = parse("cosh(u)*cosh(v)", ExprMode::Real);
  const GraphFunction tau = GraphFunction::finite_difference(
      [e](double u, double v) { return eval_real(e, u, v); }, 1e-4);
  double u = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(curvature_data(tau, u, -0.2));
    u += 1e-9;
  }
}
BENCHMARK(BM_CurvatureFiniteDifference);

void BM_SynthesizedSurfaceJets(benchmark::State& state) {
  const Grid grid{-1, 1, -1, 1, 3, 3};
  const CmcSurface surf =
      cmc_negative_from_g(parse("exp(z)", ExprMode::Complex), -0.5, grid);
  double u = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(surf.graph().jets(u, -0.2));
    u += 1e-9;
  }
}
BENCHMARK(BM_SynthesizedSurfaceJets);

void BM_Classify(benchmark::State& state) {
  double a = 1.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify({a, 1.0, 0.5, -0.25}));
    a += 1e-9;
  }
}
BENCHMARK(BM_Classify);

void BM_BuildMesh(benchmark::State& state) {
  MeshSpec spec;
  spec.model = MeshModel::Ball;
  spec.grid = Grid{-2, 2, -2, 2, static_cast<int>(state.range(0)),
                   static_cast<int>(state.range(0))};
  spec.source = SourceBuiltin{BuiltinSurface::Sphere, -2.0};
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_mesh(spec));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_BuildMesh)->RangeMultiplier(2)->Range(8, 64)->Complexity();

}  // namespace

BENCHMARK_MAIN();

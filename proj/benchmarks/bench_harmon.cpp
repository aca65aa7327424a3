#include <benchmark/benchmark.h>

#include "harmon/jacobi.hpp"
#include "harmon/model_spaces.hpp"
#include "harmon/quadrature.hpp"
#include "harmon/radial_ode.hpp"
#include "harmon/trig_poly.hpp"

#include <cmath>

namespace {

using namespace harmon;

void BM_IntegrateJacobi(benchmark::State& state) {
  const ModelSpace space = parse_space("op2");
  const CurvatureField field = CurvatureField::of(space);
  const int grid = static_cast<int>(state.range(0));
  for (auto _ : state) {
    JacobiTrajectory traj = integrate_jacobi(field, M_PI - 0.1, grid);
    benchmark::DoNotOptimize(traj.J.back());
  }
  state.SetItemsProcessed(state.iterations() * grid);
}
BENCHMARK(BM_IntegrateJacobi)->Arg(129)->Arg(513);

void BM_SolvePhi(benchmark::State& state) {
  const ExponentPair pair{7, 4};  // op2
  const int k = static_cast<int>(state.range(0));
  const double lambda = spectrum(pair, k);
  for (auto _ : state) {
    PhiSolution sol = solve_phi({pair, lambda});
    benchmark::DoNotOptimize(sol.phi.values.back());
  }
}
BENCHMARK(BM_SolvePhi)->Arg(1)->Arg(8);

void BM_PhiPolynomial(benchmark::State& state) {
  const ExponentPair pair{7, 4};
  const int k = static_cast<int>(state.range(0));
  for (auto _ : state) {
    CosPolynomial p = phi_polynomial(pair, k);
    benchmark::DoNotOptimize(p.degree());
  }
}
BENCHMARK(BM_PhiPolynomial)->Arg(4)->Arg(10);

void BM_PolynomialRoots(benchmark::State& state) {
  const CosPolynomial p = phi_polynomial({7, 4}, static_cast<int>(state.range(0)));
  for (auto _ : state) {
    RootSet set = roots(p);
    benchmark::DoNotOptimize(set.residual);
  }
}
BENCHMARK(BM_PolynomialRoots)->Arg(6)->Arg(10);

void BM_GaussLegendre(benchmark::State& state) {
  const int nodes = static_cast<int>(state.range(0));
  for (auto _ : state) {
    Quadrature rule = gauss_legendre(nodes, 0.0, M_PI);
    benchmark::DoNotOptimize(rule.weights.back());
  }
}
BENCHMARK(BM_GaussLegendre)->Arg(64)->Arg(256);

void BM_ClosedFormDensity(benchmark::State& state) {
  const ModelSpace space = parse_space("qhn:3");
  double r = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(closed_form_density(space, r));
    r = r < 3.0 ? r + 1e-4 : 0.1;
  }
}
BENCHMARK(BM_ClosedFormDensity);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}

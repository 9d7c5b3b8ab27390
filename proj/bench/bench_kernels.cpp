#include <benchmark/benchmark.h>

#include <cmath>

#include "hypdef/cusp_cone.hpp"
#include "hypdef/forms.hpp"
#include "hypdef/parallel.hpp"
#include "hypdef/quadrature.hpp"
#include "hypdef/verify.hpp"

using namespace hypdef;

namespace {

Exec exec_of(const benchmark::State& state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

void label(benchmark::State& state) { state.SetLabel(state.range(0) == 0 ? "serial" : "parallel"); }

void BM_CuspNormIntegral(benchmark::State& state) {
  const CuspDeformation cd{1.0, 0.0};
  const CuspTorus torus = CuspTorus::make({0.3, 1.2});
  const int n = static_cast<int>(state.range(1));
  const GaussRule rx = gauss_legendre(n, 0.0, 1.0), rt = gauss_legendre(n, 1.0, 4.0);
  auto f = [&](double u, double v, double t) {
    const cplx w = u + v * torus.tau;
    const EForm a = cusp_form(cd, HPoint::from_w(w, t), 0);
    return norm_sq(a) * torus.tau.imag() / (t * t * t);
  };
  for (auto _ : state) benchmark::DoNotOptimize(integrate_box(rx, rx, rt, f, exec_of(state)));
  label(state);
}

void BM_WeitzenbockResiduals(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(1));
  Sampler s(1);
  std::vector<HPoint> pts;
  for (std::size_t i = 0; i < n; ++i) pts.push_back(s.point());
  auto f = [&](std::size_t i) { return weitzenbock_residual(cusp_form({1.0, 0.5}, pts[i], 3)); };
  for (auto _ : state) benchmark::DoNotOptimize(ordered_max(evaluate_indexed(n, f, exec_of(state))));
  label(state);
}

}  // namespace

BENCHMARK(BM_CuspNormIntegral)->ArgsProduct({{0, 1}, {16, 32}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeitzenbockResiduals)->ArgsProduct({{0, 1}, {256, 1024}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

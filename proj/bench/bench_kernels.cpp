#include <benchmark/benchmark.h>

#include "severi/kernels.hpp"
#include "severi/twisting.hpp"

using namespace severi;

namespace {

const SurfaceModel& model_over(long p) {
  static std::map<long, SurfaceModel> cache;
  auto it = cache.find(p);
  if (it == cache.end()) it = cache.emplace(p, surface_model(make_finite_extension(mpz_class(p), 3), p - 1)).first;
  return it->second;
}

void exhaustive(benchmark::State& state, Exec exec) {
  const ModPSystem S = to_mod_p(model_over(state.range(0)).equations);
  for (auto _ : state) benchmark::DoNotOptimize(projective_zeros(S, exec));
}

void image(benchmark::State& state, Exec exec) {
  const SurfaceModel& model = model_over(state.range(0));
  const FqArithmetic F(model.extension);
  std::vector<std::vector<int>> P;
  const Matrix& Q = *model.parametrization.post_compose;
  for (int i = 0; i < Q.rows(); ++i) {
    P.emplace_back();
    for (int j = 0; j < Q.cols(); ++j) P.back().push_back(F.encode(Q(i, j)));
  }
  for (auto _ : state) benchmark::DoNotOptimize(rational_image(F, model.parametrization.basis, P, exec));
}

}  // namespace

BENCHMARK_CAPTURE(exhaustive, serial, Exec::serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(exhaustive, openmp, Exec::openmp)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(image, serial, Exec::serial)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(image, openmp, Exec::openmp)->Arg(3)->Arg(5)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

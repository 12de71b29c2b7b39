// Serial reference kernels against their OpenMP counterparts.
#include <benchmark/benchmark.h>

#include <random>
#include <string>

#include "quatcoh/cohomology.hpp"
#include "quatcoh/metric.hpp"
#include "quatcoh/spec_io.hpp"

using namespace quatcoh;

namespace {

Exec policy(const benchmark::State& state) { return state.range(0) == 0 ? Exec::Serial : Exec::Parallel; }

Matrix random_matrix(std::size_t n, unsigned seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<long> v(-4, 4);
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) m(r, c) = GaussianRational(Rational(v(rng)), Rational(v(rng)));
  return m;
}

const Session& session(const std::string& name) {
  static const Session ex1(instantiate(load_spec(std::string(QUATCOH_DATA_DIR) + "/example1.json"), {}));
  static const Session ex3(instantiate(load_spec(std::string(QUATCOH_DATA_DIR) + "/example3.json"), {}));
  return name == "example1" ? ex1 : ex3;
}

void BM_Rref(benchmark::State& state) {
  const Matrix m = random_matrix(static_cast<std::size_t>(state.range(1)), 17);
  const Exec e = policy(state);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m, e));
  state.SetLabel(e == Exec::Serial ? "serial" : "parallel");
}

void BM_CohomologyTable(benchmark::State& state) {
  const auto& dc = session("example3").complex();
  const Exec e = policy(state);
  for (auto _ : state) benchmark::DoNotOptimize(compute_table(dc, e));
  state.SetLabel(e == Exec::Serial ? "serial" : "parallel");
}

// Example 1 admits no HKT form, so the search exhausts its budget.
void BM_MetricSearch(benchmark::State& state) {
  const auto& s = session("example1");
  const Exec e = policy(state);
  const SearchBounds b{4, 2, static_cast<std::size_t>(state.range(1))};
  for (auto _ : state) benchmark::DoNotOptimize(search_metric(s, MetricKind::HKT, b, e));
  state.SetLabel(e == Exec::Serial ? "serial" : "parallel");
}

}  // namespace

BENCHMARK(BM_Rref)->ArgsProduct({{0, 1}, {24, 48}})->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CohomologyTable)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MetricSearch)->ArgsProduct({{0, 1}, {20000}})->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

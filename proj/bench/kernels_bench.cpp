#include <benchmark/benchmark.h>

#include "invop/invariance.hpp"
#include "invop/operator_spec.hpp"
#include "invop/sampling.hpp"

namespace {

using namespace invop;

const DiffOperator& d2() {
  static DiffOperator d = build_operator("D:j=2", 2, 2);
  return d;
}

const DiffOperator& delta() {
  static DiffOperator d = build_operator("Delta:p=1,q=2", 2, 2);
  return d;
}

void bm_compose(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(compose(d2(), delta()));
}

void bm_compose_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(compose_serial(d2(), delta()));
}

const ActionMap& action() {
  static ActionMap a = [] {
    Sampler s(0);
    return ActionMap(s.group_element(2, 1));
  }();
  return a;
}

const DiffOperator& psi() {
  static DiffOperator d = build_operator("Psi:p=1,q=1", 2, 1);
  return d;
}

void bm_invariance(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(invariance_check(psi(), action(), static_cast<std::uint32_t>(state.range(0))));
}

void bm_invariance_reference(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(invariance_check_reference(psi(), action(), static_cast<std::uint32_t>(state.range(0))));
}

}  // namespace

BENCHMARK(bm_compose)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_compose_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_invariance)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(bm_invariance_reference)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

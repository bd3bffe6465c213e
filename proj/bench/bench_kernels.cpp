// Serial references against the OpenMP kernels.

#include <random>

#include <benchmark/benchmark.h>

#include "tlrep/fibonacci.hpp"
#include "tlrep/kernels.hpp"
#include "tlrep/verify.hpp"

namespace {

using namespace tlrep;

BraidWord random_word(int strands, int length) {
  std::mt19937_64 rng(42);
  std::uniform_int_distribution<int> letter(1, strands - 1);
  std::bernoulli_distribution flip;
  std::vector<int> letters;
  for (int t = 0; t < length; ++t) letters.push_back(flip(rng) ? letter(rng) : -letter(rng));
  return {strands, letters};
}

StateVector random_state(std::size_t dim) {
  std::mt19937_64 rng(7);
  std::normal_distribution<double> normal;
  StateVector psi(dim);
  for (auto& z : psi) z = Complex(normal(rng), normal(rng));
  return psi.normalized();
}

template <bool Parallel>
void BM_ApplyWord(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BraidRepresentation rep(fibonacci::space(n));
  const BraidWord w = random_word(n, 50);
  const StateVector psi = random_state(rep.dim());
  for (auto _ : state) {
    StateVector out = Parallel ? kernels::apply_word_parallel(rep, w, psi)
                               : kernels::apply_word_serial(rep, w, psi);
    benchmark::DoNotOptimize(out.data());
  }
  state.counters["dim"] = static_cast<double>(rep.dim());
}

template <bool Parallel>
void BM_Compile(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const BraidRepresentation rep(fibonacci::space(n));
  const BraidWord w = random_word(n, 20);
  for (auto _ : state) {
    UnitaryMatrix u = Parallel ? kernels::compile_parallel(rep, w)
                               : kernels::compile_reference(rep, w);
    benchmark::DoNotOptimize(u.data());
  }
  state.counters["dim"] = static_cast<double>(rep.dim());
}

template <bool Parallel>
void BM_Density(benchmark::State& state) {
  const auto targets = random_su2_targets(20, 1);
  const int length = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto res = Parallel ? density_probe(length, targets) : density_probe_serial(length, targets);
    benchmark::DoNotOptimize(res.data());
  }
}

}  // namespace

BENCHMARK(BM_ApplyWord<false>)->Name("apply_serial")->Arg(12)->Arg(18)->Arg(22);
BENCHMARK(BM_ApplyWord<true>)->Name("apply_parallel")->Arg(12)->Arg(18)->Arg(22);
BENCHMARK(BM_Compile<false>)->Name("compile_reference")->Arg(8)->Arg(11)->Arg(13);
BENCHMARK(BM_Compile<true>)->Name("compile_parallel")->Arg(8)->Arg(11)->Arg(13);
BENCHMARK(BM_Density<false>)->Name("density_serial")->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Density<true>)->Name("density_parallel")->Arg(8)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "separ/analysis/characteristic.hpp"
#include "separ/analysis/differential.hpp"
#include "separ/analysis/statistics.hpp"
#include "separ/cipher.hpp"

using namespace separ;
using namespace separ::analysis;

namespace {

const std::vector<Word> &chain_table() {
  static const std::vector<Word> t = [] {
    SubkeySet sk{1, {}};
    std::mt19937 rng(1);
    for (auto &k : sk.k) k = static_cast<Word>(rng());
    return b16_chain_table(sk, 4);
  }();
  return t;
}

std::vector<Word> input_subset(std::size_t n) {
  std::vector<Word> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<Word>(1 + i * 61);
  return v;
}

const std::vector<std::uint8_t> &sample() {
  static const std::vector<std::uint8_t> s = keystream(Separ(MasterKey{}), Nonce{}, 500000);
  return s;
}

void BM_DiffMaxSerial(benchmark::State &state) {
  chain_table();
  const auto inputs = input_subset(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(diff_max_serial(chain_table(), inputs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_DiffMaxParallel(benchmark::State &state) {
  chain_table();
  const auto inputs = input_subset(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(diff_max_parallel(chain_table(), inputs));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_BoundsSerial(benchmark::State &state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(remaining_weight_bounds_serial(static_cast<int>(state.range(0)), std::nullopt, 20.0));
  }
}

void BM_BoundsParallel(benchmark::State &state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(remaining_weight_bounds_parallel(static_cast<int>(state.range(0)), std::nullopt, 20.0));
  }
}

void BM_AutocorrelationSerial(benchmark::State &state) {
  sample();
  for (auto _ : state) benchmark::DoNotOptimize(autocorrelation_serial(sample(), static_cast<std::size_t>(state.range(0))));
}

void BM_AutocorrelationParallel(benchmark::State &state) {
  sample();
  for (auto _ : state) {
    benchmark::DoNotOptimize(autocorrelation_parallel(sample(), static_cast<std::size_t>(state.range(0))));
  }
}

void BM_EncryptWord(benchmark::State &state) {
  const Separ c(MasterKey{});
  CipherState st = c.initialize(Nonce{});
  Word w = 0;
  for (auto _ : state) {
    w = c.encrypt_word(st, w);
    benchmark::DoNotOptimize(w);
  }
  state.SetBytesProcessed(state.iterations() * 2);
}

}  // namespace

BENCHMARK(BM_DiffMaxSerial)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_DiffMaxParallel)->Arg(256)->Arg(1024)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BoundsSerial)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BoundsParallel)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_AutocorrelationSerial)->Arg(64)->Arg(1024)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_AutocorrelationParallel)->Arg(64)->Arg(1024)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_EncryptWord);

BENCHMARK_MAIN();

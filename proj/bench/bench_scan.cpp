// Serial vs OpenMP scan, and seed-count scaling of the matcher.

#include <benchmark/benchmark.h>

#include <random>

#include "corpus.hpp"
#include "oracles.hpp"
#include "paths.hpp"
#include "squatscope/kernels.hpp"
#include "squatscope/scan.hpp"

using namespace squatscope;

namespace {

const SuffixList& psl() {
  static const SuffixList list = SuffixList::from_file(testpaths::data("public_suffix_list.dat"));
  return list;
}

const std::vector<std::string>& trademarks() {
  static const auto tms = [] {
    std::mt19937_64 rng(1);
    return corpus::random_trademarks(rng, 1000, 5, 10);
  }();
  return tms;
}

const std::vector<DnsObservation>& records() {
  static const auto recs = [] {
    corpus::CorpusSpec spec;
    spec.records = 200'000;
    const std::vector<std::string> tms(trademarks().begin(), trademarks().begin() + 250);
    return corpus::make_records(spec, tms, Keyboard::qwerty());
  }();
  return recs;
}

void set_items(benchmark::State& state) {
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * records().size()));
}

void BM_ScanSerial(benchmark::State& state) {
  const std::vector<std::string> tms(trademarks().begin(), trademarks().begin() + state.range(0));
  const SquatMatcher m(tms, Keyboard::qwerty());
  for (auto _ : state) {
    std::vector<ScanHit> hits;
    benchmark::DoNotOptimize(scan_stream(records(), {psl(), m, {}}, hits));
  }
  set_items(state);
}
BENCHMARK(BM_ScanSerial)->Arg(125)->Arg(250)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

void BM_ScanParallel(benchmark::State& state) {
  const std::vector<std::string> tms(trademarks().begin(), trademarks().begin() + 250);
  const SquatMatcher m(tms, Keyboard::qwerty());
  for (auto _ : state) {
    std::vector<ScanHit> hits;
    benchmark::DoNotOptimize(
        scan_parallel(records(), {psl(), m, {}}, hits, static_cast<std::size_t>(state.range(0))));
  }
  set_items(state);
}
BENCHMARK(BM_ScanParallel)->Arg(1)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

// Per-trademark classify loop, for contrast with the automaton.
void BM_NaiveLoop(benchmark::State& state) {
  const std::vector<std::string> tms(trademarks().begin(), trademarks().begin() + state.range(0));
  const std::span<const DnsObservation> sample(records().data(), 20'000);
  const auto kb = Keyboard::qwerty();
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle::naive_scan(sample, psl(), tms, kb, {}));
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * sample.size()));
}
BENCHMARK(BM_NaiveLoop)->Arg(125)->Arg(250)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "onerel/onerel.hpp"

using namespace onerel;

namespace {

  Word power_word(Presentation const& p, std::string const& s, std::size_t n) {
    return pow(parse_word(s, p.alphabet()), n);
  }

  void BM_SofCode(benchmark::State& state) {
    auto p = parse_presentation("a,b,c,d | a = b");
    Word w = power_word(p, "abcabdab", static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(sof_code(w));
    }
    state.SetComplexityN(state.range(0));
  }
  BENCHMARK(BM_SofCode)->RangeMultiplier(2)->Range(1, 64)->Complexity();

  void BM_StrongEncode(benchmark::State& state) {
    auto sc = strong_compress(parse_presentation("a,b | abaababb = abbaabb"));
    Word w  = power_word(sc->source(), "abbab", static_cast<std::size_t>(state.range(0)));
    for (auto _ : state) {
      benchmark::DoNotOptimize(sc->encode(w));
    }
    state.SetComplexityN(state.range(0));
  }
  BENCHMARK(BM_StrongEncode)->RangeMultiplier(4)->Range(1, 256)->Complexity();

  void BM_ReducePipeline(benchmark::State& state) {
    auto p = parse_presentation("a,b,c,d | abdadadacbaca = abdadabdaca");
    for (auto _ : state) {
      benchmark::DoNotOptimize(reduce_to_canonical(p));
    }
  }
  BENCHMARK(BM_ReducePipeline);

  void BM_Classify(benchmark::State& state) {
    auto p = parse_presentation("a,b | abaababb = abbaabb");
    for (auto _ : state) {
      benchmark::DoNotOptimize(classify(p));
    }
  }
  BENCHMARK(BM_Classify);

  void BM_CollatzRun(benchmark::State& state) {
    auto p = parse_presentation("a,b | aabbaab = a");
    auto s = build_system(p);
    Word x = parse_word("aaabb", p.alphabet());
    Word y = parse_word("a", p.alphabet());
    for (auto _ : state) {
      benchmark::DoNotOptimize(run_trace(s, x, y));
    }
  }
  BENCHMARK(BM_CollatzRun);

}  // namespace

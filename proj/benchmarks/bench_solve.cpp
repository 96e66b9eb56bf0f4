#include <benchmark/benchmark.h>

#include "dispatch.hpp"

using namespace onerel;

namespace {

  class Solve : public benchmark::Fixture {
   public:
    void SetUp(benchmark::State const&) override {
      p = parse_presentation("a,b | baababa = aba");
      u = parse_word("abbaaababab", p.alphabet());
      v = parse_word("baabababaababababab", p.alphabet());
    }

    Presentation p;
    Word         u;
    Word         v;
  };

  BENCHMARK_F(Solve, HeadReplacement)(benchmark::State& state) {
    for (auto _ : state) {
      benchmark::DoNotOptimize(adian_divisibility(u, Letter("b"), p));
    }
  }

  BENCHMARK_F(Solve, LeftCycleFreeWordProblem)(benchmark::State& state) {
    for (auto _ : state) {
      benchmark::DoNotOptimize(solve_left_cycle_free(u, v, p));
    }
  }

  BENCHMARK_F(Solve, BidirectionalSearch)(benchmark::State& state) {
    for (auto _ : state) {
      benchmark::DoNotOptimize(bfs_decide(u, v, p));
    }
  }

  void BM_DispatchCompressed(benchmark::State& state) {
    auto p = parse_presentation("a,b,c,d | abdadadacbaca = abdadabdaca");
    for (auto _ : state) {
      benchmark::DoNotOptimize(cli::dispatch_solve(p, p.lhs(), p.rhs()));
    }
  }
  BENCHMARK(BM_DispatchCompressed);

  void BM_EqualLength(benchmark::State& state) {
    auto p = parse_presentation("a,b | ab = ba");
    auto n = static_cast<std::size_t>(state.range(0));
    Word u = pow(parse_word("a", p.alphabet()), n) + pow(parse_word("b", p.alphabet()), n);
    Word v = pow(parse_word("b", p.alphabet()), n) + pow(parse_word("a", p.alphabet()), n);
    for (auto _ : state) {
      benchmark::DoNotOptimize(equal_length_decide(u, v, p));
    }
  }
  BENCHMARK(BM_EqualLength)->DenseRange(2, 6, 2);

}  // namespace

#include <benchmark/benchmark.h>

#include "landin/instances.hpp"
#include "landin/serialize.hpp"
#include "landin/spec_text.hpp"

using namespace landin;

namespace {

std::vector<PrefixLanguage> running_parts(int depth) {
  Rng rng(1234);
  return {random_language(rng, symbols_of_chars("ab"), depth, 30),
          random_language(rng, symbols_of_chars("bc"), depth, 30),
          random_language(rng, symbols_of_chars("ac"), depth, 30)};
}

void bm_compose_parallel(benchmark::State& state) {
  int depth = static_cast<int>(state.range(0));
  std::vector<PrefixLanguage> parts = running_parts(depth);
  for (auto _ : state) benchmark::DoNotOptimize(compose_parallel(parts, depth));
}
BENCHMARK(bm_compose_parallel)->Arg(4)->Arg(6);

void bm_vfs_saturated(benchmark::State& state) {
  std::vector<PrefixLanguage> parts = running_parts(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(vfs_saturated(parts));
}
BENCHMARK(bm_vfs_saturated)->Arg(4)->Arg(6);

void bm_closure_of_product(benchmark::State& state) {
  std::vector<PrefixLanguage> parts = running_parts(static_cast<int>(state.range(0)));
  SymbolSet sigma = symbols_of_chars("abc");
  std::vector<PartialAlgebra> factors;
  for (const PrefixLanguage& p : parts) factors.push_back(f_of_language(p, sigma));
  for (auto _ : state) benchmark::DoNotOptimize(algebraic_closure(direct_product(factors)));
}
BENCHMARK(bm_closure_of_product)->Arg(4)->Arg(6);

void bm_normal_form(benchmark::State& state) {
  AlphabetVector av({symbols_of_chars("ab"), symbols_of_chars("bc"), symbols_of_chars("ac")});
  std::vector<VectorOp> ops = av.vops();
  Rng rng(99);
  std::vector<VectorOp> word;
  for (int i = 0; i < 8; ++i) word.push_back(ops[rng.below(ops.size())]);
  for (auto _ : state) benchmark::DoNotOptimize(normal_form(word));
}
BENCHMARK(bm_normal_form);

void bm_commutation_class(benchmark::State& state) {
  AlphabetVector av({symbols_of_chars("a"), symbols_of_chars("b"), symbols_of_chars("c")});
  std::vector<VectorOp> ops = av.vops();
  std::vector<VectorOp> word;
  for (int i = 0; i < 8; ++i) word.push_back(ops[static_cast<size_t>(i) % 3]);
  for (auto _ : state) benchmark::DoNotOptimize(commutation_class(word));
}
BENCHMARK(bm_commutation_class);

void bm_charth_check(benchmark::State& state) {
  Rng rng(7);
  GenParams params;
  int depth = 0;
  CheckInstance inst = random_instance(rng, params, CheckId::charth, depth);
  for (auto _ : state) benchmark::DoNotOptimize(run_check(CheckId::charth, inst, depth));
}
BENCHMARK(bm_charth_check);

void bm_parse_spec(benchmark::State& state) {
  std::string text =
      "process P1 { alphabet: a, b; kind: path; expr: (a ; b)*; depth: 6; }\n"
      "process P2 { alphabet: b, c; kind: path; expr: (b ; c)*; depth: 6; }\n";
  for (auto _ : state) benchmark::DoNotOptimize(parse_spec(text));
}
BENCHMARK(bm_parse_spec);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "tjl/builder.hpp"
#include "tjl/decide.hpp"
#include "tjl/model.hpp"

using namespace tjl;

namespace {

const char* kMediumFormula =
    "(G (p -> X q) & [x]_1 (p -> q) & ~[x+y]_1 (p -> q)) -> (p U q) S Yw p";

MkModel bench_model() {
  MkModel m;
  m.profile = named_profile("lpltl-int");
  m.profile.agent_count = 2;
  m.states = {"s0", "s1", "s2"};
  m.run.prefix = {"s0", "s1"};
  m.run.loop = {"s2", "s1", "s0"};
  m.valuation["s0"] = {"p"};
  m.valuation["s1"] = {"p", "q"};
  m.valuation["s2"] = {"q"};
  m.evidence.push_back({"s0", 1, parse_term("x"), parse_formula("p -> q")});
  m.evidence.push_back({"s1", 1, parse_term("y"), parse_formula("p")});
  m.evidence.push_back({"s2", 2, parse_term("x"), parse_formula("q")});
  m.universe = {parse_formula("p -> q"), parse_formula("p"), parse_formula("q")};
  return m;
}

void BM_ParsePrint(benchmark::State& state) {
  for (auto _ : state) {
    Formula f = parse_formula(kMediumFormula);
    benchmark::DoNotOptimize(print_formula(f));
  }
}
BENCHMARK(BM_ParsePrint);

void BM_UntilFixpoint(benchmark::State& state) {
  Upb a({true, false, true}, {true, false, true, true});
  Upb b({false}, {false, true, false});
  for (auto _ : state) {
    benchmark::DoNotOptimize(until(a, b));
    benchmark::DoNotOptimize(since(a, b));
  }
}
BENCHMARK(BM_UntilFixpoint);

void BM_Saturate(benchmark::State& state) {
  MkModel m = bench_model();
  Formula query = parse_formula("[x*y]_1 q & G [gen(x)]_1 G (p -> q)", m.profile);
  for (auto _ : state) {
    benchmark::DoNotOptimize(saturate_evidence(m, {query}));
  }
}
BENCHMARK(BM_Saturate);

void BM_Eval(benchmark::State& state) {
  MkModel m = bench_model();
  Formula f = parse_formula("(p U q) -> [x*y]_1 q | H (q -> O p)", m.profile);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eval(m, f));
  }
}
BENCHMARK(BM_Eval);

void BM_Sat(benchmark::State& state) {
  Formula f = parse_formula("(p U q) & G (p -> X p) & ~q & [x]_1 p");
  LogicProfile base = named_profile("lpltl-p");
  for (auto _ : state) {
    benchmark::DoNotOptimize(satisfiable(f, ConstantSpec::empty(), base));
  }
}
BENCHMARK(BM_Sat);

void BM_CheckDerivation(benchmark::State& state) {
  DerivationBuilder b(named_profile("lpltl-p"), ConstantSpec::total());
  derive::box_to_next(b, parse_formula("p & q -> X p"));
  Derivation d = b.take();
  LogicProfile base = named_profile("lpltl-p");
  ConstantSpec total = ConstantSpec::total();
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_derivation(d, base, total));
  }
}
BENCHMARK(BM_CheckDerivation);

}  // namespace

BENCHMARK_MAIN();

// Serial reference kernels against their OpenMP versions on tables of a
// few thousand cosets.

#include <benchmark/benchmark.h>

#include "adorn/cosets.hpp"
#include "adorn/kernels.hpp"
#include "adorn/parse.hpp"
#include "adorn/rewriting.hpp"
#include "adorn/zoo.hpp"

namespace {

struct Fixture {
  adorn::GroupPresentation p;
  adorn::CosetTable table;
};

// Regular tables of S5 x Z/6 (720 cosets) and S5 x S4 (2880 cosets).
const Fixture& regular(int which) {
  static const auto build = [](const char* other) {
    const auto s5 = adorn::parse_presentation("< a, b | a^2, b^5, (a b)^4, (a b^-1 a b)^3 >");
    auto p = adorn::direct_product(s5, adorn::parse_presentation(other));
    auto t = adorn::todd_coxeter(p, {});
    return Fixture{p, t};
  };
  static const Fixture fixtures[] = {build("< c | c^6 >"), build("< c, d | c^2, d^3, (c d)^4 >")};
  return fixtures[which];
}

void relators_close_serial(benchmark::State& state) {
  const auto& f = regular(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(adorn::kernels::relators_close_serial(f.table, f.p.relators()));
  state.counters["cosets"] = static_cast<double>(f.table.n_cosets());
}

void relators_close_parallel(benchmark::State& state) {
  const auto& f = regular(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(adorn::kernels::relators_close_parallel(f.table, f.p.relators()));
  state.counters["cosets"] = static_cast<double>(f.table.n_cosets());
}

void rewrite_serial(benchmark::State& state) {
  const auto& f = regular(static_cast<int>(state.range(0)));
  const adorn::SchreierSystem s(f.table);
  for (auto _ : state)
    benchmark::DoNotOptimize(adorn::kernels::rewrite_relators_serial(f.table, s.index(), f.p.relators()));
}

void rewrite_parallel(benchmark::State& state) {
  const auto& f = regular(static_cast<int>(state.range(0)));
  const adorn::SchreierSystem s(f.table);
  for (auto _ : state)
    benchmark::DoNotOptimize(adorn::kernels::rewrite_relators_parallel(f.table, s.index(), f.p.relators()));
}

}  // namespace

BENCHMARK(relators_close_serial)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(relators_close_parallel)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);
BENCHMARK(rewrite_serial)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(rewrite_parallel)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "ifg/algebra.hpp"
#include "ifg/trump.hpp"

using namespace ifg;

namespace {

const Structure& structure() {
  static const Structure S = Structure::with_constants(3);
  return S;
}

const Formula& formula() {
  static const Signature sig = structure().signature();
  static const Formula f = parse("A v0/{} E v1/{0} ((v0=v1 \\/{1} ~(v1=0)) \\/{0} v0=2)", 2, &sig);
  return f;
}

struct Operands {
  AlgebraContext ctx{3, 2};
  std::vector<Element> xs = random_rooted(ctx, 2, 17);
};

const Operands& operands() {
  static const Operands o;
  return o;
}

void BM_meaning(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(meaning(structure(), formula()));
}

void BM_meaning_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(meaning_serial(structure(), formula()));
}

void BM_sum(benchmark::State& st) {
  const auto& o = operands();
  for (auto _ : st) benchmark::DoNotOptimize(o.ctx.sum(1, o.xs[0], o.xs[1]));
}

void BM_sum_serial(benchmark::State& st) {
  const auto& o = operands();
  for (auto _ : st) benchmark::DoNotOptimize(o.ctx.sum_serial(1, o.xs[0], o.xs[1]));
}

void BM_prod(benchmark::State& st) {
  const auto& o = operands();
  for (auto _ : st) benchmark::DoNotOptimize(o.ctx.prod(2, o.xs[0], o.xs[1]));
}

void BM_prod_serial(benchmark::State& st) {
  const auto& o = operands();
  for (auto _ : st) benchmark::DoNotOptimize(o.ctx.prod_serial(2, o.xs[0], o.xs[1]));
}

void BM_cyl(benchmark::State& st) {
  const auto& o = operands();
  for (auto _ : st) benchmark::DoNotOptimize(o.ctx.cyl(1, 1, o.xs[0]));
}

void BM_cyl_serial(benchmark::State& st) {
  const auto& o = operands();
  for (auto _ : st) benchmark::DoNotOptimize(o.ctx.cyl_serial(1, 1, o.xs[0]));
}

}  // namespace

BENCHMARK(BM_meaning)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_meaning_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_sum)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_sum_serial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_prod)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_prod_serial)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_cyl)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_cyl_serial)->Unit(benchmark::kMicrosecond);

BENCHMARK_MAIN();

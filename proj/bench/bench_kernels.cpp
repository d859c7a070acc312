// Parallel kernels against their serial references.

#include <benchmark/benchmark.h>

#include "twistcalc/chern.hpp"
#include "twistcalc/oracle.hpp"
#include "twistcalc/parse.hpp"

using namespace twistcalc;

static void BM_FormMatrixProduct_Parallel(benchmark::State& state) {
  const FormMatrix e = projector(static_cast<int>(state.range(0)));
  const FormMatrix de = e.d();
  const FormMatrix ede = e * de;
  for (auto _ : state) benchmark::DoNotOptimize(ede * de);
}
BENCHMARK(BM_FormMatrixProduct_Parallel)->Arg(1)->Arg(2)->Arg(3);

static void BM_FormMatrixProduct_Serial(benchmark::State& state) {
  const FormMatrix e = projector(static_cast<int>(state.range(0)));
  const FormMatrix de = e.d();
  const FormMatrix ede = e * de;
  for (auto _ : state) benchmark::DoNotOptimize(multiply_serial(ede, de));
}
BENCHMARK(BM_FormMatrixProduct_Serial)->Arg(1)->Arg(2)->Arg(3);

static Element probe_form() {
  const auto c = Context::make(5);
  return parse_expr(c, "x1*x2*dx3*dx4 + q(1,2)*x2*x1*dx4*dx3 + i*x5^3*dx1*dx2 - x3*x4*dx2*dx5");
}

static void BM_CheckIdentity_Parallel(benchmark::State& state) {
  const Element f = probe_form();
  OracleOptions o;
  o.points = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_identity(f, Space::Sphere, o));
}
BENCHMARK(BM_CheckIdentity_Parallel)->Arg(20)->Arg(200);

static void BM_CheckIdentity_Serial(benchmark::State& state) {
  const Element f = probe_form();
  OracleOptions o;
  o.points = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(check_identity_serial(f, Space::Sphere, o));
}
BENCHMARK(BM_CheckIdentity_Serial)->Arg(20)->Arg(200);

BENCHMARK_MAIN();

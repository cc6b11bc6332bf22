#include <benchmark/benchmark.h>

#include "diffhopf/comodule.hpp"
#include "diffhopf/expr.hpp"
#include "diffhopf/reconstruct.hpp"

using namespace diffhopf;

namespace {

const FieldKind QT = FieldKind::RationalFunctions;

Comodule worked_example() {
  auto gm = builtin(Builtin::Gm, QT);
  const Element one = Element::constant(gm->ring(), Scalar(1));
  return Comodule::make(gm, {{one, parse_expr("d(y)/y", gm->ring())}, {Element(gm->ring()), one}});
}

void BM_ProlongGL(benchmark::State& state) {
  const Comodule v = standard_rep(builtin(Builtin::GL, QT, static_cast<std::uint32_t>(state.range(0))));
  const auto p = static_cast<std::uint32_t>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(prolong(v, p));
}
BENCHMARK(BM_ProlongGL)->Args({2, 1})->Args({2, 3})->Args({3, 2});

void BM_AntipodeGL2(benchmark::State& state) {
  auto gl = builtin(Builtin::GL, QT, 2);
  const Element x = Element::variable(gl->ring(), Var{1, static_cast<std::uint32_t>(state.range(0))});
  for (auto _ : state) benchmark::DoNotOptimize(gl->apply_antipode(x));
}
BENCHMARK(BM_AntipodeGL2)->DenseRange(0, 3);

void BM_HopfAxioms(benchmark::State& state) {
  auto gl = builtin(Builtin::GL, QT, 2);
  for (auto _ : state) benchmark::DoNotOptimize(check_hopf_axioms(*gl, static_cast<std::uint32_t>(state.range(0))));
}
BENCHMARK(BM_HopfAxioms)->Arg(1)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_HomBasis(benchmark::State& state) {
  const Comodule u = prolong(worked_example(), static_cast<std::uint32_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(hom_basis(u, u));
}
BENCHMARK(BM_HomBasis)->DenseRange(1, 2)->Unit(benchmark::kMillisecond);

void BM_ConstantSplit(benchmark::State& state) {
  const Comodule v = standard_rep(builtin(Builtin::GmConstant, FieldKind::Rationals));
  for (auto _ : state) benchmark::DoNotOptimize(constant_split_check(v, static_cast<std::uint32_t>(state.range(0))));
}
BENCHMARK(BM_ConstantSplit)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_LinearComoduleL(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(linear_comodule_L(2, 1, 2, 1));
}
BENCHMARK(BM_LinearComoduleL)->Unit(benchmark::kMillisecond);

void BM_Reconstruction(benchmark::State& state) {
  auto gm = builtin(Builtin::Gm, QT);
  for (auto _ : state) {
    Registry reg(gm);
    reg.add("V", standard_rep(gm));
    reg.close(Closure{true, 2, 2, true});
    benchmark::DoNotOptimize(check_reconstruction(reg, static_cast<std::size_t>(state.range(0)), 1));
  }
}
BENCHMARK(BM_Reconstruction)->Arg(20)->Arg(200)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();

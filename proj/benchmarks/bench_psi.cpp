#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "psigroups/cp2.hpp"
#include "psigroups/expr.hpp"
#include "psigroups/omega.hpp"
#include "psigroups/psi_engine.hpp"

namespace {

const std::vector<std::string> kGroups = {"C9*C3*C3", "C4*C4*C4*C4", "C27*C9*C3", "C3*C3*C3*C3*C3*C3*C3"};

const psigroups::FiniteGroup& group(std::int64_t i) {
  static std::vector<psigroups::FiniteGroup> cache = [] {
    std::vector<psigroups::FiniteGroup> out;
    for (const auto& e : kGroups) out.push_back(psigroups::build_group(e));
    return out;
  }();
  return cache[static_cast<std::size_t>(i)];
}

void BM_PsiBrute(benchmark::State& state) {
  const auto& g = group(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(psigroups::psi_brute(g));
  state.SetLabel(g.name());
}

void BM_PsiFiltration(benchmark::State& state) {
  const auto& g = group(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(psigroups::psi_filtration(g));
  state.SetLabel(g.name());
}

void BM_PsiBottom(benchmark::State& state) {
  const auto& g = group(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(psigroups::psi_bottom_recursion(g));
  state.SetLabel(g.name());
}

void BM_Cp2Pairwise(benchmark::State& state) {
  const auto& g = group(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(psigroups::is_cp2_pairwise(g));
  state.SetLabel(g.name());
}

void BM_Cp2Omega(benchmark::State& state) {
  const auto& g = group(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(psigroups::is_cp2_omega(g));
  state.SetLabel(g.name());
}

void BM_BuildGroup(benchmark::State& state) {
  const auto& expr = kGroups[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) benchmark::DoNotOptimize(psigroups::build_group(expr));
  state.SetLabel(expr);
}

}  // namespace

BENCHMARK(BM_PsiBrute)->DenseRange(0, 3);
BENCHMARK(BM_PsiFiltration)->DenseRange(0, 3);
BENCHMARK(BM_PsiBottom)->DenseRange(0, 3);
BENCHMARK(BM_Cp2Pairwise)->DenseRange(0, 2);
BENCHMARK(BM_Cp2Omega)->DenseRange(0, 3);
BENCHMARK(BM_BuildGroup)->DenseRange(0, 3);

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include "cyclo/braid.hpp"
#include "cyclo/hecke.hpp"

namespace {

using namespace cyclo;

void BM_WMultiply(benchmark::State& state) {
  const auto all = w_all_elements(4, 3);
  size_t i = 0;
  for (auto _ : state) {
    const auto& a = all[i % all.size()];
    const auto& b = all[(i * 7919) % all.size()];
    benchmark::DoNotOptimize(w_multiply(a, b));
    ++i;
  }
}
BENCHMARK(BM_WMultiply);

void BM_DoubleCosetReps(benchmark::State& state) {
  const ParabolicIndex a{1, Composition({2})};
  const ParabolicIndex b{0, Composition({2, 1})};
  for (auto _ : state) benchmark::DoNotOptimize(double_coset_reps(a, b, 3));
}
BENCHMARK(BM_DoubleCosetReps);

void BM_HeckeBasisProduct(benchmark::State& state) {
  GenericHecke h = make_generic_hecke(3, 2);
  const auto basis = w_all_elements(3, 2);
  size_t i = 0;
  for (auto _ : state) {
    const auto& a = basis[i % basis.size()];
    const auto& b = basis[(i * 31) % basis.size()];
    benchmark::DoNotOptimize(h.mul(h.t_basis(a), h.t_basis(b)));
    ++i;
  }
}
BENCHMARK(BM_HeckeBasisProduct);

void BM_MackeyPhi(benchmark::State& state) {
  GenericHecke h = make_generic_hecke(3, 2);
  const ParabolicIndex a{1, Composition({2})};
  const ParabolicIndex b{2, Composition({1})};
  const auto basis = w_all_elements(3, 2);
  size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(h.mackey_phi(h.t_basis(basis[i % basis.size()]), a, b));
    ++i;
  }
}
BENCHMARK(BM_MackeyPhi);

void BM_BraidEquiv(benchmark::State& state) {
  // the longest identity at n = 3, r = 3: full color word against a crossing
  const ParabolicIndex a{0, Composition({3})};
  const auto data = double_coset_reps(a, a, 3);
  BraidWord lhs{{}, 3}, rhs{{}, 3};
  for (const auto& d : data) {
    if (d.psi.empty()) continue;
    const BraidWord om = omega_word(d, 3, 3);
    if (om.length() <= lhs.length() - 1) continue;
    const auto [j, pj] = *d.psi.begin();
    lhs = braid_concat(om, braid_word(3, {j}));
    rhs = braid_concat(braid_word(3, {pj}), om);
  }
  for (auto _ : state) benchmark::DoNotOptimize(braid_equiv(lhs, rhs));
}
BENCHMARK(BM_BraidEquiv);

}  // namespace

BENCHMARK_MAIN();

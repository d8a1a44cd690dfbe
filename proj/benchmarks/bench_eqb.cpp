#include <benchmark/benchmark.h>

#include <numeric>

#include "eqb/planting.hpp"
#include "eqb/sampling.hpp"
#include "eqb/sections.hpp"

using namespace eqb;

namespace {

ActingGroupPtr linear(Family fam, int n) {
  const auto& f = CycField::get(std::lcm(catalog_modulus(fam, n), 4));
  return ActingGroup::linear(MatrixGroup::generate(f, catalog(fam, n, f).generators, 240));
}

void BM_CycMul(benchmark::State& state) {
  const auto& f = CycField::get(static_cast<int>(state.range(0)));
  Rng rng(1);
  const CycNum a = random_small_cyc(f, rng) + CycNum::zeta(f, 3) * random_small_cyc(f, rng);
  const CycNum b = random_nonzero_cyc(f, rng) + CycNum::zeta(f, 5);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CycMul)->Arg(12)->Arg(20)->Arg(24);

void BM_GroupClosure(benchmark::State& state) {
  const auto fam = static_cast<Family>(state.range(0));
  const auto& f = CycField::get(catalog_modulus(fam, 3));
  const auto gens = catalog(fam, 3, f).generators;
  for (auto _ : state) benchmark::DoNotOptimize(MatrixGroup::generate(f, gens, 240));
}
BENCHMARK(BM_GroupClosure)
    ->Arg(static_cast<int>(Family::binary_dihedral))
    ->Arg(static_cast<int>(Family::binary_octahedral))
    ->Arg(static_cast<int>(Family::binary_icosahedral));

void BM_Birkhoff(benchmark::State& state) {
  const auto& f = CycField::get(12);
  Rng rng(2);
  const PlantedCocycle p = random_planted_cocycle(f, static_cast<std::size_t>(state.range(0)), -4, 4, 3, rng);
  const TransitionCocycle t(p.transition);
  for (auto _ : state) benchmark::DoNotOptimize(birkhoff_factor(t));
}
BENCHMARK(BM_Birkhoff)->DenseRange(1, 4)->Unit(benchmark::kMicrosecond);

void BM_Classify(benchmark::State& state) {
  const auto g = linear(state.range(0) == 0 ? Family::cyclic : Family::binary_dihedral, state.range(0) == 0 ? 4 : 3);
  Rng rng(3);
  const CanonicalForm cf = random_canonical_form(g, FormShape{}, rng);
  const EquivariantBundle e = random_twist(build_from_canonical(cf), 2, 1, rng);
  for (auto _ : state) benchmark::DoNotOptimize(classify(e));
}
BENCHMARK(BM_Classify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SectionsCharacter(benchmark::State& state) {
  const auto g = linear(Family::binary_dihedral, 3);
  Rng rng(4);
  const CanonicalForm cf = random_canonical_form(g, FormShape{}, rng);
  for (auto _ : state) {
    if (state.range(0) == 0) {
      benchmark::DoNotOptimize(sections_character(cf));
    } else {
      benchmark::DoNotOptimize(transported_sections_character(cf));
    }
  }
}
BENCHMARK(BM_SectionsCharacter)->Arg(0)->Arg(1)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();

#include <benchmark/benchmark.h>

#include <algorithm>
#include <random>

#include "monospread/depth.hpp"
#include "monospread/lattice.hpp"
#include "monospread/sdepth.hpp"
#include "monospread/smooth.hpp"
#include "monospread/spread.hpp"

namespace {

using mspread::Exponent;
using mspread::Monomial;
using mspread::MonomialIdeal;

// m distinct monomials of degree 6 in n variables; equal degree keeps them
// pairwise incomparable.
MonomialIdeal antichain(std::size_t n, std::size_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  std::vector<Monomial> gens;
  while (gens.size() < m) {
    std::vector<Exponent> e(n, 0);
    for (int k = 0; k < 6; ++k) ++e[var(rng)];
    Monomial u(e);
    if (std::find(gens.begin(), gens.end(), u) == gens.end()) gens.push_back(u);
  }
  return MonomialIdeal(n, gens);
}

void BM_CheckSmooth(benchmark::State& state) {
  const MonomialIdeal I = antichain(static_cast<std::size_t>(state.range(0)), 12, 1);
  for (auto _ : state) benchmark::DoNotOptimize(mspread::check_smooth(I));
}
BENCHMARK(BM_CheckSmooth)->Arg(3)->Arg(6)->Arg(10);

void BM_SmoothCertificate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Monomial> gens;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Exponent> e(n, 0);
    e[j] = static_cast<Exponent>(j % 4 + 1);
    gens.emplace_back(e);
  }
  const MonomialIdeal I(n, gens);
  for (auto _ : state) benchmark::DoNotOptimize(mspread::check_smooth(I));
}
BENCHMARK(BM_SmoothCertificate)->Arg(4)->Arg(8)->Arg(16);

void BM_LatticeBuild(benchmark::State& state) {
  const MonomialIdeal I = antichain(4, static_cast<std::size_t>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(mspread::LcmLattice(I).size());
}
BENCHMARK(BM_LatticeBuild)->Arg(6)->Arg(10)->Arg(14);

void BM_SpreadIsomorphism(benchmark::State& state) {
  const MonomialIdeal I = antichain(3, static_cast<std::size_t>(state.range(0)), 3);
  const mspread::LcmLattice a(I);
  const mspread::LcmLattice b(mspread::spread_ideal(I, 3));
  for (auto _ : state) benchmark::DoNotOptimize(mspread::is_isomorphic(a, b));
}
BENCHMARK(BM_SpreadIsomorphism)->Arg(4)->Arg(8);

void BM_SelfIsomorphism(benchmark::State& state) {
  const mspread::LcmLattice a(antichain(4, static_cast<std::size_t>(state.range(0)), 5));
  for (auto _ : state) benchmark::DoNotOptimize(mspread::is_isomorphic(a, a));
}
BENCHMARK(BM_SelfIsomorphism)->Arg(4)->Arg(8)->Arg(12);

void BM_Depth(benchmark::State& state) {
  const MonomialIdeal I = antichain(3, static_cast<std::size_t>(state.range(0)), 4);
  for (auto _ : state) benchmark::DoNotOptimize(mspread::depth_quotient(I).value);
}
BENCHMARK(BM_Depth)->Arg(4)->Arg(6)->Arg(8);

void BM_SdepthQuotient(benchmark::State& state) {
  const MonomialIdeal I(2, {{4, 0}, {2, 1}, {0, 2}});
  const MonomialIdeal S = mspread::spread_ideal(I, static_cast<std::size_t>(state.range(0)),
                                                mspread::SpreadAmbient::Padded);
  for (auto _ : state) benchmark::DoNotOptimize(mspread::sdepth_quotient(S).value);
}
BENCHMARK(BM_SdepthQuotient)->Arg(2)->Arg(3);

}  // namespace

BENCHMARK_MAIN();

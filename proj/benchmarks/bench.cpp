#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "splitjac/coversolver.hpp"
#include "splitjac/igusa.hpp"
#include "splitjac/nielsen.hpp"
#include "splitjac/resultant.hpp"

using namespace splitjac;

namespace {

RatPoly random_sextic(std::mt19937& rng) {
  std::uniform_int_distribution<int> c(-9, 9);
  std::vector<Rational> cs(7);
  for (auto& v : cs) v = Rational(c(rng));
  cs[6] = Rational(c(rng) * 2 + 1);  // keep the degree at six
  return RatPoly(cs);
}

void BM_IgusaExact(benchmark::State& state) {
  std::mt19937 rng(3);
  std::vector<RatPoly> pool;
  while (pool.size() < 32) {
    RatPoly f = random_sextic(rng);
    if (discriminant(f) != Rational(0)) pool.push_back(f);
  }
  size_t i = 0;
  for (auto _ : state) {
    auto v = igusa_invariants(GenusTwoCurve(pool[i++ % pool.size()]));
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_IgusaExact);

void BM_DiscriminantExact(benchmark::State& state) {
  std::mt19937 rng(4);
  std::vector<RatPoly> pool;
  for (int k = 0; k < 32; ++k) pool.push_back(random_sextic(rng));
  size_t i = 0;
  for (auto _ : state) {
    auto d = discriminant(pool[i++ % pool.size()]);
    benchmark::DoNotOptimize(d);
  }
}
BENCHMARK(BM_DiscriminantExact);

void BM_EnumerateSmall(benchmark::State& state) {
  for (auto _ : state) {
    auto res = enumerate_nielsen(4, {{2}, {2}, {2}, {2, 2}}, 1);
    benchmark::DoNotOptimize(res.classes);
  }
}
BENCHMARK(BM_EnumerateSmall);

void BM_OrbitDecomposition(benchmark::State& state) {
  auto res = enumerate_nielsen(8, parse_cycle_types("2^4,2^3,2^3,2^4"),
                               static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto orbits = braid_orbits(res.classes);
    benchmark::DoNotOptimize(orbits);
  }
}
BENCHMARK(BM_OrbitDecomposition)->Arg(1);

void BM_CoverResidual(benchmark::State& state) {
  auto sys = build_system(static_cast<int>(state.range(0)));
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> z(static_cast<size_t>(sys.num_unknowns));
  for (auto& v : z) v = Complex(u(rng), u(rng));
  for (auto _ : state) {
    auto r = detail::cover_residual(sys, z);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_CoverResidual)->Arg(4)->Arg(8);

void BM_CoverJacobian(benchmark::State& state) {
  auto sys = build_system(static_cast<int>(state.range(0)));
  std::mt19937 rng(6);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::vector<Complex> z(static_cast<size_t>(sys.num_unknowns));
  for (auto& v : z) v = Complex(u(rng), u(rng));
  for (auto _ : state) {
    auto j = detail::cover_jacobian(sys, z);
    benchmark::DoNotOptimize(j);
  }
}
BENCHMARK(BM_CoverJacobian)->Arg(4)->Arg(8);

}  // namespace

BENCHMARK_MAIN();

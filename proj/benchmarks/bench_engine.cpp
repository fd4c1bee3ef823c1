#include <benchmark/benchmark.h>

#include <random>

#include "tdvr/assoc_graded.hpp"
#include "tdvr/groebner.hpp"
#include "tdvr/oracle.hpp"
#include "tdvr/random.hpp"
#include "tdvr/text.hpp"

using namespace tdvr;

namespace {

std::vector<RandomInstance> suite(std::size_t n, bool homogeneous, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<RandomInstance> out;
  for (std::size_t k = 0; k < n; ++k) {
    InstanceShape s = random_shape(rng);
    s.x_homogeneous = homogeneous;
    out.push_back(random_instance(s, rng));
  }
  return out;
}

}  // namespace

static void BM_Buchberger(benchmark::State& state) {
  const auto instances = suite(64, false, 17);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(buchberger(instances[k++ % instances.size()].generators));
  }
}
BENCHMARK(BM_Buchberger);

// a fixed curve over Z/3^a
static void BM_CurveOverGaloisRing(benchmark::State& state) {
  const auto m = make_module(RingSpec(3, static_cast<std::uint32_t>(state.range(0)), Flavor::MixedChar), {"x", "y"}, 1,
                             parse_term_order("deglex pot", 1));
  const std::vector<Element> F{parse_element(m, "x^2 + 3*y"), parse_element(m, "x*y + 3"), parse_element(m, "y^3 - x")};
  for (auto _ : state) benchmark::DoNotOptimize(minimalize(buchberger(F)));
}
BENCHMARK(BM_CurveOverGaloisRing)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

static void BM_Smith(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const RingSpec r(5, 4, Flavor::MixedChar);
  std::mt19937_64 rng(5);
  Matrix a(r, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a.at(i, j) = random_scalar(r, rng);
  for (auto _ : state) benchmark::DoNotOptimize(smith_over_chain_ring(a));
}
BENCHMARK(BM_Smith)->RangeMultiplier(2)->Range(4, 32);

static void BM_FlatnessOverTdvr(benchmark::State& state) {
  const auto instances = suite(32, true, 23);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(flatness_over_tdvr(instances[k++ % instances.size()].generators));
  }
}
BENCHMARK(BM_FlatnessOverTdvr);

static void BM_OracleFlatness(benchmark::State& state) {
  const auto instances = suite(32, true, 23);
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(oracle_is_flat(instances[k++ % instances.size()].generators, 5));
  }
}
BENCHMARK(BM_OracleFlatness);

BENCHMARK_MAIN();

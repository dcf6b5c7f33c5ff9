#include <benchmark/benchmark.h>

#include <surfrep/certify.hpp>
#include <surfrep/rational.hpp>
#include <surfrep/repspace.hpp>
#include <surfrep/representation.hpp>
#include <surfrep/scc.hpp>
#include <surfrep/utmat.hpp>

#include <vector>

using namespace surfrep;

static void BM_CommutatorClosedForm(benchmark::State& state) {
  const Rational x(22, 7), y(-3, 5), z(13, 11), w(8, 3);
  for (auto _ : state) {
    Rational p = commutator_entry(x, y, z, w);
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_CommutatorClosedForm);

static void BM_CommutatorProduct(benchmark::State& state) {
  const UTMat a(Rational(22, 7), Rational(-3, 5));
  const UTMat b(Rational(13, 11), Rational(8, 3));
  for (auto _ : state) {
    UTMat c = a * b * a.inverse() * b.inverse();
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_CommutatorProduct);

static void BM_SquaresClosedForm(benchmark::State& state) {
  std::vector<SquareCoords> blocks;
  for (int i = 1; i <= 6; ++i)
    blocks.push_back(to_square_coords(Rational(i, i + 1), Rational(2 * i - 7, 3)));
  for (auto _ : state) {
    Rational q = squares_product_entry(blocks);
    benchmark::DoNotOptimize(q);
  }
}
BENCHMARK(BM_SquaresClosedForm);

static void BM_SquaresProduct(benchmark::State& state) {
  std::vector<UTMat> mats;
  for (int i = 1; i <= 6; ++i) mats.emplace_back(Rational(i, i + 1), Rational(2 * i - 7, 3));
  for (auto _ : state) {
    UTMat product;
    for (const UTMat& m : mats) product = product * m * m;
    benchmark::DoNotOptimize(product);
  }
}
BENCHMARK(BM_SquaresProduct);

static void BM_Genus3Catalog(benchmark::State& state) {
  const int bound = static_cast<int>(state.range(0));
  for (auto _ : state) {
    auto catalog = genus3_catalog(bound, bound, true);
    benchmark::DoNotOptimize(catalog);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Genus3Catalog)->Arg(2)->Arg(4)->Arg(6)->Complexity();

static void BM_ScanKernel(benchmark::State& state) {
  const auto rep = genus3_assignment(Rational(2), Rational(1), Rational(3), Rational(0));
  const auto catalog = genus3_catalog(6, 6, true);
  for (auto _ : state) {
    auto result = scan_kernel(rep, catalog);
    benchmark::DoNotOptimize(result);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(catalog.size()));
}
BENCHMARK(BM_ScanKernel);

static void BM_CertifyGenus3(benchmark::State& state) {
  for (auto _ : state) {
    Certificate cert = certify_genus3(Rational(2), Rational(1), Rational(3), Rational(0));
    benchmark::DoNotOptimize(cert);
  }
}
BENCHMARK(BM_CertifyGenus3);

static void BM_MultIndepLargePrimes(benchmark::State& state) {
  // Semiprime diagonals: exercises the factoring path, not just trial division.
  const Rational x(1000003L * 1000033L), z(1000037L * 1000039L);
  for (auto _ : state) {
    auto result = mult_indep(x, z);
    benchmark::DoNotOptimize(result);
  }
}
BENCHMARK(BM_MultIndepLargePrimes);

static void BM_SamplePoint(benchmark::State& state) {
  const Space space = Space::parse("U:2");
  unsigned long long seed = 0;
  for (auto _ : state) {
    RepPoint pt = sample_point(space, seed++);
    benchmark::DoNotOptimize(pt);
  }
}
BENCHMARK(BM_SamplePoint);

BENCHMARK_MAIN();

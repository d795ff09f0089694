// Serial reference vs OpenMP kernels on the 18-point configuration.

#include <benchmark/benchmark.h>

#include <random>

#include "nonic/certify.hpp"

using namespace nonic;

namespace {

const PrimeField& field() {
  static const PrimeField F;
  return F;
}

const PointSet& points() {
  static const PointSet A = [] {
    const int rows[18][3] = {{1, 1, 1},  {0, 1, 2}, {-1, 2, 1}, {1, 2, 3},  {1, -2, 0}, {2, 1, 4},
                             {4, 2, -3}, {1, 5, 1}, {5, 2, 3},  {6, 2, 3},  {1, 7, 7},  {1, 7, 3},
                             {6, 5, 4},  {-7, 2, 3}, {3, 7, 4}, {2, -5, 1}, {6, 3, -4}, {-7, 6, 6}};
    std::vector<ProjPoint> pts;
    for (const auto& r : rows) pts.emplace_back(field().from_int(r[0]), field().from_int(r[1]), field().from_int(r[2]));
    return PointSet(field(), std::move(pts));
  }();
  return A;
}

DenseMatrix random_square(std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::uint32_t> U(0, field().modulus() - 1);
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = Fp(U(rng));
  return m;
}

void BM_Rref(benchmark::State& st) {
  const DenseMatrix m = random_square(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(rref(field(), m));
}
void BM_RrefSerial(benchmark::State& st) {
  const DenseMatrix m = random_square(st.range(0));
  for (auto _ : st) benchmark::DoNotOptimize(rref_serial(field(), m));
}
BENCHMARK(BM_Rref)->Arg(64)->Arg(256);
BENCHMARK(BM_RrefSerial)->Arg(64)->Arg(256);

void BM_Kruskal(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kruskal_rank(field(), points(), 4));
}
void BM_KruskalSerial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(kruskal_rank_serial(field(), points(), 4));
}
BENCHMARK(BM_Kruskal)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_KruskalSerial)->Unit(benchmark::kMillisecond);

const std::vector<Fp>& all_ones_form() {
  static const std::vector<Fp> t = contracted_from_waring(field(), Decomposition{points(), std::vector<Fp>(18, Fp(1))}, 9);
  return t;
}

void BM_Test4(benchmark::State& st) {
  const LiaisonBase base = make_liaison_base(field(), points());
  for (auto _ : st) benchmark::DoNotOptimize(test4_minimality(field(), base, all_ones_form()));
}
void BM_Test4Serial(benchmark::State& st) {
  const LiaisonBase base = make_liaison_base(field(), points());
  for (auto _ : st) benchmark::DoNotOptimize(test4_minimality_serial(field(), base, all_ones_form()));
}
BENCHMARK(BM_Test4)->Unit(benchmark::kSecond)->Iterations(1);
BENCHMARK(BM_Test4Serial)->Unit(benchmark::kSecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();

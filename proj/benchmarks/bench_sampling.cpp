#include <benchmark/benchmark.h>

#include "gridlsh/area_summary.hpp"
#include "gridlsh/interval_sampler.hpp"
#include "gridlsh/minwise_lsh.hpp"
#include "gridlsh/rect_sampler.hpp"

namespace {

using namespace gridlsh;

void BM_MinHashInterval(benchmark::State& state) {
  const unsigned bits = static_cast<unsigned>(state.range(0));
  Prime p = prime_in_dyadic(bits + 2);
  SeededRng rng(1);
  LinearHash1D h = LinearHash1D::from_seed(11, p);
  i64 span = static_cast<i64>(1ull << bits);
  for (auto _ : state) {
    i64 lo = static_cast<i64>(rng.next_below(p.value() - span - 1));
    benchmark::DoNotOptimize(min_hash_interval(h, lo, lo + span));
  }
  state.SetLabel("span=2^" + std::to_string(bits));
}
BENCHMARK(BM_MinHashInterval)->Arg(10)->Arg(20)->Arg(30)->Arg(40);

void BM_BottomK(benchmark::State& state) {
  Prime p = prime_in_dyadic(32);
  LinearHash1D h = LinearHash1D::from_seed(5, p);
  u64 k = static_cast<u64>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bottom_k(h, 1000, 1000 + (1 << 28), k));
  }
}
BENCHMARK(BM_BottomK)->Arg(4)->Arg(64)->Arg(1024);

void BM_ZeroSet(benchmark::State& state) {
  Prime p = prime_in_dyadic(static_cast<unsigned>(state.range(0)));
  SeededRng rng(3);
  for (auto _ : state) {
    LinearHash2D h = LinearHash2D::from_seed(rng.next_u64(), p);
    GridRect r{10, static_cast<i64>(p.value()) / 2, 20, static_cast<i64>(p.value()) / 2 + 19};
    benchmark::DoNotOptimize(zero_set(h, r));
  }
}
BENCHMARK(BM_ZeroSet)->Arg(12)->Arg(16)->Arg(20);

void BM_HistogramHash(benchmark::State& state) {
  const u64 n = static_cast<u64>(state.range(0));
  std::vector<u64> w(n, 97);
  Histogram x = Histogram::from_weights(std::move(w));
  LshFunction F = LshFunction::for_histograms(17, 0.2, n, x.total());
  for (auto _ : state) {
    benchmark::DoNotOptimize(histogram_hash(x, F));
  }
}
BENCHMARK(BM_HistogramHash)->Arg(16)->Arg(256)->Arg(4096);

void BM_PolygonHash(benchmark::State& state) {
  GridSpec grid{2560};
  GridPolygon poly = GridPolygon::from_vertices(
      {{400, 400}, {2100, 420}, {2150, 2080}, {380, 2100}});
  LshFunction F = LshFunction::for_polygons(23, 0.35, 0.25, 0.1, grid);
  for (auto _ : state) {
    benchmark::DoNotOptimize(polygon_hash(poly, F, grid));
  }
}
BENCHMARK(BM_PolygonHash);

void BM_QueryUnion(benchmark::State& state) {
  GridSpec grid{900};
  std::vector<GridPolygon> polys;
  for (int i = 0; i < 6; ++i) {
    i64 off = 40 * i;
    polys.push_back(GridPolygon::from_vertices(
        {{100 + off, 120}, {700 + off / 2, 140 + off}, {680, 700}, {120, 680 - off / 2}}));
  }
  AreaSummary s = build_summary(std::move(polys), {0.25, 0.2, 0.2, 9}, grid);
  std::vector<u32> ids{0, 2, 4};
  for (auto _ : state) {
    benchmark::DoNotOptimize(s.query_union(ids));
  }
}
BENCHMARK(BM_QueryUnion);

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;
  benchmark::RunSpecifiedBenchmarks();
  benchmark::Shutdown();
  return 0;
}

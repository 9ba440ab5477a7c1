#include <benchmark/benchmark.h>

#include <random>

#include "soleidx/catalog.hpp"
#include "soleidx/codec.hpp"
#include "soleidx/corpus.hpp"
#include "soleidx/enhance.hpp"
#include "soleidx/fft.hpp"
#include "soleidx/restore.hpp"
#include "soleidx/segment.hpp"
#include "soleidx/util.hpp"

using namespace soleidx;

namespace {

RealPlane random_plane(int width, int height, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<double> values(std::size_t(width) * std::size_t(height));
  for (double& v : values) v = double(rng() >> 11) * 0x1.0p-53;
  return RealPlane(width, height, std::move(values));
}

void BM_fft2(benchmark::State& state) {
  const int n = int(state.range(0));
  const RealPlane plane = random_plane(n, n, 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fft2(plane));
  }
  state.SetItemsProcessed(state.iterations() * n * n);
}
BENCHMARK(BM_fft2)->Arg(64)->Arg(128)->Arg(256)->Arg(100);  // 100: Bluestein path

void BM_equalize(benchmark::State& state) {
  const GrayImage img = synth_print(3, int(state.range(0)), int(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(equalize(img));
  }
}
BENCHMARK(BM_equalize)->Arg(128)->Arg(512);

void BM_otsu(benchmark::State& state) {
  const Histogram h = compute_histogram(synth_print(4, 512, 512));
  for (auto _ : state) {
    benchmark::DoNotOptimize(otsu_threshold(h));
  }
}
BENCHMARK(BM_otsu);

void BM_wiener_restore(benchmark::State& state) {
  const int n = int(state.range(0));
  const GrayImage print = synth_print(5, n, n);
  const BlurKernel psf = motion_blur_psf(7, 0.0);
  const GrayImage blurred = degrade(print, psf, 0.01, 9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wiener_restore(blurred, psf, 0.01));
  }
}
BENCHMARK(BM_wiener_restore)->Arg(128)->Arg(256);

void BM_ingest(benchmark::State& state) {
  const std::string bytes = encode_pgm(synth_print(6, 128, 128));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        ingest(bytes, "bench", "", std::nullopt, "2026-01-01T00:00:00Z"));
  }
}
BENCHMARK(BM_ingest);

void BM_query_range(benchmark::State& state) {
  Catalog cat;
  for (int i = 0; i < 1000; ++i) {
    IndexRecord rec;
    rec.id = "rec-" + std::to_string(i);
    rec.t = i % 255;
    rec.levels = 256;
    rec.tau_text = format_tau(rec.t, 256);
    rec.tau = parse_tau(rec.tau_text);
    rec.width = rec.height = 128;
    rec.source_digest = std::string(64, 'b');
    rec.created_at = "2026-01-01T00:00:00Z";
    cat.records.push_back(std::move(rec));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(query_range(cat, 0.5, 0.02));
  }
}
BENCHMARK(BM_query_range);

}  // namespace

BENCHMARK_MAIN();

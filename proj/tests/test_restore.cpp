#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "soleidx/corpus.hpp"
#include "soleidx/error.hpp"
#include "soleidx/restore.hpp"

using namespace soleidx;

namespace {

double mean_of(const GrayImage& img) {
  return double(std::accumulate(img.pixels().begin(), img.pixels().end(),
                                std::int64_t{0})) /
         double(img.pixel_count());
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected a soleidx::Error");
  return Errc::io_error;
}

}  // namespace

TEST_CASE("psf: degenerate single-cell line") {
  const BlurKernel k = motion_blur_psf(1, 123.0);
  CHECK(k.width() == 1);
  CHECK(k.height() == 1);
  CHECK(k.at(0, 0) == 1.0);
}

TEST_CASE("psf: horizontal and vertical lines") {
  const BlurKernel horizontal = motion_blur_psf(5, 0.0);
  CHECK(horizontal.width() == 5);
  CHECK(horizontal.height() == 1);
  for (int x = 0; x < 5; ++x) CHECK(horizontal.at(x, 0) == doctest::Approx(0.2));

  const BlurKernel vertical = motion_blur_psf(3, 90.0);
  CHECK(vertical.width() == 1);
  CHECK(vertical.height() == 3);
  for (int y = 0; y < 3; ++y) CHECK(vertical.at(0, y) == doctest::Approx(1.0 / 3));
}

TEST_CASE("psf: 45-degree diagonal runs bottom-left to top-right") {
  const BlurKernel diag = motion_blur_psf(5, 45.0);
  REQUIRE(diag.width() == 5);
  REQUIRE(diag.height() == 5);
  double sum = 0.0;
  for (int i = 0; i < 5; ++i) {
    CHECK(diag.at(i, 4 - i) == doctest::Approx(0.2));
    sum += diag.at(i, 4 - i);
  }
  CHECK(sum == doctest::Approx(1.0));
}

TEST_CASE("psf: even lengths keep an odd bounding box and unit mass") {
  const BlurKernel k = motion_blur_psf(4, 0.0);
  CHECK(k.width() % 2 == 1);
  CHECK(k.height() == 1);
  CHECK(std::abs(std::accumulate(k.weights().begin(), k.weights().end(), 0.0) - 1.0) <
        1e-12);
  CHECK(k.at(k.width() / 2, 0) > 0.0);  // the line passes through the center
}

TEST_CASE("psf: invalid length") {
  CHECK(code_of([] { motion_blur_psf(0, 0.0); }) == Errc::invalid_length);
}

TEST_CASE("degrade: identity kernel with zero noise is the identity") {
  std::mt19937_64 rng(10001);
  const GrayImage img = oracle::random_gray(rng, 33, 20);
  CHECK(degrade(img, motion_blur_psf(1, 0.0), 0.0, 5) == img);
}

TEST_CASE("degrade: unit-mass kernels preserve the mean") {
  std::mt19937_64 rng(10002);
  const GrayImage img = oracle::random_gray(rng, 64, 48);
  for (int len : {3, 4, 7}) {
    const GrayImage blurred = degrade(img, motion_blur_psf(len, 30.0), 0.0, 0);
    CHECK(std::abs(mean_of(blurred) - mean_of(img)) <= 1.0);
  }
}

TEST_CASE("degrade: single white pixel spreads into a wrapped line") {
  std::vector<int> px(64 * 64, 0);
  px[std::size_t(30) * 64 + 30] = 255;
  const GrayImage img(64, 64, std::move(px));
  const GrayImage blurred = degrade(img, motion_blur_psf(5, 0.0), 0.0, 0);
  for (int y = 0; y < 64; ++y) {
    for (int x = 0; x < 64; ++x) {
      const bool on_line = y == 30 && x >= 28 && x <= 32;
      CHECK(blurred.at(x, y) == (on_line ? 51 : 0));
    }
  }

  // Wrap-around: the same kernel at the left edge reaches the right edge.
  std::vector<int> edge(64 * 64, 0);
  edge[0] = 255;
  const GrayImage wrapped = degrade(GrayImage(64, 64, std::move(edge)),
                                    motion_blur_psf(5, 0.0), 0.0, 0);
  CHECK(wrapped.at(0, 0) == 51);
  CHECK(wrapped.at(1, 0) == 51);
  CHECK(wrapped.at(2, 0) == 51);
  CHECK(wrapped.at(62, 0) == 51);
  CHECK(wrapped.at(63, 0) == 51);
  CHECK(wrapped.at(3, 0) == 0);
}

TEST_CASE("degrade: seeded noise is reproducible") {
  const GrayImage img = synth_print(77, 64, 64);
  const BlurKernel psf = motion_blur_psf(3, 0.0);
  CHECK(degrade(img, psf, 0.02, 9) == degrade(img, psf, 0.02, 9));
  CHECK(degrade(img, psf, 0.02, 9) != degrade(img, psf, 0.02, 10));
}

TEST_CASE("degrade: kernel must fit") {
  const GrayImage img = synth_print(1, 64, 64);
  CHECK(code_of([&] { degrade(img, motion_blur_psf(70, 0.0), 0.0, 0); }) ==
        Errc::kernel_too_large);
}

TEST_CASE("wiener: identity kernel with k=0 is exact") {
  std::mt19937_64 rng(10003);
  const GrayImage img = oracle::random_gray(rng, 32, 32);
  CHECK(wiener_restore(img, motion_blur_psf(1, 0.0), 0.0) == img);
}

TEST_CASE("wiener: noiseless blur inverts exactly on grid-preserving prints") {
  // Tone gap 105 is divisible by 3, 5 and 7, so every blurred mix lands on
  // the 8-bit grid and inversion is loss-free.
  const GrayImage print = synth_print_tones(123, 128, 128, 40, 145);
  for (int len : {3, 5, 7}) {
    for (double angle : {0.0, 45.0, 90.0}) {
      const BlurKernel psf = motion_blur_psf(len, angle);
      const GrayImage blurred = degrade(print, psf, 0.0, 0);
      CHECK(blurred != print);
      CHECK(wiener_restore(blurred, psf, 0.0) == print);
    }
  }
}

TEST_CASE("wiener: len=7 noiseless blur recovers above 50 dB") {
  const GrayImage print = synth_print_tones(55, 128, 128, 40, 145);
  const BlurKernel psf = motion_blur_psf(7, 0.0);
  const GrayImage blurred = degrade(print, psf, 0.0, 0);
  const GrayImage recovered = wiener_restore(blurred, psf, 0.0);
  // Exact recovery (infinite PSNR) or >= 50 dB.
  if (recovered != print) {
    CHECK(psnr(recovered, print) >= 50.0);
  }
}

TEST_CASE("wiener: k=0 on a spectral null is rejected") {
  // A 2-cell kernel has H = 0 at the Nyquist column of an even width.
  const GrayImage img = synth_print(3, 64, 64);
  const BlurKernel psf = motion_blur_psf(2, 0.0);
  CHECK(code_of([&] { wiener_restore(img, psf, 0.0); }) == Errc::ill_conditioned);
  // A positive k regularizes the same kernel.
  CHECK_NOTHROW(wiener_restore(img, psf, 0.01));
}

TEST_CASE("wiener: negative k is rejected") {
  const GrayImage img = synth_print(4, 64, 64);
  CHECK(code_of([&] { wiener_restore(img, motion_blur_psf(3, 0.0), -0.1); }) ==
        Errc::negative_k);
}

TEST_CASE("wiener: under noise some grid k beats the guarded inverse") {
  const GrayImage print = synth_print_tones(123, 128, 128, 40, 220);
  const BlurKernel psf = motion_blur_psf(7, 0.0);
  const GrayImage noisy = degrade(print, psf, 0.01, 42);
  const double inverse_db = psnr(wiener_restore(noisy, psf, 0.0), print);
  double best = -1e9;
  for (double k : {1e-4, 1e-3, 1e-2, 1e-1}) {
    best = std::max(best, psnr(wiener_restore(noisy, psf, k), print));
  }
  CHECK(best > inverse_db);
}

TEST_CASE("cls: gamma=0 is bit-identical to wiener k=0") {
  const GrayImage print = synth_print_tones(200, 128, 128, 40, 220);
  const BlurKernel psf = motion_blur_psf(5, 45.0);
  const GrayImage blurred = degrade(print, psf, 0.005, 3);
  CHECK(cls_restore(blurred, psf, 0.0) == wiener_restore(blurred, psf, 0.0));

  // Where the k=0 inverse is undefined, gamma=0 must be rejected the same way.
  const BlurKernel null_psf = motion_blur_psf(2, 0.0);
  CHECK(code_of([&] { cls_restore(blurred, null_psf, 0.0); }) ==
        Errc::ill_conditioned);
}

TEST_CASE("cls: DC passthrough on constant images") {
  const GrayImage constant(16, 16, std::vector<int>(256, 100));
  const BlurKernel identity = motion_blur_psf(1, 0.0);
  for (double gamma : {0.0, 0.01, 0.5, 10.0}) {
    const GrayImage out = cls_restore(constant, identity, gamma);
    for (int v : out.pixels()) CHECK(std::abs(v - 100) <= 1);
  }
}

TEST_CASE("cls: negative gamma is rejected; best grid gamma beats inverse") {
  const GrayImage print = synth_print_tones(123, 128, 128, 40, 220);
  const BlurKernel psf = motion_blur_psf(7, 0.0);
  CHECK(code_of([&] { cls_restore(print, psf, -1.0); }) == Errc::negative_gamma);

  const GrayImage noisy = degrade(print, psf, 0.01, 42);
  const double inverse_db = psnr(wiener_restore(noisy, psf, 0.0), print);
  double best = -1e9;
  for (double gamma : {1e-4, 1e-3, 1e-2, 1e-1}) {
    best = std::max(best, psnr(cls_restore(noisy, psf, gamma), print));
  }
  CHECK(best > inverse_db);
}

TEST_CASE("restore dispatch follows the method field") {
  const GrayImage print = synth_print_tones(9, 64, 64, 40, 220);
  const BlurKernel psf = motion_blur_psf(3, 0.0);
  const GrayImage blurred = degrade(print, psf, 0.01, 1);
  RestorationParams params;
  params.method = RestorationMethod::wiener;
  params.k = 0.02;
  CHECK(restore(blurred, psf, params) == wiener_restore(blurred, psf, 0.02));
  params.method = RestorationMethod::cls;
  params.gamma = 0.03;
  CHECK(restore(blurred, psf, params) == cls_restore(blurred, psf, 0.03));
}

TEST_CASE("psnr: pinned examples and error cases") {
  CHECK(psnr(GrayImage(1, 1, {0}), GrayImage(1, 1, {255})) == doctest::Approx(0.0));
  CHECK(psnr(GrayImage(2, 1, {0, 0}), GrayImage(2, 1, {0, 255})) ==
        doctest::Approx(3.0103).epsilon(1e-4));
  CHECK(code_of([] { psnr(GrayImage(1, 1, {7}), GrayImage(1, 1, {7})); }) ==
        Errc::identical_images);
  CHECK(code_of([] { psnr(GrayImage(1, 1, {7}), GrayImage(1, 2, {7, 8})); }) ==
        Errc::dimension_mismatch);
}

TEST_CASE("restoration outputs always satisfy image invariants") {
  std::mt19937_64 rng(10004);
  const GrayImage img = oracle::random_gray(rng, 48, 32);
  const BlurKernel psf = motion_blur_psf(7, 60.0);
  for (const GrayImage& out :
       {degrade(img, psf, 0.05, 1), wiener_restore(img, psf, 0.01),
        cls_restore(img, psf, 0.01)}) {
    CHECK(out.width() == img.width());
    CHECK(out.height() == img.height());
    for (int v : out.pixels()) {
      CHECK(v >= 0);
      CHECK(v <= 255);
    }
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "soleidx/error.hpp"
#include "soleidx/fft.hpp"

using namespace soleidx;

namespace {

double max_abs_diff(const std::vector<std::complex<double>>& a,
                    const std::vector<std::complex<double>>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]));
  }
  return worst;
}

}  // namespace

TEST_CASE("fft2: unit impulse has a flat spectrum") {
  std::vector<double> values(64, 0.0);
  values[0] = 1.0;
  const Spectrum spec = fft2(RealPlane(8, 8, std::move(values)));
  for (const auto& bin : spec.data) {
    CHECK(std::abs(bin - std::complex<double>(1.0, 0.0)) < 1e-12);
  }
}

TEST_CASE("fft2: constant plane concentrates at DC") {
  const double c = 0.7;
  const int n = 12 * 5;
  const Spectrum spec = fft2(RealPlane(12, 5, std::vector<double>(n, c)));
  CHECK(std::abs(spec.data[0] - std::complex<double>(c * n, 0.0)) < 1e-9 * c * n);
  for (std::size_t i = 1; i < spec.data.size(); ++i) {
    CHECK(std::abs(spec.data[i]) < 1e-9 * c * n);
  }
}

TEST_CASE("fft2 matches the direct DFT oracle on small planes") {
  std::mt19937_64 rng(9001);
  for (const auto [w, h] : std::vector<std::pair<int, int>>{
           {1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 7}, {8, 8}, {6, 10},
           {9, 12}, {13, 11}, {16, 16}, {1, 16}, {15, 1}}) {
    const RealPlane plane = oracle::random_plane(rng, w, h);
    const Spectrum spec = fft2(plane);
    CHECK(max_abs_diff(spec.data, oracle::direct_dft2(plane)) < 1e-9);
  }
}

TEST_CASE("roundtrip: ifft2(fft2(x)) == x") {
  std::mt19937_64 rng(9002);
  for (const auto [w, h] : std::vector<std::pair<int, int>>{
           {16, 16}, {12, 9}, {7, 5}, {1, 1}, {1, 8}, {5, 1}, {32, 24}}) {
    const RealPlane plane = oracle::random_plane(rng, w, h);
    const RealPlane back = ifft2(fft2(plane));
    for (std::size_t i = 0; i < plane.values().size(); ++i) {
      CHECK(std::abs(back.values()[i] - plane.values()[i]) < 1e-9);
    }
  }
}

TEST_CASE("parseval: energy matches between domains") {
  std::mt19937_64 rng(9003);
  for (const auto [w, h] : std::vector<std::pair<int, int>>{{64, 64}, {48, 48}, {33, 57}}) {
    const RealPlane plane = oracle::random_plane(rng, w, h);
    double spatial = 0.0;
    for (double v : plane.values()) spatial += v * v;
    double spectral = 0.0;
    for (const auto& bin : fft2(plane).data) spectral += std::norm(bin);
    spectral /= double(w) * double(h);
    CHECK(std::abs(spectral - spatial) < 1e-6 * spatial);
  }
}

TEST_CASE("linearity of the forward transform") {
  std::mt19937_64 rng(9004);
  const double a = 1.75, b = -0.4;
  for (const auto [w, h] : std::vector<std::pair<int, int>>{{16, 8}, {12, 9}}) {
    const RealPlane x = oracle::random_plane(rng, w, h);
    const RealPlane y = oracle::random_plane(rng, w, h);
    std::vector<double> mix(x.values().size());
    for (std::size_t i = 0; i < mix.size(); ++i) {
      mix[i] = a * x.values()[i] + b * y.values()[i];
    }
    const Spectrum fx = fft2(x);
    const Spectrum fy = fft2(y);
    const Spectrum fmix = fft2(RealPlane(w, h, std::move(mix)));
    for (std::size_t i = 0; i < fmix.data.size(); ++i) {
      CHECK(std::abs(fmix.data[i] - (a * fx.data[i] + b * fy.data[i])) < 1e-9);
    }
  }
}

TEST_CASE("ifft2 rejects spectra of non-real signals") {
  Spectrum spec;
  spec.width = 4;
  spec.height = 4;
  spec.data.assign(16, {0.0, 0.0});
  spec.data[1] = {1.0, 0.0};  // no conjugate partner at bin 3
  CHECK_THROWS_AS(ifft2(spec), Error);
  try {
    ifft2(spec);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::non_real_result);
  }
}

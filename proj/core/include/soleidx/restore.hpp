#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

#include "soleidx/image.hpp"

namespace soleidx {

// Spatial point-spread function with unit mass and an odd bounding box, so
// the center cell is well defined. Row 0 is the top row.
class BlurKernel {
 public:
  BlurKernel(int width, int height, std::vector<double> weights);

  int width() const { return width_; }
  int height() const { return height_; }
  double at(int x, int y) const { return weights_[std::size_t(y) * width_ + x]; }
  const std::vector<double>& weights() const { return weights_; }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<double> weights_;
};

enum class RestorationMethod { wiener, cls };

RestorationMethod parse_method(std::string_view name);  // "wiener" | "cls"

struct RestorationParams {
  RestorationMethod method = RestorationMethod::wiener;
  double k = 0.01;      // Wiener noise-to-signal constant
  double gamma = 0.01;  // CLS regularization weight
};

// Motion-blur PSF: a line of exactly `len` cells through the kernel center
// at angle_deg (counterclockwise, 0 deg = +x, 90 deg = up, toward smaller
// row indices), each covered cell weighted 1/len. DDA rasterization with one
// cell per step of the major axis; the bounding box is the smallest odd x odd
// box centered on the middle cell that contains the line.
BlurKernel motion_blur_psf(int len, double angle_deg);

// Blur-and-add-noise simulator. The image is scaled to [0,1], circularly
// convolved with the PSF via FFT (PSF zero-padded to image size with its
// center wrapped to the origin), Gaussian noise N(0, sigma^2) is added, and
// the result is clamped and requantized. Deterministic for a fixed seed: the
// noise stream is pinned to one std::mt19937_64 draw pair per pixel in
// row-major order, mapped through Box-Muller (cosine branch only).
GrayImage degrade(const GrayImage& img, const BlurKernel& psf,
                  double noise_sigma, std::uint64_t seed);

// Parametric Wiener deconvolution: F = conj(H)/(|H|^2 + k) * G.
// k == 0 is the plain inverse filter and requires min|H|^2 >= 1e-12.
GrayImage wiener_restore(const GrayImage& img, const BlurKernel& psf, double k);

// Constrained least squares: F = conj(H)/(|H|^2 + gamma |P|^2) * G with P the
// spectrum of the discrete Laplacian [[0,-1,0],[-1,4,-1],[0,-1,0]]. P(0,0)=0,
// so unit-mass PSFs keep a DC gain of 1. gamma == 0 degenerates to the same
// arithmetic as wiener_restore with k == 0.
GrayImage cls_restore(const GrayImage& img, const BlurKernel& psf, double gamma);

// Dispatch on params.method.
GrayImage restore(const GrayImage& img, const BlurKernel& psf,
                  const RestorationParams& params);

// 10*log10((L-1)^2 / MSE) in dB. Identical images are signalled with
// IdenticalImages rather than returning infinity.
double psnr(const GrayImage& a, const GrayImage& b);

}  // namespace soleidx

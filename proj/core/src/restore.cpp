#include "soleidx/restore.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>

#include "soleidx/error.hpp"
#include "soleidx/fft.hpp"
#include "soleidx/util.hpp"

namespace soleidx {

namespace {

using cd = std::complex<double>;

struct Cell {
  int x;
  int y;
};

// Zero-pad a kernel to W x H and circularly shift it so the kernel center
// lands at index (0,0). With this placement blur and deblur are exact
// inverses in the noiseless case; wrap-around at the borders is accepted.
RealPlane embed_centered(const std::vector<double>& weights, int kw, int kh,
                         int width, int height) {
  std::vector<double> plane(std::size_t(width) * std::size_t(height), 0.0);
  const int cx = kw / 2;
  const int cy = kh / 2;
  for (int y = 0; y < kh; ++y) {
    for (int x = 0; x < kw; ++x) {
      const double w = weights[std::size_t(y) * kw + x];
      if (w == 0.0) continue;
      const int px = ((x - cx) % width + width) % width;
      const int py = ((y - cy) % height + height) % height;
      plane[std::size_t(py) * width + px] += w;
    }
  }
  return RealPlane(width, height, std::move(plane));
}

RealPlane embed_kernel(const BlurKernel& psf, int width, int height) {
  return embed_centered(psf.weights(), psf.width(), psf.height(), width, height);
}

// conj(H) / (|H|^2 + reg) * G, inverse-transformed, clamped, quantized.
// A denominator below 1e-12 anywhere means the filter is effectively
// dividing by zero; that is the IllConditioned case.
GrayImage apply_inverse_filter(const GrayImage& img, const Spectrum& h,
                               const std::vector<double>& reg) {
  const Spectrum g = fft2(gray_to_plane(img));
  Spectrum f;
  f.width = g.width;
  f.height = g.height;
  f.data.resize(g.data.size());
  for (std::size_t i = 0; i < g.data.size(); ++i) {
    const cd hv = h.data[i];
    const double denom = std::norm(hv) + reg[i];
    if (denom < 1e-12) {
      throw Error(Errc::ill_conditioned,
                  "restoration filter denominator vanishes (min " +
                      format_double(denom) + ")");
    }
    f.data[i] = std::conj(hv) * g.data[i] / denom;
  }
  return plane_to_gray(ifft2(f), img.levels());
}

}  // namespace

BlurKernel::BlurKernel(int width, int height, std::vector<double> weights)
    : width_(width), height_(height), weights_(std::move(weights)) {
  if (width_ < 1 || height_ < 1 || width_ % 2 == 0 || height_ % 2 == 0) {
    throw std::invalid_argument("BlurKernel: dimensions must be odd and positive");
  }
  if (weights_.size() != std::size_t(width_) * std::size_t(height_)) {
    throw std::invalid_argument("BlurKernel: weight count does not match dimensions");
  }
  double sum = 0.0;
  for (double w : weights_) {
    if (!(w >= 0.0)) {
      throw std::invalid_argument("BlurKernel: weights must be non-negative");
    }
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-12) {
    throw std::invalid_argument("BlurKernel: weights must sum to 1");
  }
}

RestorationMethod parse_method(std::string_view name) {
  if (name == "wiener") return RestorationMethod::wiener;
  if (name == "cls") return RestorationMethod::cls;
  throw std::invalid_argument("unknown restoration method '" + std::string(name) + "'");
}

BlurKernel motion_blur_psf(int len, double angle_deg) {
  if (len < 1) {
    throw Error(Errc::invalid_length, "motion blur length must be at least 1");
  }
  const double rad = angle_deg * std::numbers::pi / 180.0;
  const double c = std::cos(rad);
  const double s = std::sin(rad);

  // One cell per step of the major axis, offset i - (len-1)/2 so the line
  // passes through the origin cell. Angles are counterclockwise with +y up,
  // so the y offset is negated when mapped to rows.
  std::vector<Cell> cells;
  cells.reserve(std::size_t(len));
  const int anchor = (len - 1) / 2;
  if (std::abs(c) >= std::abs(s)) {
    const double slope = s / c;
    for (int i = 0; i < len; ++i) {
      const int mx = i - anchor;
      cells.push_back({mx, int(round_half_away(mx * slope))});
    }
  } else {
    const double slope = c / s;
    for (int i = 0; i < len; ++i) {
      const int my = i - anchor;
      cells.push_back({int(round_half_away(my * slope)), my});
    }
  }

  int half_w = 0;
  int half_h = 0;
  for (const Cell& cell : cells) {
    half_w = std::max(half_w, std::abs(cell.x));
    half_h = std::max(half_h, std::abs(cell.y));
  }
  const int kw = 2 * half_w + 1;
  const int kh = 2 * half_h + 1;

  std::vector<double> weights(std::size_t(kw) * std::size_t(kh), 0.0);
  const double w = 1.0 / len;
  for (const Cell& cell : cells) {
    const int col = half_w + cell.x;
    const int row = half_h - cell.y;  // +y up -> smaller row index
    weights[std::size_t(row) * kw + col] += w;
  }
  return BlurKernel(kw, kh, std::move(weights));
}

GrayImage degrade(const GrayImage& img, const BlurKernel& psf,
                  double noise_sigma, std::uint64_t seed) {
  if (img.empty()) {
    throw Error(Errc::empty_image, "cannot degrade an empty image");
  }
  if (psf.width() > img.width() || psf.height() > img.height()) {
    throw Error(Errc::kernel_too_large, "PSF does not fit inside the image");
  }
  if (noise_sigma < 0.0) {
    throw std::invalid_argument("noise sigma must be non-negative");
  }

  const Spectrum g = fft2(gray_to_plane(img));
  const Spectrum h = fft2(embed_kernel(psf, img.width(), img.height()));
  Spectrum blurred;
  blurred.width = g.width;
  blurred.height = g.height;
  blurred.data.resize(g.data.size());
  for (std::size_t i = 0; i < g.data.size(); ++i) {
    blurred.data[i] = g.data[i] * h.data[i];
  }
  RealPlane plane = ifft2(blurred);

  if (noise_sigma > 0.0) {
    std::mt19937_64 rng(seed);
    constexpr double kTwoPi = 2.0 * std::numbers::pi;
    for (double& v : plane.values()) {
      // Box-Muller, cosine branch; u1 in (0,1], u2 in [0,1). Pinned here so
      // degrade is reproducible wherever mt19937_64 is.
      const double u1 = double((rng() >> 11) + 1) * 0x1.0p-53;
      const double u2 = double(rng() >> 11) * 0x1.0p-53;
      v += noise_sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(kTwoPi * u2);
    }
  }
  return plane_to_gray(plane, img.levels());
}

GrayImage wiener_restore(const GrayImage& img, const BlurKernel& psf, double k) {
  if (k < 0.0) {
    throw Error(Errc::negative_k, "Wiener constant k must be non-negative");
  }
  if (img.empty()) {
    throw Error(Errc::empty_image, "cannot restore an empty image");
  }
  const Spectrum h = fft2(embed_kernel(psf, img.width(), img.height()));
  std::vector<double> reg(h.data.size(), k);
  return apply_inverse_filter(img, h, reg);
}

GrayImage cls_restore(const GrayImage& img, const BlurKernel& psf, double gamma) {
  if (gamma < 0.0) {
    throw Error(Errc::negative_gamma, "CLS weight gamma must be non-negative");
  }
  if (img.empty()) {
    throw Error(Errc::empty_image, "cannot restore an empty image");
  }
  const Spectrum h = fft2(embed_kernel(psf, img.width(), img.height()));

  static const std::vector<double> laplacian = {0, -1, 0, -1, 4, -1, 0, -1, 0};
  const Spectrum p =
      fft2(embed_centered(laplacian, 3, 3, img.width(), img.height()));
  std::vector<double> reg(h.data.size());
  for (std::size_t i = 0; i < reg.size(); ++i) {
    reg[i] = gamma * std::norm(p.data[i]);
  }
  return apply_inverse_filter(img, h, reg);
}

GrayImage restore(const GrayImage& img, const BlurKernel& psf,
                  const RestorationParams& params) {
  return params.method == RestorationMethod::wiener
             ? wiener_restore(img, psf, params.k)
             : cls_restore(img, psf, params.gamma);
}

double psnr(const GrayImage& a, const GrayImage& b) {
  if (a.width() != b.width() || a.height() != b.height() ||
      a.levels() != b.levels()) {
    throw Error(Errc::dimension_mismatch, "PSNR needs images of identical shape");
  }
  std::int64_t sq_sum = 0;
  for (std::size_t i = 0; i < a.pixels().size(); ++i) {
    const std::int64_t d = a.pixels()[i] - b.pixels()[i];
    sq_sum += d * d;
  }
  if (sq_sum == 0) {
    throw Error(Errc::identical_images, "PSNR is undefined for identical images");
  }
  const double mse = double(sq_sum) / double(a.pixel_count());
  const double peak = double(a.levels() - 1);
  return 10.0 * std::log10(peak * peak / mse);
}

}  // namespace soleidx

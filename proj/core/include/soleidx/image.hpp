#pragma once

#include <cstdint>
#include <vector>

namespace soleidx {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  friend bool operator==(const Rgb&, const Rgb&) = default;
};

// 24-bit color raster, row-major with row 0 at the top. Always non-empty.
class RgbImage {
 public:
  RgbImage(int width, int height, std::vector<Rgb> pixels);

  int width() const { return width_; }
  int height() const { return height_; }
  const Rgb& at(int x, int y) const { return pixels_[std::size_t(y) * width_ + x]; }
  const std::vector<Rgb>& pixels() const { return pixels_; }

  friend bool operator==(const RgbImage&, const RgbImage&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<Rgb> pixels_;
};

// Grayscale raster with a configurable level count L (default 256). Pixels
// are integers in [0, L-1], row-major, row 0 at the top. A 0x0 image is a
// representable value; operations that need content reject it with
// EmptyImage.
class GrayImage {
 public:
  GrayImage() = default;
  GrayImage(int width, int height, std::vector<int> pixels, int levels = 256);

  int width() const { return width_; }
  int height() const { return height_; }
  int levels() const { return levels_; }
  bool empty() const { return pixels_.empty(); }
  std::int64_t pixel_count() const { return std::int64_t(width_) * height_; }
  int at(int x, int y) const { return pixels_[std::size_t(y) * width_ + x]; }
  const std::vector<int>& pixels() const { return pixels_; }

  friend bool operator==(const GrayImage&, const GrayImage&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  int levels_ = 256;
  std::vector<int> pixels_;
};

// Segmentation output: every pixel is 0 or 255.
class BinaryImage {
 public:
  BinaryImage(int width, int height, std::vector<int> pixels);

  int width() const { return width_; }
  int height() const { return height_; }
  int at(int x, int y) const { return pixels_[std::size_t(y) * width_ + x]; }
  const std::vector<int>& pixels() const { return pixels_; }

  GrayImage to_gray() const { return GrayImage(width_, height_, pixels_); }

  friend bool operator==(const BinaryImage&, const BinaryImage&) = default;

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<int> pixels_;
};

// Real-valued workspace for frequency-domain math. Image content lives in
// [0,1]; intermediates are unconstrained but must stay finite.
class RealPlane {
 public:
  RealPlane(int width, int height, std::vector<double> values);

  int width() const { return width_; }
  int height() const { return height_; }
  double at(int x, int y) const { return values_[std::size_t(y) * width_ + x]; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

 private:
  int width_ = 0;
  int height_ = 0;
  std::vector<double> values_;
};

// Scale pixel values to [0,1] by dividing by L-1.
RealPlane gray_to_plane(const GrayImage& img);

// Clamp to [0,1] and quantize with the project rounding rule
// (round half away from zero).
GrayImage plane_to_gray(const RealPlane& plane, int levels = 256);

}  // namespace soleidx

#include "soleidx/image.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "soleidx/util.hpp"

namespace soleidx {

namespace {

void check_size(int width, int height, std::size_t n, const char* what) {
  if (width < 0 || height < 0 ||
      n != std::size_t(width) * std::size_t(height)) {
    throw std::invalid_argument(std::string(what) + ": pixel count does not match dimensions");
  }
}

}  // namespace

RgbImage::RgbImage(int width, int height, std::vector<Rgb> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  if (width_ < 1 || height_ < 1) {
    throw std::invalid_argument("RgbImage: dimensions must be at least 1x1");
  }
  check_size(width_, height_, pixels_.size(), "RgbImage");
}

GrayImage::GrayImage(int width, int height, std::vector<int> pixels, int levels)
    : width_(width), height_(height), levels_(levels), pixels_(std::move(pixels)) {
  check_size(width_, height_, pixels_.size(), "GrayImage");
  if (levels_ < 2) {
    throw std::invalid_argument("GrayImage: levels must be at least 2");
  }
  for (int v : pixels_) {
    if (v < 0 || v >= levels_) {
      throw std::invalid_argument("GrayImage: pixel value outside [0, L-1]");
    }
  }
}

BinaryImage::BinaryImage(int width, int height, std::vector<int> pixels)
    : width_(width), height_(height), pixels_(std::move(pixels)) {
  check_size(width_, height_, pixels_.size(), "BinaryImage");
  for (int v : pixels_) {
    if (v != 0 && v != 255) {
      throw std::invalid_argument("BinaryImage: pixel value must be 0 or 255");
    }
  }
}

RealPlane::RealPlane(int width, int height, std::vector<double> values)
    : width_(width), height_(height), values_(std::move(values)) {
  check_size(width_, height_, values_.size(), "RealPlane");
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("RealPlane: values must be finite");
    }
  }
}

RealPlane gray_to_plane(const GrayImage& img) {
  const double scale = 1.0 / (img.levels() - 1);
  std::vector<double> values(img.pixels().size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = img.pixels()[i] * scale;
  }
  return RealPlane(img.width(), img.height(), std::move(values));
}

GrayImage plane_to_gray(const RealPlane& plane, int levels) {
  std::vector<int> pixels(plane.values().size());
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    double v = plane.values()[i];
    if (v < 0.0) v = 0.0;
    if (v > 1.0) v = 1.0;
    pixels[i] = int(round_half_away(v * (levels - 1)));
  }
  return GrayImage(plane.width(), plane.height(), std::move(pixels), levels);
}

}  // namespace soleidx

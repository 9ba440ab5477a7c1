#include "soleidx/enhance.hpp"

#include <stdexcept>

#include "soleidx/error.hpp"
#include "soleidx/util.hpp"

namespace soleidx {

Histogram compute_histogram(const GrayImage& img) {
  if (img.empty()) {
    throw Error(Errc::empty_image, "cannot build a histogram of an empty image");
  }
  Histogram h;
  h.levels = img.levels();
  h.counts.assign(std::size_t(h.levels), 0);
  for (int v : img.pixels()) {
    ++h.counts[std::size_t(v)];
  }
  h.total = img.pixel_count();
  return h;
}

TransferFunction equalization_map(const Histogram& hist) {
  if (hist.counts.size() != std::size_t(hist.levels)) {
    throw std::invalid_argument("Histogram: counts size does not match levels");
  }
  if (hist.total <= 0) {
    throw Error(Errc::empty_histogram, "equalization needs at least one sample");
  }
  TransferFunction tf;
  tf.levels = hist.levels;
  tf.map.resize(std::size_t(hist.levels));
  std::int64_t cum = 0;
  for (int r = 0; r < hist.levels; ++r) {
    cum += hist.counts[std::size_t(r)];
    // map[r] = round((L-1) * CDF(r)); the single division keeps one rounding.
    tf.map[std::size_t(r)] =
        int(round_half_away((hist.levels - 1.0) * double(cum) / double(hist.total)));
  }
  return tf;
}

GrayImage apply_map(const GrayImage& img, const TransferFunction& tf) {
  if (tf.levels != img.levels()) {
    throw std::invalid_argument("TransferFunction: levels mismatch");
  }
  std::vector<int> out(img.pixels().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = tf.map[std::size_t(img.pixels()[i])];
  }
  return GrayImage(img.width(), img.height(), std::move(out), img.levels());
}

GrayImage equalize(const GrayImage& img) {
  return apply_map(img, equalization_map(compute_histogram(img)));
}

}  // namespace soleidx

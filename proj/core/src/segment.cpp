#include "soleidx/segment.hpp"

#include <stdexcept>

#include "soleidx/error.hpp"

namespace soleidx {

OtsuResult otsu_threshold(const Histogram& hist) {
  if (hist.counts.size() != std::size_t(hist.levels)) {
    throw std::invalid_argument("Histogram: counts size does not match levels");
  }
  if (hist.total <= 0) {
    throw Error(Errc::empty_histogram, "cannot threshold an empty histogram");
  }
  int occupied = 0;
  std::int64_t moment_total = 0;
  for (int v = 0; v < hist.levels; ++v) {
    if (hist.counts[std::size_t(v)] > 0) ++occupied;
    moment_total += std::int64_t(v) * hist.counts[std::size_t(v)];
  }
  if (occupied < 2) {
    throw Error(Errc::degenerate_histogram,
                "threshold selection needs at least two occupied bins");
  }

  // One pass over candidate thresholds with running class sums. Candidates
  // that leave a class empty score 0 and can never win (two occupied bins
  // guarantee a strictly positive maximum).
  const double n_total = double(hist.total);
  std::int64_t n0 = 0;
  std::int64_t m0 = 0;
  int best_t = -1;
  double best_sigma = -1.0;
  for (int t = 0; t + 1 < hist.levels; ++t) {
    n0 += hist.counts[std::size_t(t)];
    m0 += std::int64_t(t) * hist.counts[std::size_t(t)];
    const std::int64_t n1 = hist.total - n0;
    if (n0 == 0 || n1 == 0) continue;
    const double w0 = double(n0) / n_total;
    const double w1 = double(n1) / n_total;
    const double mu0 = double(m0) / double(n0);
    const double mu1 = double(moment_total - m0) / double(n1);
    const double diff = mu0 - mu1;
    const double sigma = w0 * w1 * diff * diff;
    if (sigma > best_sigma) {  // strict: ties keep the smallest t
      best_sigma = sigma;
      best_t = t;
    }
  }

  OtsuResult result;
  result.t = best_t;
  result.levels = hist.levels;
  result.tau = double(best_t) / double(hist.levels - 1);
  result.sigma_b2 = best_sigma;
  return result;
}

BinaryImage binarize(const GrayImage& img, int t) {
  if (t < 0 || t > img.levels() - 2) {
    throw Error(Errc::threshold_out_of_range,
                "threshold " + std::to_string(t) + " outside [0, L-2]");
  }
  std::vector<int> out(img.pixels().size());
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = img.pixels()[i] <= t ? 0 : 255;
  }
  return BinaryImage(img.width(), img.height(), std::move(out));
}

OtsuResult global_threshold_index(const GrayImage& img) {
  return otsu_threshold(compute_histogram(img));
}

}  // namespace soleidx

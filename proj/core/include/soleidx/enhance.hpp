#pragma once

#include <cstdint>
#include <vector>

#include "soleidx/image.hpp"

namespace soleidx {

struct Histogram {
  int levels = 256;
  std::vector<std::int64_t> counts;  // size == levels
  std::int64_t total = 0;            // == sum of counts == pixel count
};

// Monotone gray-level map; map[r] in [0, levels-1].
struct TransferFunction {
  int levels = 256;
  std::vector<int> map;
};

Histogram compute_histogram(const GrayImage& img);

// Equalization transfer function: map[r] = round((L-1) * CDF(r)), rounded
// half away from zero. The CDF is cumulative counts over the total, so the
// largest occupied bin always maps to L-1.
TransferFunction equalization_map(const Histogram& hist);

GrayImage apply_map(const GrayImage& img, const TransferFunction& tf);

// Histogram equalization of a whole image; dimensions and levels preserved.
GrayImage equalize(const GrayImage& img);

}  // namespace soleidx

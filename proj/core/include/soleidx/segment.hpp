#pragma once

#include "soleidx/enhance.hpp"
#include "soleidx/image.hpp"

namespace soleidx {

struct OtsuResult {
  int t = 0;             // chosen threshold, in [0, levels-2]
  int levels = 256;
  double tau = 0.0;      // t / (levels - 1), the catalog index key
  double sigma_b2 = 0.0; // between-class variance at t, > 0
};

// Otsu's method: t maximizes sigma_B^2(t) = w0 w1 (mu0 - mu1)^2 over
// t in [0, L-2], class 0 holding levels <= t. Candidates with an empty class
// score 0; ties resolve to the smallest maximizing t. Needs at least two
// occupied bins.
OtsuResult otsu_threshold(const Histogram& hist);

// pixel <= t -> 0, pixel > t -> 255.
BinaryImage binarize(const GrayImage& img, int t);

// otsu_threshold(compute_histogram(img)); the scalar index of a print.
OtsuResult global_threshold_index(const GrayImage& img);

}  // namespace soleidx

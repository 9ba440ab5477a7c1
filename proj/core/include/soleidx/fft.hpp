#pragma once

#include <complex>
#include <vector>

#include "soleidx/image.hpp"

namespace soleidx {

// Frequency-domain grid, row-major, same layout as the plane it came from.
struct Spectrum {
  int width = 0;
  int height = 0;
  std::vector<std::complex<double>> data;
};

// Forward 2-D DFT, unnormalized. Any width/height is supported: power-of-two
// axes run iterative radix-2 Cooley-Tukey, everything else goes through
// Bluestein's chirp transform.
Spectrum fft2(const RealPlane& plane);

// Inverse 2-D DFT carrying the 1/(W*H) factor. The input must be the spectrum
// of a real signal: an imaginary residue above 1e-9 of the result magnitude
// raises NonRealResult, smaller residues are discarded.
RealPlane ifft2(const Spectrum& spec);

}  // namespace soleidx

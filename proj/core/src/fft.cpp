#include "soleidx/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "soleidx/error.hpp"

namespace soleidx {

namespace {

using cd = std::complex<double>;

bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Iterative radix-2 Cooley-Tukey, in place, unnormalized. sign = -1 forward.
void fft_pow2(cd* a, int n, int sign) {
  for (int i = 1, j = 0; i < n; ++i) {
    int bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (int len = 2; len <= n; len <<= 1) {
    const double base = sign * 2.0 * std::numbers::pi / len;
    for (int i = 0; i < n; i += len) {
      for (int j = 0; j < len / 2; ++j) {
        // Direct twiddle per butterfly avoids the error growth of the
        // w *= wlen recurrence.
        const cd w = std::polar(1.0, base * j);
        const cd u = a[i + j];
        const cd v = a[i + j + len / 2] * w;
        a[i + j] = u + v;
        a[i + j + len / 2] = u - v;
      }
    }
  }
}

// Bluestein's chirp transform for arbitrary n, unnormalized. Re-expresses
// the DFT as a circular convolution of length m (a power of two >= 2n-1).
void fft_bluestein(cd* a, int n, int sign) {
  int m = 1;
  while (m < 2 * n - 1) m <<= 1;

  std::vector<cd> chirp(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) {
    // k^2 mod 2n keeps the twiddle argument small without changing e^{i pi
    // k^2 / n}.
    const long long sq = (1LL * k * k) % (2LL * n);
    chirp[std::size_t(k)] = std::polar(1.0, sign * std::numbers::pi * double(sq) / n);
  }

  std::vector<cd> x(std::size_t(m), cd{});
  std::vector<cd> y(std::size_t(m), cd{});
  for (int k = 0; k < n; ++k) {
    x[std::size_t(k)] = a[k] * chirp[std::size_t(k)];
  }
  y[0] = std::conj(chirp[0]);
  for (int k = 1; k < n; ++k) {
    y[std::size_t(k)] = y[std::size_t(m - k)] = std::conj(chirp[std::size_t(k)]);
  }

  fft_pow2(x.data(), m, -1);
  fft_pow2(y.data(), m, -1);
  for (int i = 0; i < m; ++i) x[std::size_t(i)] *= y[std::size_t(i)];
  fft_pow2(x.data(), m, +1);
  const double inv_m = 1.0 / m;

  for (int k = 0; k < n; ++k) {
    a[k] = x[std::size_t(k)] * inv_m * chirp[std::size_t(k)];
  }
}

// Unnormalized 1-D transform of length n; sign = -1 forward, +1 inverse.
void transform(cd* a, int n, int sign) {
  if (n <= 1) return;
  if (is_pow2(n)) {
    fft_pow2(a, n, sign);
  } else {
    fft_bluestein(a, n, sign);
  }
}

// Row transforms in place, then column transforms through a stride buffer.
void transform_2d(std::vector<cd>& data, int width, int height, int sign) {
  for (int y = 0; y < height; ++y) {
    transform(data.data() + std::size_t(y) * width, width, sign);
  }
  std::vector<cd> column(static_cast<std::size_t>(height));
  for (int x = 0; x < width; ++x) {
    for (int y = 0; y < height; ++y) {
      column[std::size_t(y)] = data[std::size_t(y) * width + x];
    }
    transform(column.data(), height, sign);
    for (int y = 0; y < height; ++y) {
      data[std::size_t(y) * width + x] = column[std::size_t(y)];
    }
  }
}

}  // namespace

Spectrum fft2(const RealPlane& plane) {
  Spectrum spec;
  spec.width = plane.width();
  spec.height = plane.height();
  spec.data.assign(plane.values().begin(), plane.values().end());
  transform_2d(spec.data, spec.width, spec.height, -1);
  return spec;
}

RealPlane ifft2(const Spectrum& spec) {
  if (spec.data.size() != std::size_t(spec.width) * std::size_t(spec.height)) {
    throw std::invalid_argument("Spectrum: bin count does not match dimensions");
  }
  std::vector<cd> data = spec.data;
  transform_2d(data, spec.width, spec.height, +1);
  const double scale = 1.0 / (double(spec.width) * double(spec.height));

  double max_mag = 0.0;
  double max_imag = 0.0;
  for (auto& z : data) {
    z *= scale;
    max_mag = std::max(max_mag, std::abs(z));
    max_imag = std::max(max_imag, std::abs(z.imag()));
  }
  if (max_imag > 1e-9 * max_mag) {
    throw Error(Errc::non_real_result,
                "inverse transform is not real (relative imaginary residue " +
                    std::to_string(max_imag / max_mag) + ")");
  }

  std::vector<double> values(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) {
    values[i] = data[i].real();
  }
  return RealPlane(spec.width, spec.height, std::move(values));
}

}  // namespace soleidx

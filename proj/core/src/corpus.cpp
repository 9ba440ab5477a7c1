#include "soleidx/corpus.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace soleidx {

namespace {

// All randomness below is integer-only on top of std::mt19937_64, whose
// output stream is fixed by the standard, so prints are byte-identical
// across platforms.
std::uint64_t pick(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

GrayImage draw_print(std::mt19937_64& rng, int width, int height, int dark,
                     int light) {
  std::vector<int> px(std::size_t(width) * std::size_t(height), light);

  const int margin = 3 + int(pick(rng, 3));
  const int min_dim = std::min(width, height);
  const int radius = min_dim / 6 + int(pick(rng, std::uint64_t(min_dim / 8 + 1)));

  // Sole outline: rectangle inset by the margin with circular corners.
  const int x0 = margin, y0 = margin;
  const int x1 = width - 1 - margin, y1 = height - 1 - margin;
  auto inside_sole = [&](int x, int y) {
    if (x < x0 || x > x1 || y < y0 || y > y1) return false;
    const int cx = x < x0 + radius ? x0 + radius : (x > x1 - radius ? x1 - radius : x);
    const int cy = y < y0 + radius ? y0 + radius : (y > y1 - radius ? y1 - radius : y);
    const int dx = x - cx;
    const int dy = y - cy;
    return dx * dx + dy * dy <= radius * radius;
  };

  // Tread pattern: bars, grid, dots or zigzag, with randomized period and
  // duty so per-image coverage varies.
  const int style = int(pick(rng, 4));
  const int period = 5 + int(pick(rng, 10));
  const int duty = 2 + int(pick(rng, std::uint64_t(period - 3)));
  const int phase = int(pick(rng, std::uint64_t(period)));
  const int orient = int(pick(rng, 3));
  const int grid_py = 6 + int(pick(rng, 8));
  const int grid_tx = 2 + int(pick(rng, 3));
  const int grid_ty = 2 + int(pick(rng, 3));
  const int dot_r = 2 + int(pick(rng, std::uint64_t(period / 3 + 1)));
  const int zig_amp = 3 + int(pick(rng, 5));

  auto tread = [&](int x, int y) {
    switch (style) {
      case 0: {  // bars
        const int key = orient == 0 ? y : (orient == 1 ? x : x + y);
        return (key + phase) % period < duty;
      }
      case 1:  // grid
        return (x + phase) % period < grid_tx || (y + phase) % grid_py < grid_ty;
      case 2: {  // dots
        const int dx = x % period - period / 2;
        const int dy = y % period - period / 2;
        return dx * dx + dy * dy <= dot_r * dot_r;
      }
      default: {  // zigzag
        const int tri = std::abs(x % (2 * zig_amp) - zig_amp);
        return (y + tri + phase) % period < duty;
      }
    }
  };

  for (int y = 0; y < height; ++y) {
    for (int x = 0; x < width; ++x) {
      if (inside_sole(x, y) && tread(x, y)) {
        px[std::size_t(y) * width + x] = dark;
      }
    }
  }

  // Punch a few light windows, like the lug gaps of a real outsole.
  const int holes = int(pick(rng, 4));
  for (int i = 0; i < holes; ++i) {
    const int hw = 4 + int(pick(rng, std::uint64_t(std::max(2, width / 6))));
    const int hh = 4 + int(pick(rng, std::uint64_t(std::max(2, height / 6))));
    const int hx = int(pick(rng, std::uint64_t(std::max(1, width - hw))));
    const int hy = int(pick(rng, std::uint64_t(std::max(1, height - hh))));
    for (int y = hy; y < std::min(height, hy + hh); ++y) {
      for (int x = hx; x < std::min(width, hx + hw); ++x) {
        px[std::size_t(y) * width + x] = light;
      }
    }
  }

  // Both tones must be present; if the windows erased every tread pixel,
  // stamp one central lug.
  if (std::find(px.begin(), px.end(), dark) == px.end()) {
    for (int y = height / 2 - 2; y <= height / 2 + 2; ++y) {
      for (int x = width / 2 - 2; x <= width / 2 + 2; ++x) {
        px[std::size_t(y) * width + x] = dark;
      }
    }
  }
  return GrayImage(width, height, std::move(px));
}

}  // namespace

GrayImage synth_print(std::uint64_t seed, int width, int height) {
  if (width < 32 || height < 32) {
    throw std::invalid_argument("synthetic prints need at least 32x32 pixels");
  }
  std::mt19937_64 rng(seed);
  const int dark = 25 + int(pick(rng, 66));    // [25, 90]
  const int light = 165 + int(pick(rng, 71));  // [165, 235]
  return draw_print(rng, width, height, dark, light);
}

GrayImage synth_print_tones(std::uint64_t seed, int width, int height,
                            int dark, int light) {
  if (width < 32 || height < 32) {
    throw std::invalid_argument("synthetic prints need at least 32x32 pixels");
  }
  if (dark < 0 || light > 255 || dark >= light) {
    throw std::invalid_argument("tones must satisfy 0 <= dark < light <= 255");
  }
  std::mt19937_64 rng(seed);
  return draw_print(rng, width, height, dark, light);
}

}  // namespace soleidx

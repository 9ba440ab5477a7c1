#pragma once

#include <cstdint>

#include "soleidx/image.hpp"

namespace soleidx {

// Synthetic two-tone sole print: a tread pattern (bars, grid, dots or
// zigzag) drawn inside a rounded-sole outline. Integer arithmetic over
// std::mt19937_64 only, so output is byte-identical across platforms for a
// fixed seed. Both tones are always present.
GrayImage synth_print(std::uint64_t seed, int width = 128, int height = 128);

// Same, with pinned tread/background tones (0 <= dark < light <= 255).
GrayImage synth_print_tones(std::uint64_t seed, int width, int height,
                            int dark, int light);

}  // namespace soleidx

#pragma once

#include <string>
#include <string_view>

#include "soleidx/image.hpp"

namespace soleidx {

// Byte-level codecs for the two interchange formats:
//
//   BMP  magic "BM", 54-byte header region (BITMAPFILEHEADER +
//        BITMAPINFOHEADER), 24 bits per pixel, no compression, rows stored
//        bottom-up with each row padded to a 4-byte boundary, channel order
//        B,G,R. Anything else is an explicit error, never a silent fallback.
//
//   PGM  "P5", ASCII width/height/maxval separated by whitespace ('#'
//        comments allowed), single whitespace byte before the raster,
//        maxval exactly 255.
//
// Decoders never read past the provided byte sequence.

RgbImage decode_bmp(std::string_view bytes);

GrayImage decode_pgm(std::string_view bytes);

// "P5\n<w> <h>\n255\n" followed by the raw raster. Requires levels == 256.
std::string encode_pgm(const GrayImage& img);

enum class ImageFormat { bmp, pgm, unknown };

ImageFormat sniff_format(std::string_view bytes);

// Sniff BMP vs PGM by magic and decode; color input is reduced to grayscale.
// Unrecognized magic raises DecodeFailed.
GrayImage decode_any_to_gray(std::string_view bytes);

// BT.601 luminance: round(0.299 r + 0.587 g + 0.114 b), half away from zero.
GrayImage to_grayscale(const RgbImage& img);

}  // namespace soleidx

#include "soleidx/codec.hpp"

#include <cstdint>

#include "soleidx/error.hpp"
#include "soleidx/util.hpp"

namespace soleidx {

namespace {

// Bounds-checked little-endian reads against the input span.
std::uint32_t read_u32(std::string_view b, std::size_t off) {
  return std::uint32_t(std::uint8_t(b[off])) |
         std::uint32_t(std::uint8_t(b[off + 1])) << 8 |
         std::uint32_t(std::uint8_t(b[off + 2])) << 16 |
         std::uint32_t(std::uint8_t(b[off + 3])) << 24;
}

std::uint16_t read_u16(std::string_view b, std::size_t off) {
  return std::uint16_t(std::uint8_t(b[off]) | std::uint8_t(b[off + 1]) << 8);
}

bool is_pgm_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

// Skips whitespace and '#' comments between PGM header tokens.
void skip_pgm_separators(std::string_view b, std::size_t& pos) {
  while (pos < b.size()) {
    if (is_pgm_space(b[pos])) {
      ++pos;
    } else if (b[pos] == '#') {
      while (pos < b.size() && b[pos] != '\n') ++pos;
    } else {
      return;
    }
  }
}

long parse_pgm_int(std::string_view b, std::size_t& pos) {
  skip_pgm_separators(b, pos);
  if (pos >= b.size() || b[pos] < '0' || b[pos] > '9') {
    throw Error(Errc::malformed_header, "PGM: expected an unsigned integer in the header");
  }
  long value = 0;
  while (pos < b.size() && b[pos] >= '0' && b[pos] <= '9') {
    value = value * 10 + (b[pos] - '0');
    if (value > 1000000000L) {
      throw Error(Errc::malformed_header, "PGM: header value out of range");
    }
    ++pos;
  }
  return value;
}

}  // namespace

RgbImage decode_bmp(std::string_view bytes) {
  // 14-byte file header + 40-byte BITMAPINFOHEADER.
  if (bytes.size() < 2 || bytes[0] != 'B' || bytes[1] != 'M') {
    throw Error(Errc::malformed_header, "BMP: magic is not 'BM'");
  }
  if (bytes.size() < 54) {
    throw Error(Errc::malformed_header, "BMP: truncated header");
  }
  const std::uint32_t data_offset = read_u32(bytes, 10);
  const std::uint32_t info_size = read_u32(bytes, 14);
  const std::int32_t width = std::int32_t(read_u32(bytes, 18));
  const std::int32_t height = std::int32_t(read_u32(bytes, 22));
  const std::uint16_t bit_count = read_u16(bytes, 28);
  const std::uint32_t compression = read_u32(bytes, 30);

  if (info_size != 40) {
    throw Error(Errc::unsupported_variant,
                "BMP: only BITMAPINFOHEADER (biSize=40) is supported");
  }
  if (bit_count != 24) {
    throw Error(Errc::unsupported_variant, "BMP: only 24-bit pixels are supported");
  }
  if (compression != 0) {
    throw Error(Errc::unsupported_variant, "BMP: compressed data is not supported");
  }
  if (height < 0) {
    throw Error(Errc::unsupported_variant, "BMP: top-down rows are not supported");
  }
  if (width < 1 || height < 1) {
    throw Error(Errc::malformed_header, "BMP: dimensions must be positive");
  }
  if (data_offset < 54) {
    throw Error(Errc::malformed_header, "BMP: pixel data offset overlaps the header");
  }

  const std::size_t row_stride = (std::size_t(width) * 3 + 3) / 4 * 4;
  const std::size_t needed = std::size_t(data_offset) + row_stride * std::size_t(height);
  if (bytes.size() < needed) {
    throw Error(Errc::truncated_data, "BMP: pixel array shorter than declared");
  }

  std::vector<Rgb> pixels(std::size_t(width) * std::size_t(height));
  for (std::int32_t y = 0; y < height; ++y) {
    // Rows are stored bottom-up; channel order in the file is B,G,R.
    const std::size_t row = data_offset + row_stride * std::size_t(height - 1 - y);
    for (std::int32_t x = 0; x < width; ++x) {
      const std::size_t p = row + std::size_t(x) * 3;
      pixels[std::size_t(y) * width + x] = Rgb{std::uint8_t(bytes[p + 2]),
                                               std::uint8_t(bytes[p + 1]),
                                               std::uint8_t(bytes[p])};
    }
  }
  return RgbImage(width, height, std::move(pixels));
}

GrayImage decode_pgm(std::string_view bytes) {
  if (bytes.size() < 2 || bytes[0] != 'P' || bytes[1] != '5') {
    throw Error(Errc::malformed_header, "PGM: magic is not 'P5'");
  }
  std::size_t pos = 2;
  if (pos < bytes.size() && !is_pgm_space(bytes[pos]) && bytes[pos] != '#') {
    throw Error(Errc::malformed_header, "PGM: magic must be followed by whitespace");
  }
  const long width = parse_pgm_int(bytes, pos);
  const long height = parse_pgm_int(bytes, pos);
  const long maxval = parse_pgm_int(bytes, pos);
  if (width < 1 || height < 1) {
    throw Error(Errc::malformed_header, "PGM: dimensions must be positive");
  }
  if (maxval != 255) {
    throw Error(Errc::unsupported_maxval, "PGM: maxval must be exactly 255");
  }
  // Exactly one whitespace byte separates the header from the raster.
  if (pos >= bytes.size() || !is_pgm_space(bytes[pos])) {
    throw Error(Errc::malformed_header, "PGM: missing separator before the raster");
  }
  ++pos;

  const std::size_t count = std::size_t(width) * std::size_t(height);
  if (bytes.size() - pos < count) {
    throw Error(Errc::truncated_data, "PGM: raster shorter than declared");
  }
  std::vector<int> pixels(count);
  for (std::size_t i = 0; i < count; ++i) {
    pixels[i] = std::uint8_t(bytes[pos + i]);
  }
  return GrayImage(int(width), int(height), std::move(pixels));
}

std::string encode_pgm(const GrayImage& img) {
  if (img.levels() != 256) {
    throw Error(Errc::unsupported_levels, "PGM: only 256-level images can be encoded");
  }
  std::string out = "P5\n" + std::to_string(img.width()) + " " +
                    std::to_string(img.height()) + "\n255\n";
  out.reserve(out.size() + img.pixels().size());
  for (int v : img.pixels()) {
    out.push_back(char(std::uint8_t(v)));
  }
  return out;
}

ImageFormat sniff_format(std::string_view bytes) {
  if (bytes.size() >= 2 && bytes[0] == 'B' && bytes[1] == 'M') return ImageFormat::bmp;
  if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '5') return ImageFormat::pgm;
  return ImageFormat::unknown;
}

GrayImage decode_any_to_gray(std::string_view bytes) {
  switch (sniff_format(bytes)) {
    case ImageFormat::bmp:
      return to_grayscale(decode_bmp(bytes));
    case ImageFormat::pgm:
      return decode_pgm(bytes);
    case ImageFormat::unknown:
      break;
  }
  throw Error(Errc::decode_failed, "unrecognized image format (expected BMP or PGM magic)");
}

GrayImage to_grayscale(const RgbImage& img) {
  std::vector<int> pixels(img.pixels().size());
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    const Rgb& p = img.pixels()[i];
    pixels[i] = int(round_half_away(0.299 * p.r + 0.587 * p.g + 0.114 * p.b));
  }
  return GrayImage(img.width(), img.height(), std::move(pixels));
}

}  // namespace soleidx

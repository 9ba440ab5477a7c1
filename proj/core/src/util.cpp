#include "soleidx/util.hpp"

#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <random>

#include "soleidx/error.hpp"

namespace soleidx {

long long round_half_away(double v) {
  // llround rounds halfway cases away from zero, which is the pinned rule.
  return std::llround(v);
}

std::string format_tau(int t, int levels) {
  // round(t * 10^6 / (levels-1)) in exact integer arithmetic, half away
  // from zero (all quantities non-negative here).
  const long long num = 2LL * t * 1000000LL + (levels - 1);
  const long long digits = num / (2LL * (levels - 1));
  char buf[32];
  std::snprintf(buf, sizeof(buf), "0.%06lld", digits);
  return buf;
}

double parse_tau(std::string_view text) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw Error(Errc::malformed_catalog, "unparseable tau '" + std::string(text) + "'");
  }
  return value;
}

std::string format_double(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string utc_timestamp_now() {
  std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

bool is_valid_timestamp(std::string_view ts) {
  // "YYYY-MM-DDThh:mm:ssZ", 20 chars, with basic field range checks.
  if (ts.size() != 20) return false;
  static const char pattern[] = "dddd-dd-ddTdd:dd:ddZ";
  for (std::size_t i = 0; i < 20; ++i) {
    if (pattern[i] == 'd') {
      if (ts[i] < '0' || ts[i] > '9') return false;
    } else if (ts[i] != pattern[i]) {
      return false;
    }
  }
  auto num = [&](std::size_t pos, std::size_t len) {
    int v = 0;
    for (std::size_t i = pos; i < pos + len; ++i) v = v * 10 + (ts[i] - '0');
    return v;
  };
  const int month = num(5, 2), day = num(8, 2);
  const int hour = num(11, 2), minute = num(14, 2), second = num(17, 2);
  return month >= 1 && month <= 12 && day >= 1 && day <= 31 && hour <= 23 &&
         minute <= 59 && second <= 60;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(Errc::io_error, "cannot open '" + path.string() + "' for reading");
  }
  std::string bytes((std::istreambuf_iterator<char>(in)),
                    std::istreambuf_iterator<char>());
  if (in.bad()) {
    throw Error(Errc::io_error, "read failed on '" + path.string() + "'");
  }
  return bytes;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view bytes) {
  std::filesystem::path dir = path.parent_path();
  if (dir.empty()) dir = ".";

  std::random_device rd;
  std::filesystem::path tmp =
      dir / (path.filename().string() + ".tmp." + std::to_string(rd()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw Error(Errc::io_error, "cannot open '" + tmp.string() + "' for writing");
    }
    out.write(bytes.data(), std::streamsize(bytes.size()));
    out.flush();
    if (!out) {
      std::error_code ec;
      std::filesystem::remove(tmp, ec);
      throw Error(Errc::io_error, "write failed on '" + tmp.string() + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ec2;
    std::filesystem::remove(tmp, ec2);
    throw Error(Errc::io_error, "rename to '" + path.string() + "' failed: " + ec.message());
  }
}

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::malformed_header: return "MalformedHeader";
    case Errc::unsupported_variant: return "UnsupportedVariant";
    case Errc::truncated_data: return "TruncatedData";
    case Errc::unsupported_maxval: return "UnsupportedMaxval";
    case Errc::unsupported_levels: return "UnsupportedLevels";
    case Errc::empty_image: return "EmptyImage";
    case Errc::empty_histogram: return "EmptyHistogram";
    case Errc::degenerate_histogram: return "DegenerateHistogram";
    case Errc::threshold_out_of_range: return "ThresholdOutOfRange";
    case Errc::invalid_length: return "InvalidLength";
    case Errc::kernel_too_large: return "KernelTooLarge";
    case Errc::ill_conditioned: return "IllConditioned";
    case Errc::negative_k: return "NegativeK";
    case Errc::negative_gamma: return "NegativeGamma";
    case Errc::non_real_result: return "NonRealResult";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::identical_images: return "IdenticalImages";
    case Errc::decode_failed: return "DecodeFailed";
    case Errc::duplicate_id: return "DuplicateId";
    case Errc::invalid_query: return "InvalidQuery";
    case Errc::malformed_catalog: return "MalformedCatalog";
    case Errc::io_error: return "IOError";
  }
  return "UnknownError";
}

}  // namespace soleidx

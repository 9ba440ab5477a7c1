#include "soleidx/catalog.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

#include "soleidx/codec.hpp"
#include "soleidx/enhance.hpp"
#include "soleidx/error.hpp"
#include "soleidx/segment.hpp"
#include "soleidx/sha256.hpp"
#include "soleidx/util.hpp"

namespace soleidx {

namespace {

constexpr std::string_view kHeader = "# soleidx-catalog v1";

bool is_space_char(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\v' || c == '\f';
}

void validate_id(std::string_view id) {
  if (id.empty()) {
    throw std::invalid_argument("record id must not be empty");
  }
  for (char c : id) {
    if (is_space_char(c)) {
      throw std::invalid_argument("record id must not contain whitespace");
    }
  }
}

void validate_brand(std::string_view brand) {
  for (char c : brand) {
    if (std::uint8_t(c) < 0x20) {
      throw std::invalid_argument("brand must not contain control characters");
    }
  }
}

bool is_hex_digest(std::string_view s) {
  if (s.size() != 64) return false;
  for (char c : s) {
    if (!((c >= '0' && c <= '9') || (c >= 'a' && c <= 'f'))) return false;
  }
  return true;
}

int parse_int_field(std::string_view text, const char* what) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
    throw Error(Errc::malformed_catalog,
                std::string("bad ") + what + " field '" + std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::string format_record(const IndexRecord& rec) {
  std::string line;
  line.reserve(128);
  line += rec.id;
  line += '\t';
  line += rec.tau_text;
  line += '\t';
  line += std::to_string(rec.t);
  line += '\t';
  line += std::to_string(rec.levels);
  line += '\t';
  line += std::to_string(rec.width);
  line += '\t';
  line += std::to_string(rec.height);
  line += '\t';
  line += rec.source_digest;
  line += '\t';
  line += rec.brand;
  line += '\t';
  line += rec.created_at;
  return line;
}

bool Catalog::contains(std::string_view id) const {
  return std::any_of(records.begin(), records.end(),
                     [&](const IndexRecord& r) { return r.id == id; });
}

IndexRecord ingest(std::string_view image_bytes, std::string id,
                   std::string brand,
                   const std::optional<RestorationSpec>& restoration,
                   std::string created_at) {
  validate_id(id);
  validate_brand(brand);
  if (!is_valid_timestamp(created_at)) {
    throw std::invalid_argument("created_at must be YYYY-MM-DDThh:mm:ssZ");
  }

  GrayImage gray;
  try {
    gray = decode_any_to_gray(image_bytes);
  } catch (const Error& e) {
    if (e.code() == Errc::decode_failed) throw;
    throw Error(Errc::decode_failed, e.what());
  }

  GrayImage processed = equalize(gray);
  if (restoration) {
    processed = restore(processed, restoration->psf, restoration->params);
  }
  const OtsuResult otsu = global_threshold_index(processed);

  IndexRecord rec;
  rec.id = std::move(id);
  rec.tau_text = format_tau(otsu.t, otsu.levels);
  rec.tau = parse_tau(rec.tau_text);
  rec.t = otsu.t;
  rec.levels = otsu.levels;
  rec.width = processed.width();
  rec.height = processed.height();
  rec.source_digest = sha256_hex(image_bytes);
  rec.brand = std::move(brand);
  rec.created_at = std::move(created_at);
  return rec;
}

Catalog add_record(Catalog cat, IndexRecord rec) {
  if (cat.contains(rec.id)) {
    throw Error(Errc::duplicate_id, "id '" + rec.id + "' is already catalogued");
  }
  cat.records.push_back(std::move(rec));
  return cat;
}

std::vector<IndexRecord> query_range(const Catalog& cat, double tau_q, double tol) {
  if (!(tau_q >= 0.0 && tau_q <= 1.0)) {
    throw Error(Errc::invalid_query, "tau must lie in [0, 1]");
  }
  if (!(tol >= 0.0)) {
    throw Error(Errc::invalid_query, "tolerance must be non-negative");
  }
  std::vector<IndexRecord> hits;
  for (const IndexRecord& rec : cat.records) {
    if (std::abs(rec.tau - tau_q) <= tol) {
      hits.push_back(rec);
    }
  }
  std::sort(hits.begin(), hits.end(),
            [tau_q](const IndexRecord& a, const IndexRecord& b) {
              const double da = std::abs(a.tau - tau_q);
              const double db = std::abs(b.tau - tau_q);
              if (da != db) return da < db;
              return a.id < b.id;
            });
  return hits;
}

std::string save_catalog(const Catalog& cat) {
  std::string out{kHeader};
  out += '\n';
  for (const IndexRecord& rec : cat.records) {
    out += format_record(rec);
    out += '\n';
  }
  return out;
}

Catalog load_catalog(std::string_view bytes) {
  if (bytes.empty() || bytes.back() != '\n') {
    throw Error(Errc::malformed_catalog, "file must end with a newline");
  }
  // Header line first, then one record per line.
  std::size_t pos = bytes.find('\n');
  if (bytes.substr(0, pos) != kHeader) {
    throw Error(Errc::malformed_catalog, "missing '# soleidx-catalog v1' header");
  }
  ++pos;

  Catalog cat;
  std::unordered_set<std::string_view> seen;
  while (pos < bytes.size()) {
    const std::size_t eol = bytes.find('\n', pos);
    const std::string_view line = bytes.substr(pos, eol - pos);
    pos = eol + 1;

    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true) {
      const std::size_t tab = line.find('\t', start);
      fields.push_back(line.substr(start, tab - start));
      if (tab == std::string_view::npos) break;
      start = tab + 1;
    }
    if (fields.size() != 9) {
      throw Error(Errc::malformed_catalog,
                  "expected 9 tab-separated fields, got " +
                      std::to_string(fields.size()));
    }

    IndexRecord rec;
    rec.id = std::string(fields[0]);
    try {
      validate_id(rec.id);
    } catch (const std::invalid_argument& e) {
      throw Error(Errc::malformed_catalog, e.what());
    }
    if (!seen.insert(fields[0]).second) {
      throw Error(Errc::malformed_catalog, "duplicate id '" + rec.id + "'");
    }

    rec.tau_text = std::string(fields[1]);
    rec.t = parse_int_field(fields[2], "t");
    rec.levels = parse_int_field(fields[3], "levels");
    rec.width = parse_int_field(fields[4], "width");
    rec.height = parse_int_field(fields[5], "height");
    if (rec.levels < 2 || rec.t < 0 || rec.t > rec.levels - 2) {
      throw Error(Errc::malformed_catalog, "threshold out of range for levels");
    }
    if (rec.width < 1 || rec.height < 1) {
      throw Error(Errc::malformed_catalog, "image dimensions must be positive");
    }
    if (rec.tau_text != format_tau(rec.t, rec.levels)) {
      throw Error(Errc::malformed_catalog,
                  "tau '" + rec.tau_text + "' does not match t=" + std::to_string(rec.t));
    }
    rec.tau = parse_tau(rec.tau_text);
    rec.source_digest = std::string(fields[6]);
    if (!is_hex_digest(rec.source_digest)) {
      throw Error(Errc::malformed_catalog, "source digest is not 64 hex characters");
    }
    rec.brand = std::string(fields[7]);
    try {
      validate_brand(rec.brand);
    } catch (const std::invalid_argument& e) {
      throw Error(Errc::malformed_catalog, e.what());
    }
    rec.created_at = std::string(fields[8]);
    if (!is_valid_timestamp(rec.created_at)) {
      throw Error(Errc::malformed_catalog,
                  "bad created_at '" + rec.created_at + "'");
    }
    cat.records.push_back(std::move(rec));
  }
  return cat;
}

}  // namespace soleidx

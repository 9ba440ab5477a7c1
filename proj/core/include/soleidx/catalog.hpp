#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "soleidx/image.hpp"
#include "soleidx/restore.hpp"

namespace soleidx {

// One reference shoe entry. tau_text is the 6-decimal serialized threshold
// index; tau is that text parsed back to double, which is what range queries
// compare, so in-memory and on-disk answers can never disagree.
struct IndexRecord {
  std::string id;             // non-empty token, no whitespace
  std::string tau_text;       // e.g. "0.196078"
  double tau = 0.0;           // parse_tau(tau_text)
  int t = 0;                  // integer Otsu threshold
  int levels = 256;
  int width = 0;
  int height = 0;
  std::string source_digest;  // SHA-256 of the original input bytes, 64 hex
  std::string brand;          // free text, no tabs/newlines, may be empty
  std::string created_at;     // "YYYY-MM-DDThh:mm:ssZ"

  friend bool operator==(const IndexRecord&, const IndexRecord&) = default;
};

// One catalog line (no trailing newline): tab-separated
// id, tau, t, levels, width, height, source_digest, brand, created_at.
std::string format_record(const IndexRecord& rec);

struct Catalog {
  int version = 1;
  std::vector<IndexRecord> records;  // insertion order preserved

  bool contains(std::string_view id) const;
};

struct RestorationSpec {
  RestorationParams params;
  BlurKernel psf;
};

// Full reference pipeline: decode (grayscale if color), equalize, optionally
// restore with the given parameters, then take the Otsu index. Identical
// bytes and parameters always produce an identical record apart from
// created_at, which the caller supplies.
IndexRecord ingest(std::string_view image_bytes, std::string id,
                   std::string brand,
                   const std::optional<RestorationSpec>& restoration,
                   std::string created_at);

// Value-semantics append; DuplicateId if the id is already present.
Catalog add_record(Catalog cat, IndexRecord rec);

// All records with |tau - tau_q| <= tol, sorted by distance then id.
std::vector<IndexRecord> query_range(const Catalog& cat, double tau_q,
                                     double tol);

// Catalog file, UTF-8 with LF line endings:
//   line 1:      "# soleidx-catalog v1"
//   per record:  format_record(rec) + "\n"
// load_catalog(save_catalog(c)) == c field for field.
std::string save_catalog(const Catalog& cat);
Catalog load_catalog(std::string_view bytes);

}  // namespace soleidx

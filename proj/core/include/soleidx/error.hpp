#pragma once

#include <stdexcept>
#include <string>

namespace soleidx {

// Failure taxonomy shared by all modules. Every code has a stable name that
// surfaces in CLI diagnostics (prefixed "error: ") and in test assertions.
enum class Errc {
  malformed_header,
  unsupported_variant,
  truncated_data,
  unsupported_maxval,
  unsupported_levels,
  empty_image,
  empty_histogram,
  degenerate_histogram,
  threshold_out_of_range,
  invalid_length,
  kernel_too_large,
  ill_conditioned,
  negative_k,
  negative_gamma,
  non_real_result,
  dimension_mismatch,
  identical_images,
  decode_failed,
  duplicate_id,
  invalid_query,
  malformed_catalog,
  io_error,
};

// Stable CamelCase name, e.g. "MalformedHeader".
const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail),
        code_(code) {}

  Errc code() const { return code_; }
  const char* name() const { return errc_name(code_); }

 private:
  Errc code_;
};

}  // namespace soleidx

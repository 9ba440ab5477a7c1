#pragma once

#include <string>
#include <string_view>

namespace soleidx {

// SHA-256 (FIPS 180-4) of a byte sequence, as 64 lowercase hex characters.
std::string sha256_hex(std::string_view bytes);

}  // namespace soleidx

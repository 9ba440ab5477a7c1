#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

namespace soleidx {

// Project-wide rounding rule: round half away from zero.
long long round_half_away(double v);

// t/(levels-1) rendered with exactly six decimals. Computed in integer
// arithmetic so the text does not depend on printf rounding.
std::string format_tau(int t, int levels);

// Parse a 6-decimal tau string back to double (the value used for catalog
// range queries).
double parse_tau(std::string_view text);

// Shortest round-trippable decimal form of a double.
std::string format_double(double v);

// Current UTC time as "YYYY-MM-DDThh:mm:ssZ".
std::string utc_timestamp_now();
bool is_valid_timestamp(std::string_view ts);

// Whole-file IO. Reads throw IOError; writes go to a temp file in the target
// directory and are renamed into place, so readers never observe a torn file.
std::string read_file(const std::filesystem::path& path);
void write_file_atomic(const std::filesystem::path& path, std::string_view bytes);

}  // namespace soleidx

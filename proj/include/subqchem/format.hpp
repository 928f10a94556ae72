#pragma once

#include <cstdint>
#include <string>
#include <string_view>

namespace subqchem {

/// Shortest decimal string that round-trips to the same double
/// (std::to_chars); used for all CSV/JSON numeric output so identical
/// inputs produce byte-identical files.
std::string format_double(double value);

/// FNV-1a 64-bit hash, hex-encoded. Used for config fingerprints.
std::string fnv1a64_hex(std::string_view data);

}  // namespace subqchem

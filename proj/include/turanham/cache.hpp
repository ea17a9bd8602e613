#pragma once

#include <string>

#include "turanham/counts.hpp"

namespace turanham {

// Memo-table snapshots on disk. Layout: one header line
//
//   turanham-cache/1 fnv1a64=<16 hex digits>
//
// followed by a JSON document keyed by (module, d, m) whose integers are
// decimal strings. The checksum covers the JSON bytes; loads refuse version
// mismatches, checksum failures and malformed integers. Restored triangle
// rows re-run the row-sum check.
inline constexpr const char* kCacheFormatVersion = "turanham-cache/1";

void save_cache(const std::string& path, CountingEngine& engine);

// Merges the file's tables into the engine. Throws std::runtime_error with
// the reason on any validation failure.
void load_cache(const std::string& path, CountingEngine& engine);

}  // namespace turanham

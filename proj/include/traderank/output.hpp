#pragma once

#include <filesystem>
#include <string>

namespace traderank {

/// `%.17g`, enough digits to round-trip any double.
std::string format_double(double v);

/// Writes `contents` to `path` through a sibling temp file and a rename, so
/// readers never observe a partially written file.
void write_file_atomic(const std::filesystem::path& path, const std::string& contents);

}  // namespace traderank

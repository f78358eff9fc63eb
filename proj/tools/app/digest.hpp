#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

namespace electionpulse::app {

/// Lowercase hex SHA-256 of a byte string.
std::string sha256_hex(std::string_view data);

/// SHA-256 over the concatenated contents of the files, in order. Throws
/// IoError when one cannot be read.
std::string sha256_files(std::span<const std::filesystem::path> files);

}  // namespace electionpulse::app

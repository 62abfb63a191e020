#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace streamtree::cli {

/// Writes through a sibling temporary file and renames it into place.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

std::string sha256_hex(std::string_view content);
std::string sha256_file(const std::filesystem::path& path);

/// manifest.json under `root` listing every other regular file below it
/// with size and SHA-256, sorted by relative path.
void write_manifest(const std::filesystem::path& root);

/// Replaces characters that are awkward in file names.
std::string safe_component(std::string_view name);

}  // namespace streamtree::cli

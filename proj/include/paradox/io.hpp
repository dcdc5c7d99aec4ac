#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace paradox {

/// Locale-independent, deterministic formatting used for every CSV cell.
std::string format_double(double v);

/// FNV-1a 64-bit content digest, hex-encoded. Stable across platforms.
std::string fnv1a_digest(const std::string& bytes);
std::string file_digest(const std::filesystem::path& path);

struct RunManifest {
    std::string command_line;
    std::string tool_version;
    std::string timestamp_utc;
    std::vector<std::pair<std::string, std::string>> input_digests;  // path, digest
    std::vector<std::uint64_t> seeds;
    std::vector<std::pair<std::string, std::string>> output_files;   // path, digest
};

/// Serialize the manifest as JSON to `path` (the manifest itself is not listed).
void write_manifest(const RunManifest& manifest, const std::filesystem::path& path);

} // namespace paradox

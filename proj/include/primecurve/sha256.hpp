#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

namespace primecurve {

// FIPS 180-4 SHA-256; returns the digest as 64 lowercase hex characters.
std::string sha256_hex(const void* data, std::size_t size);
std::string sha256_hex(const std::string& data);
std::string sha256_file(const std::filesystem::path& path);

}  // namespace primecurve

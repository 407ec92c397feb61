#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

namespace primecurve {

struct ManifestFile {
    std::string name;  // path relative to the output directory
    std::string sha256;
    std::uintmax_t bytes = 0;
};

// Machine-readable record of one command invocation: what ran, with which
// parameters, what came out, and the digests of every output file.  The
// creation timestamp is excluded from digest comparisons by construction
// (digests cover the data files, never the manifest itself).
struct RunManifest {
    std::string tool;
    std::string version;
    std::string command;
    nlohmann::json config;   // fully resolved parameters
    nlohmann::json results;  // command-specific summary numbers
    std::string created;     // ISO-8601 UTC
    std::vector<ManifestFile> files;

    nlohmann::json to_json() const;
};

// Digests an output file and appends it to the manifest.
void attach_file(RunManifest& manifest, const std::filesystem::path& directory,
                 const std::string& name);

// Writes manifest.json (pretty-printed, LF, trailing newline) to the
// directory.
void write_manifest(const RunManifest& manifest,
                    const std::filesystem::path& directory);

std::string current_utc_timestamp();

}  // namespace primecurve

#include "primecurve/manifest.hpp"

#include <ctime>
#include <fstream>

#include "primecurve/error.hpp"
#include "primecurve/sha256.hpp"

namespace primecurve {

nlohmann::json RunManifest::to_json() const {
    nlohmann::json files_json = nlohmann::json::array();
    for (const ManifestFile& f : files)
        files_json.push_back(
            {{"name", f.name}, {"sha256", f.sha256}, {"bytes", f.bytes}});
    return nlohmann::json{{"tool", tool},       {"version", version},
                          {"command", command}, {"config", config},
                          {"results", results}, {"created", created},
                          {"files", files_json}};
}

void attach_file(RunManifest& manifest, const std::filesystem::path& directory,
                 const std::string& name) {
    std::filesystem::path path = directory / name;
    ManifestFile entry;
    entry.name = name;
    entry.sha256 = sha256_file(path);
    std::error_code ec;
    entry.bytes = std::filesystem::file_size(path, ec);
    if (ec)
        throw Error(ErrorCategory::Io, "cannot stat: " + path.string());
    manifest.files.push_back(entry);
}

void write_manifest(const RunManifest& manifest,
                    const std::filesystem::path& directory) {
    std::filesystem::path path = directory / "manifest.json";
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw Error(ErrorCategory::Io, "cannot open for writing: " + path.string());
    out << manifest.to_json().dump(2) << '\n';
    out.flush();
    if (!out)
        throw Error(ErrorCategory::Io, "write failed: " + path.string());
}

std::string current_utc_timestamp() {
    std::time_t now = std::time(nullptr);
    std::tm utc{};
    gmtime_r(&now, &utc);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &utc);
    return buffer;
}

}  // namespace primecurve

#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>

#include <json.hpp>

#include "primecurve/ensemble.hpp"

namespace primecurve {

// Command-line values that take precedence over the config file.
struct ConfigOverrides {
    std::optional<std::int64_t> n;
    std::optional<std::size_t> sample_count;
    std::optional<std::size_t> realizations;
    std::optional<std::uint64_t> base_seed;
};

// Parses a JSON experiment description.  Recognized keys:
//   n (required), sample_count, realizations, base_seed, model_kinds,
//   normalization, m_range {lo, hi}, fit_window {lo, hi}, counting_mode,
//   cramer_max_attempts.
// Unknown keys are an error and are named in the message.
ExperimentConfig parse_config(const nlohmann::json& doc);

ExperimentConfig load_config(const std::filesystem::path& path,
                             const ConfigOverrides& overrides = {});

// Inverse of parse_config; round-trips every field.
nlohmann::json config_to_json(const ExperimentConfig& cfg);

}  // namespace primecurve

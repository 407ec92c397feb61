#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "primecurve/config.hpp"
#include "primecurve/manifest.hpp"
#include "primecurve/robustness.hpp"
#include "primecurve/selftest.hpp"
#include "primecurve/spectral.hpp"

namespace primecurve {

// Each command computes, writes its data files plus manifest.json into the
// output directory, and returns the manifest it wrote.

struct CurveOptions {
    std::int64_t n = 0;
    std::size_t samples = 8192;
    ModelKind kind = ModelKind::Prime;
    std::uint64_t seed = 0;
    NormMethod normalization = NormMethod::CentroidDiameter;
    int cramer_max_attempts = 1000;
    std::filesystem::path out_dir;
};

RunManifest cmd_curve(const CurveOptions& options);

struct BoxcountOptions {
    // Either a synthetic self-test input or a model curve.
    std::optional<SelfTestKind> self_test;
    std::int64_t n = 0;
    std::size_t samples = 8192;
    ModelKind kind = ModelKind::Prime;
    std::uint64_t seed = 0;
    NormMethod normalization = NormMethod::CentroidDiameter;
    int cramer_max_attempts = 1000;
    int m_lo = 1;
    int m_hi = 10;
    int fit_lo = 3;
    int fit_hi = 7;
    CountingMode mode = CountingMode::Points;
    std::filesystem::path out_dir;
};

RunManifest cmd_boxcount(const BoxcountOptions& options);

struct EnsembleOptions {
    std::filesystem::path config_path;
    ConfigOverrides overrides;
    unsigned threads = 0;
    std::filesystem::path out_dir;
};

RunManifest cmd_ensemble(const EnsembleOptions& options);

struct RobustnessOptions {
    std::filesystem::path config_path;
    ConfigOverrides overrides;
    std::vector<SensitivityAxis> axes = {
        SensitivityAxis::FitRange, SensitivityAxis::Normalization,
        SensitivityAxis::EnsembleSize, SensitivityAxis::SamplingDensity};
    std::size_t large_realizations = 500;
    std::vector<std::size_t> densities;  // empty means the default sweep
    unsigned threads = 0;
    std::filesystem::path out_dir;
};

RunManifest cmd_robustness(const RobustnessOptions& options);

}  // namespace primecurve

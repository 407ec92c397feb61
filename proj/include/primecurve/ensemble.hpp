#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "primecurve/geometry.hpp"
#include "primecurve/scaling.hpp"
#include "primecurve/spectral.hpp"

namespace primecurve {

// Everything a run needs; defaults give the baseline protocol.
struct ExperimentConfig {
    std::int64_t n = 0;
    std::size_t sample_count = 8192;  // grid nodes, endpoints included
    std::size_t realizations = 200;
    std::uint64_t base_seed = 0;
    std::vector<ModelKind> model_kinds = {
        ModelKind::Prime, ModelKind::RandomFrequency, ModelKind::Cramer,
        ModelKind::Shuffled};
    NormMethod normalization = NormMethod::CentroidDiameter;
    int m_lo = 1;
    int m_hi = 10;
    int fit_lo = 3;
    int fit_hi = 7;
    CountingMode counting_mode = CountingMode::Points;
    int cramer_max_attempts = 1000;

    // Throws on inconsistent values (empty or duplicated kinds, bad windows,
    // n too small for the requested kinds, ...).
    void validate() const;
};

// Stable stream tag per kind; part of the seed derivation contract.
std::uint64_t kind_tag(ModelKind kind);

// Seed for one realization: mixes base seed, kind tag, and index.
std::uint64_t realization_seed(const ExperimentConfig& cfg, ModelKind kind,
                               std::size_t index);

struct RealizationResult {
    ModelKind kind = ModelKind::Prime;
    std::size_t index = 0;
    std::uint64_t seed = 0;
    BoxCountProfile profile;
    ScalingFit fit;
};

// Builds, evaluates, normalizes, counts, and fits one realization.
RealizationResult run_realization(const ExperimentConfig& cfg, ModelKind kind,
                                  std::size_t index);

struct KindSummary {
    ModelKind kind = ModelKind::Prime;
    std::size_t realizations = 0;
    double mean_slope = 0.0;
    double stddev_slope = 0.0;  // population standard deviation
    double min_slope = 0.0;
    double max_slope = 0.0;
    std::vector<double> mean_exponents;  // per scale index, profile order
};

struct EnsembleSummary {
    std::vector<KindSummary> kinds;  // config order

    const KindSummary& for_kind(ModelKind kind) const;
};

struct EnsembleRun {
    ExperimentConfig config;
    // Kind-major, index-minor; deterministic regardless of thread schedule.
    std::vector<RealizationResult> results;
    EnsembleSummary summary;
};

// Runs the full ensemble.  threads = 0 picks hardware concurrency.
EnsembleRun run_ensemble(const ExperimentConfig& cfg, unsigned threads = 0);

// Summary recomputed over only the first `count` realizations of each kind.
EnsembleSummary summarize_prefix(const EnsembleRun& run, std::size_t count);

struct ModelComparison {
    std::vector<ModelKind> ranking;  // descending mean slope
    bool has_ties = false;
    // Pairwise mean-slope differences keyed by kind-name pairs.
    std::map<std::pair<std::string, std::string>, double> differences;
};

ModelComparison compare_models(const EnsembleSummary& summary);

}  // namespace primecurve

#pragma once

#include <string>
#include <vector>

#include "primecurve/ensemble.hpp"

namespace primecurve {

enum class SensitivityAxis {
    FitRange,       // alternative regression windows
    Normalization,  // alternative scale rules
    EnsembleSize,   // baseline realization count vs an enlarged one
    SamplingDensity,  // grid node counts
};

const char* to_string(SensitivityAxis axis);
SensitivityAxis parse_axis(const std::string& name);

// Per-axis sweep outcome.  Configurations are axis-specific (windows,
// methods, counts, densities); slopes are indexed [kind][configuration].
struct SensitivityReport {
    SensitivityAxis axis = SensitivityAxis::FitRange;
    std::vector<std::string> labels;  // one per configuration
    std::vector<ModelKind> kinds;
    std::vector<std::vector<double>> mean_slopes;
    std::vector<std::vector<double>> stddev_slopes;
    // Largest deviation between configurations, per kind.  Pairwise for most
    // axes; between consecutive densities for the density axis.
    std::vector<double> max_abs_deviation;
    // True when every configuration ranks the kinds identically by mean.
    bool ordering_invariant = false;
};

// Regression windows [2,8], [3,7], [4,8] refitted from a single ensemble's
// profiles; cfg must cover scales 2..8.
SensitivityReport fit_range_sensitivity(const ExperimentConfig& cfg,
                                        unsigned threads = 0);

// The three normalization rules applied to the same evaluated curves.
SensitivityReport normalization_sensitivity(const ExperimentConfig& cfg,
                                            unsigned threads = 0);

// Baseline realization count against a larger one; the smaller ensemble is
// the prefix of the larger, so the comparison isolates ensemble size.
SensitivityReport ensemble_size_sensitivity(const ExperimentConfig& cfg,
                                            std::size_t large_realizations,
                                            unsigned threads = 0);

// Re-evaluates the same models on grids of increasing density.
SensitivityReport density_sensitivity(const ExperimentConfig& cfg,
                                      const std::vector<std::size_t>& densities,
                                      unsigned threads = 0);

std::vector<std::size_t> default_density_sweep();

}  // namespace primecurve

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "primecurve/ensemble.hpp"
#include "primecurve/geometry.hpp"
#include "primecurve/scaling.hpp"
#include "primecurve/spectral.hpp"

namespace primecurve {

// Shortest decimal string that round-trips the double (to_chars, up to 17
// significant digits); locale independent.
std::string format_double(double value);

// All writers emit UTF-8 with LF line endings and end with a trailing
// newline; streams are opened in binary mode so the bytes are identical on
// every platform.

// Columns: j,t,x,y (1-based node index, node, curve coordinates).
void write_curve_csv(const std::filesystem::path& path,
                     const SamplingGrid& grid, const std::vector<Point>& points);

// Columns: m,epsilon,count,exponent.
void write_boxcount_csv(const std::filesystem::path& path,
                        const BoxCountProfile& prof);

// Columns: kind,index,seed,slope,residual.
void write_realizations_csv(const std::filesystem::path& path,
                            const std::vector<RealizationResult>& results);

// Columns: kind,realizations,mean_slope,stddev_slope,min_slope,max_slope.
void write_summary_csv(const std::filesystem::path& path,
                       const EnsembleSummary& summary);

// Columns: kind,m,mean_exponent (profile scales come from the config).
void write_mean_exponents_csv(const std::filesystem::path& path,
                              const ExperimentConfig& cfg,
                              const EnsembleSummary& summary);

}  // namespace primecurve

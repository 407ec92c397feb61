#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "primecurve/point.hpp"

namespace primecurve {

enum class CountingMode {
    Points,    // boxes containing at least one sample point
    Segments,  // boxes crossed by any polyline segment between samples
};

const char* to_string(CountingMode mode);
CountingMode parse_counting_mode(const std::string& name);

// Largest admissible dyadic scale index; 2^-20 is far below any feature of
// the sampled curves and keeps box indices inside 32 bits.
inline constexpr int kMaxBoxScale = 20;

// Number of occupied boxes at side length 2^-m over the point set's own
// bounding box, grid anchored at the box's lower-left corner.
std::int64_t box_count(const std::vector<Point>& points, int m,
                       CountingMode mode = CountingMode::Points);

// log(count) / (m * log 2): the effective exponent at scale index m >= 1.
double effective_exponent(std::int64_t count, int m);

struct BoxCountProfile {
    std::vector<int> m_values;          // ascending scale indices
    std::vector<std::int64_t> counts;   // occupied boxes per scale
    std::vector<double> exponents;      // effective exponent per scale
    CountingMode mode = CountingMode::Points;
};

BoxCountProfile profile(const std::vector<Point>& points, int m_lo, int m_hi,
                        CountingMode mode = CountingMode::Points);

// Least-squares fit of log(count) against log(1/epsilon) over a scale window.
struct ScalingFit {
    int m_lo = 0;
    int m_hi = 0;
    double slope = 0.0;
    double intercept = 0.0;
    double residual_rms = 0.0;
};

// Fits over [m_lo, m_hi], which must lie inside the profile and contain at
// least two scales.
ScalingFit fit_scaling(const BoxCountProfile& prof, int m_lo, int m_hi);

}  // namespace primecurve

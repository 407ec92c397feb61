#include "primecurve/scaling.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "primecurve/error.hpp"

namespace primecurve {

const char* to_string(CountingMode mode) {
    switch (mode) {
        case CountingMode::Points: return "points";
        case CountingMode::Segments: return "segments";
    }
    return "unknown";
}

CountingMode parse_counting_mode(const std::string& name) {
    if (name == "points") return CountingMode::Points;
    if (name == "segments") return CountingMode::Segments;
    throw Error(ErrorCategory::Config, "unknown counting mode: " + name);
}

namespace {

// Grid anchored at the bounding box's lower-left corner.  The last
// admissible index per axis follows the boundary rule: a coordinate exactly
// at the bounding-box maximum falls into the last box, so when the scaled
// span is an integer the final index is span-1, otherwise floor(span).
struct GridFrame {
    double min_x = 0.0, min_y = 0.0;
    std::int64_t last_x = 0, last_y = 0;
};

std::int64_t last_index(double span, int m) {
    double scaled = std::ldexp(span, m);  // exact: power-of-two factor
    double fl = std::floor(scaled);
    std::int64_t last = (fl == scaled) ? static_cast<std::int64_t>(fl) - 1
                                       : static_cast<std::int64_t>(fl);
    return std::max<std::int64_t>(last, 0);
}

GridFrame make_frame(const std::vector<Point>& points, int m) {
    double min_x = points[0].x, max_x = points[0].x;
    double min_y = points[0].y, max_y = points[0].y;
    for (const Point& p : points) {
        min_x = std::min(min_x, p.x);
        max_x = std::max(max_x, p.x);
        min_y = std::min(min_y, p.y);
        max_y = std::max(max_y, p.y);
    }
    GridFrame frame;
    frame.min_x = min_x;
    frame.min_y = min_y;
    frame.last_x = last_index(max_x - min_x, m);
    frame.last_y = last_index(max_y - min_y, m);
    return frame;
}

std::int64_t clamp_index(double scaled, std::int64_t last) {
    double fl = std::floor(scaled);
    std::int64_t idx = static_cast<std::int64_t>(fl);
    if (idx < 0) idx = 0;
    if (idx > last) idx = last;
    return idx;
}

std::uint64_t pack(std::int64_t ix, std::int64_t iy) {
    return (static_cast<std::uint64_t>(ix) << 32) |
           static_cast<std::uint64_t>(iy);
}

void add_point_cell(double sx, double sy, const GridFrame& frame,
                    std::vector<std::uint64_t>& keys) {
    keys.push_back(pack(clamp_index(sx, frame.last_x),
                        clamp_index(sy, frame.last_y)));
}

// Cells touched by one segment, in box units (one cell = unit square).
// Column-by-column x-slab scan with linear interpolation of the y interval;
// all interpolation quantities scale exactly by 2 between adjacent m, which
// keeps counts consistent across scales.
void add_segment_cells(double ax, double ay, double bx, double by,
                       const GridFrame& frame,
                       std::vector<std::uint64_t>& keys) {
    if (ax > bx) {
        std::swap(ax, bx);
        std::swap(ay, by);
    }
    if (ax == bx) {
        std::int64_t ix = clamp_index(ax, frame.last_x);
        std::int64_t r0 = clamp_index(std::min(ay, by), frame.last_y);
        std::int64_t r1 = clamp_index(std::max(ay, by), frame.last_y);
        for (std::int64_t r = r0; r <= r1; ++r) keys.push_back(pack(ix, r));
        return;
    }
    double inv_dx = 1.0 / (bx - ax);
    std::int64_t c_lo = static_cast<std::int64_t>(std::floor(ax));
    std::int64_t c_hi = static_cast<std::int64_t>(std::floor(bx));
    for (std::int64_t c = c_lo; c <= c_hi; ++c) {
        double x0 = std::max(ax, static_cast<double>(c));
        double x1 = std::min(bx, static_cast<double>(c + 1));
        double t0 = (x0 - ax) * inv_dx;
        double t1 = (x1 - ax) * inv_dx;
        double y0 = ay + (by - ay) * t0;
        double y1 = ay + (by - ay) * t1;
        std::int64_t ix = c < 0 ? 0 : (c > frame.last_x ? frame.last_x : c);
        std::int64_t r0 = clamp_index(std::min(y0, y1), frame.last_y);
        std::int64_t r1 = clamp_index(std::max(y0, y1), frame.last_y);
        for (std::int64_t r = r0; r <= r1; ++r) keys.push_back(pack(ix, r));
    }
}

}  // namespace

std::int64_t box_count(const std::vector<Point>& points, int m,
                       CountingMode mode) {
    if (points.empty())
        throw Error(ErrorCategory::Compute, "box_count: empty sample");
    if (m < 1 || m > kMaxBoxScale)
        throw Error(ErrorCategory::Compute,
                    "box_count: scale index " + std::to_string(m) +
                        " outside [1, " + std::to_string(kMaxBoxScale) + "]");
    GridFrame frame = make_frame(points, m);

    std::vector<std::uint64_t> keys;
    keys.reserve(points.size());
    std::vector<double> sx(points.size()), sy(points.size());
    for (std::size_t i = 0; i < points.size(); ++i) {
        sx[i] = std::ldexp(points[i].x - frame.min_x, m);
        sy[i] = std::ldexp(points[i].y - frame.min_y, m);
    }
    for (std::size_t i = 0; i < points.size(); ++i)
        add_point_cell(sx[i], sy[i], frame, keys);
    if (mode == CountingMode::Segments)
        for (std::size_t i = 0; i + 1 < points.size(); ++i)
            add_segment_cells(sx[i], sy[i], sx[i + 1], sy[i + 1], frame, keys);

    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return static_cast<std::int64_t>(keys.size());
}

double effective_exponent(std::int64_t count, int m) {
    if (m < 1)
        throw Error(ErrorCategory::Compute, "effective_exponent: m must be >= 1");
    if (count < 1)
        throw Error(ErrorCategory::Compute, "effective_exponent: count must be >= 1");
    return std::log2(static_cast<double>(count)) / static_cast<double>(m);
}

BoxCountProfile profile(const std::vector<Point>& points, int m_lo, int m_hi,
                        CountingMode mode) {
    if (m_lo < 1 || m_lo > m_hi || m_hi > kMaxBoxScale)
        throw Error(ErrorCategory::Compute, "profile: bad scale range");
    BoxCountProfile prof;
    prof.mode = mode;
    for (int m = m_lo; m <= m_hi; ++m) {
        std::int64_t count = box_count(points, m, mode);
        prof.m_values.push_back(m);
        prof.counts.push_back(count);
        prof.exponents.push_back(effective_exponent(count, m));
    }
    return prof;
}

ScalingFit fit_scaling(const BoxCountProfile& prof, int m_lo, int m_hi) {
    if (m_lo >= m_hi)
        throw Error(ErrorCategory::Compute, "fit_scaling: window needs >= 2 scales");
    std::vector<double> xs, ys;
    for (std::size_t i = 0; i < prof.m_values.size(); ++i) {
        int m = prof.m_values[i];
        if (m < m_lo || m > m_hi) continue;
        xs.push_back(static_cast<double>(m) * std::log(2.0));
        ys.push_back(std::log(static_cast<double>(prof.counts[i])));
    }
    // Window must be fully present: one profile entry per scale in it.
    if (xs.size() != static_cast<std::size_t>(m_hi - m_lo + 1))
        throw Error(ErrorCategory::Compute,
                    "fit_scaling: window [" + std::to_string(m_lo) + ", " +
                        std::to_string(m_hi) + "] not covered by profile");
    double n = static_cast<double>(xs.size());
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= n;
    mean_y /= n;
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double dx = xs[i] - mean_x;
        sxx += dx * dx;
        sxy += dx * (ys[i] - mean_y);
    }
    ScalingFit fit;
    fit.m_lo = m_lo;
    fit.m_hi = m_hi;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;
    double ss = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
        ss += r * r;
    }
    fit.residual_rms = std::sqrt(ss / n);
    return fit;
}

}  // namespace primecurve

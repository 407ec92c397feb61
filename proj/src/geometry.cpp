#include "primecurve/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "primecurve/error.hpp"

namespace primecurve {

const char* to_string(NormMethod method) {
    switch (method) {
        case NormMethod::CentroidDiameter: return "centroid-diameter";
        case NormMethod::MaxRadius: return "max-radius";
        case NormMethod::BoundingBox: return "bounding-box";
    }
    return "unknown";
}

NormMethod parse_norm_method(const std::string& name) {
    if (name == "centroid-diameter") return NormMethod::CentroidDiameter;
    if (name == "max-radius") return NormMethod::MaxRadius;
    if (name == "bounding-box") return NormMethod::BoundingBox;
    throw Error(ErrorCategory::Config, "unknown normalization method: " + name);
}

Point centroid(const std::vector<Point>& points) {
    if (points.empty())
        throw Error(ErrorCategory::Compute, "centroid: empty input");
    double sx = 0.0, sy = 0.0;
    for (const Point& p : points) {
        sx += p.x;
        sy += p.y;
    }
    double n = static_cast<double>(points.size());
    return {sx / n, sy / n};
}

namespace {

double cross(const Point& o, const Point& a, const Point& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Andrew monotone chain; returns hull vertices (collinear interior points
// dropped).  A single vertex means all input points coincide.
std::vector<Point> convex_hull(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end(), [](const Point& a, const Point& b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    pts.erase(std::unique(pts.begin(), pts.end(),
                          [](const Point& a, const Point& b) {
                              return a.x == b.x && a.y == b.y;
                          }),
              pts.end());
    std::size_t n = pts.size();
    if (n <= 2) return pts;
    std::vector<Point> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    std::size_t lower = k + 1;
    for (std::size_t i = n - 1; i-- > 0;) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

double squared_distance(const Point& a, const Point& b) {
    double dx = a.x - b.x;
    double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

}  // namespace

double diameter(const std::vector<Point>& points) {
    if (points.size() < 2)
        throw Error(ErrorCategory::Compute, "diameter: need at least two points");
    std::vector<Point> hull = convex_hull(points);
    if (hull.size() < 2)
        throw Error(ErrorCategory::Compute, "diameter: all points coincide");
    // The maximum pairwise distance is attained between hull vertices; the
    // hull is small enough that the quadratic vertex scan is cheap, and the
    // result is the same sqrt-of-max-squared-distance a full scan computes.
    double best = 0.0;
    for (std::size_t i = 0; i < hull.size(); ++i)
        for (std::size_t j = i + 1; j < hull.size(); ++j)
            best = std::max(best, squared_distance(hull[i], hull[j]));
    return std::sqrt(best);
}

NormalizedSample normalize(const std::vector<Point>& points, NormMethod method) {
    if (points.empty())
        throw Error(ErrorCategory::Compute, "normalize: empty input");
    Point c = centroid(points);
    std::vector<Point> centered(points.size());
    for (std::size_t i = 0; i < points.size(); ++i)
        centered[i] = {points[i].x - c.x, points[i].y - c.y};

    double scale = 0.0;
    switch (method) {
        case NormMethod::CentroidDiameter:
            scale = diameter(centered);
            break;
        case NormMethod::MaxRadius: {
            double best = 0.0;
            for (const Point& p : centered)
                best = std::max(best, p.x * p.x + p.y * p.y);
            scale = std::sqrt(best);
            break;
        }
        case NormMethod::BoundingBox: {
            double min_x = centered[0].x, max_x = centered[0].x;
            double min_y = centered[0].y, max_y = centered[0].y;
            for (const Point& p : centered) {
                min_x = std::min(min_x, p.x);
                max_x = std::max(max_x, p.x);
                min_y = std::min(min_y, p.y);
                max_y = std::max(max_y, p.y);
            }
            scale = std::max(max_x - min_x, max_y - min_y);
            break;
        }
    }
    if (!(scale > 0.0))
        throw Error(ErrorCategory::Compute,
                    "normalize: degenerate input (zero scale)");

    NormalizedSample result;
    result.method = method;
    result.centroid_before = c;
    result.scale_factor = scale;
    result.points.resize(centered.size());
    for (std::size_t i = 0; i < centered.size(); ++i)
        result.points[i] = {centered[i].x / scale, centered[i].y / scale};
    return result;
}

}  // namespace primecurve

#pragma once

#include <string>
#include <vector>

#include "primecurve/point.hpp"

namespace primecurve {

enum class NormMethod {
    CentroidDiameter,  // center on centroid, divide by diameter
    MaxRadius,         // center on centroid, divide by max distance to centroid
    BoundingBox,       // center on centroid, divide by larger box side
};

const char* to_string(NormMethod method);
NormMethod parse_norm_method(const std::string& name);

struct NormalizedSample {
    std::vector<Point> points;
    NormMethod method = NormMethod::CentroidDiameter;
    Point centroid_before;      // centroid of the input, before centering
    double scale_factor = 0.0;  // divisor applied after centering
};

Point centroid(const std::vector<Point>& points);

// Largest pairwise distance.  Convex hull plus a hull-vertex scan; exact in
// the sense that it returns sqrt of the true maximum squared distance.
// Requires at least two distinct points.
double diameter(const std::vector<Point>& points);

// Center on the centroid, then divide by the method's scale.  Rejects inputs
// whose scale would be zero (all points coincident).
NormalizedSample normalize(const std::vector<Point>& points, NormMethod method);

}  // namespace primecurve

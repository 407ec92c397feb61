#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "primecurve/point.hpp"

namespace primecurve {

// Synthetic point sets with known box-counting behaviour, used to validate
// the scaling pipeline against closed-form answers.
enum class SelfTestKind {
    Line,    // unit segment: counts 2^m, slope 1
    Filled,  // filled unit square on a 128x128 lattice: counts 4^m, slope 2
    Point,   // a single repeated point: count 1 at every scale
};

const char* to_string(SelfTestKind kind);
SelfTestKind parse_self_test_kind(const std::string& name);

// Sample count is only used by Line and Point; Filled is a fixed lattice.
std::vector<Point> self_test_points(SelfTestKind kind, std::size_t count);

}  // namespace primecurve

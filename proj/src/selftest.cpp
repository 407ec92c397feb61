#include "primecurve/selftest.hpp"

#include "primecurve/error.hpp"

namespace primecurve {

const char* to_string(SelfTestKind kind) {
    switch (kind) {
        case SelfTestKind::Line: return "line";
        case SelfTestKind::Filled: return "filled";
        case SelfTestKind::Point: return "point";
    }
    return "unknown";
}

SelfTestKind parse_self_test_kind(const std::string& name) {
    if (name == "line") return SelfTestKind::Line;
    if (name == "filled") return SelfTestKind::Filled;
    if (name == "point") return SelfTestKind::Point;
    throw Error(ErrorCategory::Config, "unknown self-test kind: " + name);
}

std::vector<Point> self_test_points(SelfTestKind kind, std::size_t count) {
    switch (kind) {
        case SelfTestKind::Line: {
            if (count < 2)
                throw Error(ErrorCategory::Compute, "line self-test needs >= 2 points");
            std::vector<Point> points(count);
            for (std::size_t j = 0; j < count; ++j)
                points[j] = {static_cast<double>(j) /
                                 static_cast<double>(count - 1),
                             0.0};
            return points;
        }
        case SelfTestKind::Filled: {
            // 128 x 128 lattice on [0,1]^2: at scale m <= 6 every box holds a
            // lattice point, so counts are exactly 4^m under bounding-box
            // normalization.
            std::vector<Point> points;
            points.reserve(128 * 128);
            for (int i = 0; i < 128; ++i)
                for (int j = 0; j < 128; ++j)
                    points.push_back({i / 127.0, j / 127.0});
            return points;
        }
        case SelfTestKind::Point: {
            if (count < 1)
                throw Error(ErrorCategory::Compute, "point self-test needs >= 1 point");
            return std::vector<Point>(count, Point{0.25, 0.25});
        }
    }
    throw Error(ErrorCategory::Compute, "unknown self-test kind");
}

}  // namespace primecurve

#pragma once

namespace primecurve {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

}  // namespace primecurve

#include "primecurve/error.hpp"

namespace primecurve {

const char* to_string(ErrorCategory category) {
    switch (category) {
        case ErrorCategory::Usage: return "usage";
        case ErrorCategory::Config: return "config";
        case ErrorCategory::Io: return "io";
        case ErrorCategory::Compute: return "compute";
    }
    return "unknown";
}

}  // namespace primecurve

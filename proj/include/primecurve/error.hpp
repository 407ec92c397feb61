#pragma once

#include <stdexcept>
#include <string>

namespace primecurve {

// Broad failure categories, used by the command-line driver to pick an exit
// status and a machine-readable prefix on stderr.
enum class ErrorCategory {
    Usage,    // bad command-line invocation
    Config,   // invalid or inconsistent configuration values
    Io,       // file system failures
    Compute,  // runtime failures inside the numerical pipeline
};

const char* to_string(ErrorCategory category);

class Error : public std::runtime_error {
  public:
    Error(ErrorCategory category, const std::string& message)
        : std::runtime_error(message), category_(category) {}

    ErrorCategory category() const { return category_; }

  private:
    ErrorCategory category_;
};

// Thrown when rejection resampling fails to produce an admissible draw
// within the attempt budget.  Callers annotate with run context.
class ResampleExhausted : public Error {
  public:
    explicit ResampleExhausted(const std::string& message)
        : Error(ErrorCategory::Compute, message) {}
};

}  // namespace primecurve

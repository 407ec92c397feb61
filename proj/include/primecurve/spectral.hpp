#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "primecurve/point.hpp"

namespace primecurve {

enum class ModelKind {
    Prime,            // frequencies are the primes <= n
    RandomFrequency,  // frequencies drawn uniformly from {1..n}
    Cramer,           // frequencies from a Bernoulli(1/log k) pseudoprime draw
    Shuffled,         // prime frequencies, permuted weights
};

const char* to_string(ModelKind kind);
ModelKind parse_model_kind(const std::string& name);

struct Term {
    std::int64_t frequency = 0;
    std::int64_t weight = 0;
};

// A finite exponential sum sum_k w_k * exp(i f_k t) with integer frequencies
// and weights.  Terms are ascending in frequency.
struct SpectralModel {
    std::int64_t n = 0;
    ModelKind kind = ModelKind::Prime;
    std::optional<std::uint64_t> seed;  // absent for the deterministic kind
    std::vector<Term> terms;
};

// Uniform nodes on [-pi, pi], both endpoints included.
struct SamplingGrid {
    std::vector<double> nodes;

    static SamplingGrid uniform(std::size_t count);
};

struct CurveSample {
    std::vector<Point> points;  // one per grid node, in node order
};

SpectralModel build_prime_model(std::int64_t n);
SpectralModel build_random_frequency_model(std::int64_t n, std::uint64_t seed);
SpectralModel build_cramer_model(std::int64_t n, std::uint64_t seed,
                                 int max_attempts);
SpectralModel build_shuffled_model(std::int64_t n, std::uint64_t seed);

// Dispatch on kind; max_attempts only applies to the Cramer kind.
SpectralModel build_model(ModelKind kind, std::int64_t n, std::uint64_t seed,
                          int max_attempts = 1000);

// Direct summation of the exponential sum at each grid node.
CurveSample evaluate(const SpectralModel& model, const SamplingGrid& grid);

// Squared L2 norm over one period: 2*pi*sum of squared weights.
double l2_norm_squared(const SpectralModel& model);

}  // namespace primecurve

#include "primecurve/spectral.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "primecurve/arithmetic.hpp"
#include "primecurve/error.hpp"
#include "primecurve/rng.hpp"

namespace primecurve {

const char* to_string(ModelKind kind) {
    switch (kind) {
        case ModelKind::Prime: return "prime";
        case ModelKind::RandomFrequency: return "random-frequency";
        case ModelKind::Cramer: return "cramer";
        case ModelKind::Shuffled: return "shuffled";
    }
    return "unknown";
}

ModelKind parse_model_kind(const std::string& name) {
    if (name == "prime") return ModelKind::Prime;
    if (name == "random-frequency") return ModelKind::RandomFrequency;
    if (name == "cramer") return ModelKind::Cramer;
    if (name == "shuffled") return ModelKind::Shuffled;
    throw Error(ErrorCategory::Config, "unknown model kind: " + name);
}

SamplingGrid SamplingGrid::uniform(std::size_t count) {
    if (count < 2)
        throw Error(ErrorCategory::Compute, "sampling grid needs >= 2 nodes");
    SamplingGrid grid;
    grid.nodes.resize(count);
    const double pi = std::numbers::pi;
    // t_j = -pi + 2*pi*(j-1)/(N-1); both endpoints land exactly on +-pi.
    for (std::size_t j = 0; j < count; ++j) {
        double frac = static_cast<double>(j) / static_cast<double>(count - 1);
        grid.nodes[j] = -pi + 2.0 * pi * frac;
    }
    return grid;
}

SpectralModel build_prime_model(std::int64_t n) {
    if (n < 2)
        throw Error(ErrorCategory::Compute, "prime model: n must be >= 2");
    SpectralModel model;
    model.n = n;
    model.kind = ModelKind::Prime;
    ValuationTable table = valuation_table(n);
    model.terms.reserve(table.entries.size());
    for (const auto& [p, v] : table.entries) model.terms.push_back({p, v});
    return model;
}

SpectralModel build_random_frequency_model(std::int64_t n, std::uint64_t seed) {
    if (n < 2)
        throw Error(ErrorCategory::Compute, "random-frequency model: n must be >= 2");
    SpectralModel model;
    model.n = n;
    model.kind = ModelKind::RandomFrequency;
    model.seed = seed;
    ValuationTable table = valuation_table(n);
    std::size_t count = table.entries.size();
    Rng rng(seed);
    // Frequencies: uniform count-subset of {1..n}, ascending; weight k stays
    // the valuation of the k-th prime, so the pairing follows prime index.
    std::vector<std::uint64_t> freqs = rng.sample_without_replacement(
        1, static_cast<std::uint64_t>(n), count);
    model.terms.reserve(count);
    for (std::size_t k = 0; k < count; ++k)
        model.terms.push_back(
            {static_cast<std::int64_t>(freqs[k]), table.entries[k].second});
    return model;
}

SpectralModel build_cramer_model(std::int64_t n, std::uint64_t seed,
                                 int max_attempts) {
    if (n < 5)
        throw Error(ErrorCategory::Compute, "cramer model: n must be >= 5");
    if (max_attempts < 1)
        throw Error(ErrorCategory::Compute, "cramer model: max_attempts must be >= 1");
    SpectralModel model;
    model.n = n;
    model.kind = ModelKind::Cramer;
    model.seed = seed;
    ValuationTable table = valuation_table(n);
    std::size_t needed = table.entries.size();
    Rng rng(seed);
    std::vector<std::int64_t> selected;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        selected.clear();
        // k = 2 enters with probability 1 (1/log 2 exceeds 1); k >= 3 by an
        // independent Bernoulli draw each.  One engine draw per k >= 3, so
        // the draw count per attempt is fixed at n - 2.
        selected.push_back(2);
        for (std::int64_t k = 3; k <= n; ++k)
            if (rng.bernoulli(1.0 / std::log(static_cast<double>(k))))
                selected.push_back(k);
        if (selected.size() >= needed) {
            selected.resize(needed);  // first pi(n) selected, ascending
            model.terms.reserve(needed);
            for (std::size_t k = 0; k < needed; ++k)
                model.terms.push_back({selected[k], table.entries[k].second});
            return model;
        }
    }
    throw ResampleExhausted(
        "cramer model: fewer than " + std::to_string(needed) +
        " selections in every one of " + std::to_string(max_attempts) +
        " attempts (n=" + std::to_string(n) + ")");
}

SpectralModel build_shuffled_model(std::int64_t n, std::uint64_t seed) {
    if (n < 2)
        throw Error(ErrorCategory::Compute, "shuffled model: n must be >= 2");
    SpectralModel model;
    model.n = n;
    model.kind = ModelKind::Shuffled;
    model.seed = seed;
    ValuationTable table = valuation_table(n);
    std::size_t count = table.entries.size();
    Rng rng(seed);
    std::vector<std::size_t> perm = rng.permutation(count);
    model.terms.reserve(count);
    for (std::size_t k = 0; k < count; ++k)
        model.terms.push_back(
            {table.entries[k].first, table.entries[perm[k]].second});
    return model;
}

SpectralModel build_model(ModelKind kind, std::int64_t n, std::uint64_t seed,
                          int max_attempts) {
    switch (kind) {
        case ModelKind::Prime: return build_prime_model(n);
        case ModelKind::RandomFrequency:
            return build_random_frequency_model(n, seed);
        case ModelKind::Cramer: return build_cramer_model(n, seed, max_attempts);
        case ModelKind::Shuffled: return build_shuffled_model(n, seed);
    }
    throw Error(ErrorCategory::Compute, "build_model: unknown kind");
}

CurveSample evaluate(const SpectralModel& model, const SamplingGrid& grid) {
    if (grid.nodes.size() < 2)
        throw Error(ErrorCategory::Compute, "evaluate: grid needs >= 2 nodes");
    std::size_t terms = model.terms.size();
    std::vector<double> freq(terms), weight(terms);
    for (std::size_t k = 0; k < terms; ++k) {
        freq[k] = static_cast<double>(model.terms[k].frequency);
        weight[k] = static_cast<double>(model.terms[k].weight);
    }
    CurveSample sample;
    sample.points.resize(grid.nodes.size());
    for (std::size_t j = 0; j < grid.nodes.size(); ++j) {
        double t = grid.nodes[j];
        double x = 0.0, y = 0.0;
        for (std::size_t k = 0; k < terms; ++k) {
            double angle = freq[k] * t;
            x += weight[k] * std::cos(angle);
            y += weight[k] * std::sin(angle);
        }
        sample.points[j] = {x, y};
    }
    return sample;
}

double l2_norm_squared(const SpectralModel& model) {
    double sum = 0.0;
    for (const Term& term : model.terms) {
        double w = static_cast<double>(term.weight);
        sum += w * w;
    }
    return 2.0 * std::numbers::pi * sum;
}

}  // namespace primecurve

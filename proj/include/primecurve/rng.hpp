#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "primecurve/error.hpp"

namespace primecurve {

// 64-bit finalizer (splitmix64).  Bijective, so distinct inputs stay distinct.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Per-realization seed: fold the stream tag and index into the base seed in
// two mixing stages so that neighbouring (tag, index) pairs land far apart.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag,
                                 std::uint64_t index) {
    return mix64(mix64(base + tag) + index);
}

// Deterministic generator with explicitly specified draw procedures.  Every
// helper consumes a fixed number of engine outputs so that draw sequences are
// reproducible across platforms (mt19937_64 itself is standard-specified).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1).  53 random bits; exactly one engine draw.
    double next_unit() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    // Exactly one engine draw regardless of p.
    bool bernoulli(double p) { return next_unit() < p; }

    // Uniform in [0, bound) by rejection; unbiased for every bound.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) throw Error(ErrorCategory::Compute, "below: zero bound");
        std::uint64_t threshold = (0ULL - bound) % bound;  // 2^64 mod bound
        for (;;) {
            std::uint64_t raw = next_u64();
            if (raw >= threshold) return raw % bound;
        }
    }

    // k distinct values from the integer range [lo, hi], returned sorted.
    // Partial Fisher-Yates over a materialized range; k engine draws minimum.
    std::vector<std::uint64_t> sample_without_replacement(std::uint64_t lo,
                                                          std::uint64_t hi,
                                                          std::size_t k) {
        if (hi < lo)
            throw Error(ErrorCategory::Compute, "sample: empty range");
        std::uint64_t span = hi - lo + 1;
        if (k > span)
            throw Error(ErrorCategory::Compute, "sample: k exceeds range");
        std::vector<std::uint64_t> pool(span);
        for (std::uint64_t i = 0; i < span; ++i) pool[i] = lo + i;
        for (std::size_t i = 0; i < k; ++i) {
            std::uint64_t j = i + below(span - i);
            std::swap(pool[i], pool[j]);
        }
        pool.resize(k);
        std::sort(pool.begin(), pool.end());
        return pool;
    }

    // Uniform permutation of {0, ..., count-1} by Fisher-Yates.
    std::vector<std::size_t> permutation(std::size_t count) {
        std::vector<std::size_t> perm(count);
        for (std::size_t i = 0; i < count; ++i) perm[i] = i;
        for (std::size_t i = 0; i + 1 < count; ++i) {
            std::size_t j = i + static_cast<std::size_t>(below(count - i));
            std::swap(perm[i], perm[j]);
        }
        return perm;
    }

  private:
    std::mt19937_64 engine_;
};

}  // namespace primecurve

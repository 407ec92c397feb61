#pragma once

#include <cstdint>
#include <vector>

namespace primecurve {

struct PrimeList {
    std::int64_t n = 0;                // inclusive upper bound of the sieve
    std::vector<std::int64_t> primes;  // ascending
};

// Exponent of each prime p <= n in the factorization of n!.
struct ValuationTable {
    std::int64_t n = 0;
    // (prime, valuation) pairs, ascending in prime.
    std::vector<std::pair<std::int64_t, std::int64_t>> entries;

    // Valuation of the given prime, or an error if p is not a table entry.
    std::int64_t valuation_of(std::int64_t p) const;
};

bool is_prime(std::int64_t x);

// All primes <= n, ascending.  n must be positive.
PrimeList primes_up_to(std::int64_t n);

// Exponent of prime p in n! by iterated division: sum of floor(n / p^k).
// p must be prime, n >= 1.
std::int64_t legendre_valuation(std::int64_t n, std::int64_t p);

// Full table for n!; n >= 2.
ValuationTable valuation_table(std::int64_t n);

}  // namespace primecurve

#include "primecurve/arithmetic.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "primecurve/error.hpp"

namespace primecurve {

std::int64_t ValuationTable::valuation_of(std::int64_t p) const {
    auto it = std::lower_bound(
        entries.begin(), entries.end(), p,
        [](const auto& entry, std::int64_t value) { return entry.first < value; });
    if (it == entries.end() || it->first != p)
        throw Error(ErrorCategory::Compute,
                    "valuation_of: " + std::to_string(p) + " is not a table prime");
    return it->second;
}

bool is_prime(std::int64_t x) {
    if (x < 2) return false;
    if (x < 4) return true;
    if (x % 2 == 0) return false;
    for (std::int64_t d = 3; d * d <= x; d += 2)
        if (x % d == 0) return false;
    return true;
}

PrimeList primes_up_to(std::int64_t n) {
    if (n < 1)
        throw Error(ErrorCategory::Compute, "primes_up_to: bound must be positive");
    PrimeList list;
    list.n = n;
    if (n < 2) return list;
    // Sieve of Eratosthenes.
    std::vector<bool> composite(static_cast<std::size_t>(n) + 1, false);
    for (std::int64_t i = 2; i * i <= n; ++i) {
        if (composite[static_cast<std::size_t>(i)]) continue;
        for (std::int64_t j = i * i; j <= n; j += i)
            composite[static_cast<std::size_t>(j)] = true;
    }
    for (std::int64_t i = 2; i <= n; ++i)
        if (!composite[static_cast<std::size_t>(i)]) list.primes.push_back(i);
    return list;
}

std::int64_t legendre_valuation(std::int64_t n, std::int64_t p) {
    if (n < 1)
        throw Error(ErrorCategory::Compute, "legendre_valuation: n must be >= 1");
    if (!is_prime(p))
        throw Error(ErrorCategory::Compute,
                    "legendre_valuation: " + std::to_string(p) + " is not prime");
    // Iterated division: sum of floor(n/p), floor(n/p^2), ... without ever
    // forming p^k, so no overflow for any representable n.
    std::int64_t total = 0;
    std::int64_t q = n;
    while (q > 0) {
        q /= p;
        total += q;
    }
    return total;
}

ValuationTable valuation_table(std::int64_t n) {
    if (n < 2)
        throw Error(ErrorCategory::Compute, "valuation_table: n must be >= 2");
    ValuationTable table;
    table.n = n;
    PrimeList list = primes_up_to(n);
    table.entries.reserve(list.primes.size());
    for (std::int64_t p : list.primes)
        table.entries.emplace_back(p, legendre_valuation(n, p));
    return table;
}

}  // namespace primecurve

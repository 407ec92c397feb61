#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "primecurve/arithmetic.hpp"
#include "primecurve/error.hpp"

using namespace primecurve;

TEST_CASE("primes_up_to small values") {
    CHECK(primes_up_to(10).primes == std::vector<std::int64_t>{2, 3, 5, 7});
    CHECK(primes_up_to(1).primes.empty());
    CHECK(primes_up_to(2).primes == std::vector<std::int64_t>{2});
    CHECK_THROWS_AS(primes_up_to(0), Error);
    CHECK_THROWS_AS(primes_up_to(-3), Error);
}

TEST_CASE("primes_up_to agrees with trial division up to 10^4") {
    PrimeList list = primes_up_to(10000);
    CHECK(list.primes == oracles::trial_division_primes(10000));
    CHECK(list.primes.size() == 1229);  // pi(10^4)
    for (std::size_t i = 1; i < list.primes.size(); ++i)
        CHECK(list.primes[i - 1] < list.primes[i]);
}

TEST_CASE("legendre_valuation matches the factorization oracle") {
    CHECK(legendre_valuation(10, 2) == 8);
    CHECK(legendre_valuation(9, 3) == 4);
    CHECK(legendre_valuation(10, 11) == 0);

    for (std::int64_t n : {2, 3, 6, 30, 100, 300}) {
        auto oracle = oracles::factorial_exponents(n);
        for (std::int64_t p : primes_up_to(n).primes)
            CHECK(legendre_valuation(n, p) == oracle.at(p));
    }
}

TEST_CASE("legendre_valuation rejects bad arguments") {
    CHECK_THROWS_AS(legendre_valuation(10, 4), Error);
    CHECK_THROWS_AS(legendre_valuation(10, 1), Error);
    CHECK_THROWS_AS(legendre_valuation(0, 2), Error);
}

TEST_CASE("valuation_table worked examples") {
    ValuationTable t6 = valuation_table(6);
    REQUIRE(t6.entries.size() == 3);
    CHECK(t6.valuation_of(2) == 4);
    CHECK(t6.valuation_of(3) == 2);
    CHECK(t6.valuation_of(5) == 1);

    ValuationTable t2 = valuation_table(2);
    REQUIRE(t2.entries.size() == 1);
    CHECK(t2.valuation_of(2) == 1);

    ValuationTable t4 = valuation_table(4);
    CHECK(t4.valuation_of(2) == 3);
    CHECK(t4.valuation_of(3) == 1);

    CHECK_THROWS_AS(valuation_table(1), Error);
    CHECK_THROWS_AS(t6.valuation_of(7), Error);
    CHECK_THROWS_AS(t6.valuation_of(4), Error);
}

TEST_CASE("valuations stay within the n/(p-1) bound and are positive") {
    for (std::int64_t n : {2, 10, 137, 500, 2000}) {
        for (const auto& [p, v] : valuation_table(n).entries) {
            CHECK(v >= 1);
            // v <= n/(p-1), checked in exact integer arithmetic.
            CHECK(v * (p - 1) <= n);
        }
    }
}

TEST_CASE("valuation-weighted log sum reconstructs log n!") {
    for (std::int64_t n : {2, 7, 50, 200, 500}) {
        double sum = 0.0;
        for (const auto& [p, v] : valuation_table(n).entries)
            sum += static_cast<double>(v) * std::log(static_cast<double>(p));
        double reference = std::lgamma(static_cast<double>(n) + 1.0);
        CHECK(std::abs(sum - reference) <= 1e-12 * std::abs(reference));
    }
}

TEST_CASE("is_prime basic behaviour") {
    CHECK_FALSE(is_prime(-7));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(9));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(91));
    for (std::int64_t x = 0; x <= 300; ++x)
        CHECK(is_prime(x) == oracles::trial_division_is_prime(x));
}

#include <doctest.h>

#include "primesum/errors.hpp"
#include "primesum/oracle.hpp"
#include "test_oracles.hpp"

using namespace primesum;

TEST_CASE("sieve basics") {
    const auto t10 = oracle::build_sieve(10);
    CHECK(t10.primes() == std::vector<std::uint64_t>{2, 3, 5, 7});
    CHECK(oracle::build_sieve(1).primes().empty());
    CHECK(oracle::build_sieve(0).primes().empty());
    CHECK(oracle::build_sieve(2).primes() == std::vector<std::uint64_t>{2});

    const auto t1000 = oracle::build_sieve(1000);
    CHECK_FALSE(t1000.flags[0]);
    CHECK_FALSE(t1000.flags[1]);
    CHECK(t1000.flags[2]);
    CHECK(t1000.prime_count() == 168);
}

TEST_CASE("sieve refuses limits over its memory budget") {
    CHECK_THROWS_AS(oracle::build_sieve(101, 100), CostGuardError);
    CHECK_NOTHROW(oracle::build_sieve(100, 100));
    CHECK_THROWS_AS(oracle::oracle_prime_sum((std::uint64_t{1} << 31) + 1), CostGuardError);
}

TEST_CASE("oracle prime sums") {
    CHECK(oracle::oracle_prime_sum(0) == 0);
    CHECK(oracle::oracle_prime_sum(10) == 17);
    CHECK(oracle::oracle_prime_sum(1000) == 76'127);
    // Pinned after computing it with the sieve (and an external cross-check).
    CHECK(oracle::oracle_prime_sum(2'000'000) == 142'913'828'922ULL);
}

TEST_CASE("count_factors") {
    CHECK(oracle::count_factors(1) == 1);
    CHECK(oracle::count_factors(11) == 2);
    CHECK(oracle::count_factors(45) == 6);
    CHECK_THROWS_AS(oracle::count_factors(0), ContractError);
}

TEST_CASE("sieve agrees with naive factor counting up to 10000") {
    const auto table = oracle::build_sieve(10'000);
    for (std::uint64_t n = 1; n <= 10'000; ++n) {
        REQUIRE(table.flags[n] == (oracle::count_factors(n) == 2));
        REQUIRE(table.flags[n] == testing_oracle::is_prime_by_definition(n));
    }
}

TEST_CASE("oracle sum is non-decreasing and steps exactly at primes") {
    const auto table = oracle::build_sieve(5'000);
    std::uint64_t previous = oracle::oracle_prime_sum(0);
    for (std::uint64_t n = 1; n <= 5'000; ++n) {
        const std::uint64_t current = oracle::oracle_prime_sum(n);
        REQUIRE(current >= previous);
        REQUIRE((current > previous) == table.flags[n]);
        if (table.flags[n]) REQUIRE(current - previous == n);
        previous = current;
    }
}

#include <gtest/gtest.h>

#include <numeric>
#include <vector>

#include "farey/totient.hpp"
#include "oracles.hpp"

using namespace farey;

TEST(Phi, Examples) {
    EXPECT_EQ(phi(1), 1u);
    EXPECT_EQ(phi(5), 4u);
    EXPECT_EQ(phi(12), 4u);
    EXPECT_THROW(phi(0), invalid_argument);
}

TEST(Phi, MatchesBruteForceCount) {
    for (std::uint64_t n = 1; n <= 2000; ++n) EXPECT_EQ(phi(n), oracle::phi_by_count(n)) << n;
}

TEST(Phi, LargePrimeAndPrimePower) {
    EXPECT_EQ(phi(1'000'000'007), 1'000'000'006u);
    EXPECT_EQ(phi(1ull << 40), 1ull << 39);
}

TEST(PhiSieve, SmallTables) {
    const auto t5 = phi_sieve(5);
    const std::vector<std::uint32_t> expected{1, 1, 2, 2, 4};
    EXPECT_EQ(std::vector<std::uint32_t>(t5.values().begin(), t5.values().end()), expected);
    EXPECT_EQ(std::accumulate(t5.values().begin(), t5.values().end(), 0u) + 1, 11u);

    const auto t1 = phi_sieve(1);
    EXPECT_EQ(t1.limit(), 1u);
    EXPECT_EQ(t1[1], 1u);
}

TEST(PhiSieve, AgreesWithTrialDivisionTo10k) {
    const auto table = phi_sieve(10'000);
    for (std::uint64_t k = 1; k <= 10'000; ++k) ASSERT_EQ(table[k], phi(k)) << k;
}

TEST(PhiSieve, PrimesAndCap) {
    const auto table = phi_sieve(100);
    for (std::uint64_t p : {2, 3, 5, 7, 11, 97}) EXPECT_EQ(table[p], p - 1);
    EXPECT_THROW(phi_sieve(0), invalid_argument);
    try {
        phi_sieve(1000, 999);
        FAIL() << "expected cap_exceeded";
    } catch (const cap_exceeded& e) {
        EXPECT_EQ(e.predicted(), 1000u);
        EXPECT_EQ(e.cap(), 999u);
    }
}

TEST(CoprimeSum, Examples) {
    EXPECT_EQ(coprime_sum(5), 10u);
    EXPECT_EQ(coprime_sum(2), 1u);
    EXPECT_EQ(coprime_sum(1), 0u);
    EXPECT_EQ(coprime_sum(12), 24u);
    EXPECT_EQ(coprime_sum_bruteforce(5), 10u);
    EXPECT_EQ(coprime_sum_bruteforce(6), 6u);
    EXPECT_EQ(coprime_sum_bruteforce(1), 0u);
}

TEST(CoprimeSum, ClosedFormMatchesEnumeration) {
    const auto table = phi_sieve(3000);
    for (std::uint64_t n = 1; n <= 3000; ++n) {
        EXPECT_EQ(coprime_sum(n), coprime_sum_bruteforce(n)) << n;
        EXPECT_EQ(coprime_sum(n, table), coprime_sum(n)) << n;
    }
}

TEST(CoprimeSum, Overflow) {
    // n * phi(n) / 2 for a prime near 2^64 does not fit 64 bits.
    const std::uint64_t p = 18446744073709551557ull;  // largest 64-bit prime
    EXPECT_THROW(coprime_sum_from_phi(p, p - 1), overflow_error);
}

TEST(CoprimeSum, PairingOfResidues) {
    for (std::uint64_t n = 3; n <= 500; ++n)
        for (std::uint64_t k = 1; k < n; ++k) {
            if (std::gcd(n, k) != 1) continue;
            ASSERT_EQ(std::gcd(n, n - k), 1u);
            ASSERT_NE(k, n - k);
        }
}

TEST(FareyLength, Examples) {
    EXPECT_EQ(farey_length(1), 2u);
    EXPECT_EQ(farey_length(4), 7u);
    EXPECT_EQ(farey_length(5), 11u);
    EXPECT_EQ(farey_length(10), 33u);
    EXPECT_EQ(farey_length(1000), 304193u);
    EXPECT_THROW(farey_length(1000, 10), cap_exceeded);
}

TEST(LengthTable, FollowsRecurrence) {
    const auto phis = phi_sieve(10'000);
    const LengthTable lengths(phis);
    EXPECT_EQ(lengths[1], 2u);
    for (std::uint64_t n = 2; n <= 10'000; ++n) ASSERT_EQ(lengths[n], lengths[n - 1] + phi(n));
    EXPECT_EQ(lengths[10'000], farey_length(10'000));
}

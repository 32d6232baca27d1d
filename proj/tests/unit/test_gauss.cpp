#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>

#include "sqparity/gauss.hpp"

using namespace sqparity;

namespace {

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
    std::int64_t result = 1 % mod;
    base %= mod;
    if (base < 0) base += mod;
    while (exp > 0) {
        if (exp & 1) result = result * base % mod;
        base = base * base % mod;
        exp >>= 1;
    }
    return result;
}

// Jacobi symbol by factoring n and applying Euler's criterion prime by prime.
int jacobi_by_euler(std::int64_t a, std::int64_t n) {
    int result = 1;
    std::int64_t m = n;
    for (std::int64_t p = 3; p * p <= m || m > 1; p += 2) {
        if (p * p > m) p = m;
        while (m % p == 0) {
            m /= p;
            const std::int64_t e = pow_mod(a, (p - 1) / 2, p);
            if (e == 0) return 0;
            if (e != 1) result = -result;
        }
    }
    return result;
}

} // namespace

TEST(Jacobi, SpecExamples) {
    EXPECT_EQ(jacobi_symbol(1, 1), 1);
    EXPECT_EQ(jacobi_symbol(2, 15), 1);
    EXPECT_EQ(jacobi_symbol(3, 9), 0);
}

TEST(Jacobi, MatchesEulerCriterion) {
    for (std::int64_t n = 3; n < 400; n += 2) {
        for (std::int64_t a = -50; a < 450; a += 7) {
            ASSERT_EQ(jacobi_symbol(a, n), jacobi_by_euler(a, n)) << a << "/" << n;
        }
    }
}

TEST(Jacobi, RefusesEvenOrNonPositive) {
    EXPECT_THROW((void)jacobi_symbol(1, 4), std::invalid_argument);
    EXPECT_THROW((void)jacobi_symbol(1, 0), std::invalid_argument);
    EXPECT_THROW((void)jacobi_symbol(1, -3), std::invalid_argument);
}

TEST(Epsilon, Values) {
    EXPECT_EQ(epsilon_factor(1), Complex(1.0, 0.0));
    EXPECT_EQ(epsilon_factor(5), Complex(1.0, 0.0));
    EXPECT_EQ(epsilon_factor(3), Complex(0.0, 1.0));
    EXPECT_THROW((void)epsilon_factor(2), std::invalid_argument);
}

TEST(GaussSum, KnownSmallValues) {
    EXPECT_NEAR(std::abs(gauss_sum_closed(0, 1) - Complex(1.0, 0.0)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(gauss_sum_closed(1, 2)), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(gauss_sum_closed(1, 3) - Complex(0.0, std::sqrt(3.0))), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(gauss_sum_closed(1, 4) - Complex(2.0, 2.0)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(gauss_sum_direct(1, 4) - Complex(2.0, 2.0)), 0.0, 1e-13);
    EXPECT_NEAR(std::abs(gauss_sum_closed(3, 4) - Complex(2.0, -2.0)), 0.0, 1e-14);
}

TEST(GaussSum, ClosedRefusesNonCoprime) {
    EXPECT_THROW((void)gauss_sum_closed(2, 4), std::invalid_argument);
    EXPECT_THROW((void)gauss_sum_closed(3, 9), std::invalid_argument);
    EXPECT_NEAR(std::abs(gauss_sum_closed(ReducedFraction(1, 6))), 0.0, 1e-15);
}

TEST(GaussSum, ReducesNumeratorModB) {
    EXPECT_NEAR(std::abs(gauss_sum_closed(8, 7) - gauss_sum_closed(1, 7)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(gauss_sum_closed(-1, 7) - gauss_sum_closed(6, 7)), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(gauss_sum_direct(15, 11) - gauss_sum_direct(4, 11)), 0.0, 1e-12);
}

TEST(GaussSum, AbsoluteValueLaw) {
    // |S| = sqrt(b) for odd b, 0 for b = 2 mod 4, sqrt(2b) for 4 | b
    for (std::int64_t b = 1; b <= 120; ++b) {
        for (std::int64_t a = 0; a < b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            const double mag = std::abs(gauss_sum_direct(a, b));
            double expected = std::sqrt(static_cast<double>(b));
            if (b % 4 == 2) expected = 0.0;
            if (b % 4 == 0) expected = std::sqrt(2.0 * static_cast<double>(b));
            ASSERT_NEAR(mag, expected, 1e-10) << a << "/" << b;
        }
    }
}

TEST(GaussSum, ScanAgreesToTwoHundred) {
    const auto rep = gauss_agreement_scan(200);
    EXPECT_LT(rep.max_scaled_error, 1e-9);
    std::uint64_t pairs = 0;
    for (std::int64_t b = 1; b <= 200; ++b) {
        for (std::int64_t a = 0; a < b; ++a) pairs += std::gcd(a, b) == 1 ? 1 : 0;
    }
    EXPECT_EQ(rep.pairs_checked, pairs);
}

TEST(GaussSumTable, MatchesDirect) {
    for (std::int64_t b : {1, 2, 9, 24, 97}) {
        const GaussSumTable table(b);
        for (std::int64_t a = 0; a < b; ++a) {
            EXPECT_NEAR(std::abs(table.direct(a) - gauss_sum_direct(a, b)), 0.0, 1e-11) << a << "/" << b;
        }
    }
}

TEST(ReducedFraction, Invariants) {
    EXPECT_NO_THROW(ReducedFraction(0, 1));
    EXPECT_THROW(ReducedFraction(0, 2), std::invalid_argument);
    EXPECT_THROW(ReducedFraction(2, 4), std::invalid_argument);
    EXPECT_THROW(ReducedFraction(5, 5), std::invalid_argument);
    EXPECT_THROW(ReducedFraction(1, 0), std::invalid_argument);
    EXPECT_EQ(ReducedFraction::from_residue(-1, 4), ReducedFraction(3, 4));
    EXPECT_LT(ReducedFraction(3, 4), ReducedFraction(1, 5));
}

// Exact power-series machinery for partitions into squares.
//
// Everything here is integer-exact (GMP). The a2(n) column is produced two
// independent ways: a parity-tracking partition DP and the eta-like product
//
//   G(q) = prod_{n>=1} (1 - q^{4n^2})^2 / ((1 - q^{n^2}) (1 - q^{8n^2})),
//
// and callers are expected to cross-assert them.
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "sqparity/types.hpp"

namespace sqparity {

using BigInt = mpz_class;

/// Truncated power series c_0 + c_1 q + ... + c_N q^N.
class CoefficientSeries {
public:
    explicit CoefficientSeries(std::size_t truncation_order);
    explicit CoefficientSeries(std::vector<BigInt> coeffs);

    [[nodiscard]] std::size_t truncation_order() const noexcept { return coeffs_.size() - 1; }
    [[nodiscard]] std::size_t size() const noexcept { return coeffs_.size(); }

    [[nodiscard]] const BigInt& operator[](std::size_t n) const { return coeffs_.at(n); }
    [[nodiscard]] BigInt& operator[](std::size_t n) { return coeffs_.at(n); }

    [[nodiscard]] std::span<const BigInt> coeffs() const noexcept { return coeffs_; }

    /// Horner evaluation in double precision at a complex point.
    [[nodiscard]] Complex evaluate(Complex q) const;

    friend bool operator==(const CoefficientSeries&, const CoefficientSeries&) = default;

private:
    std::vector<BigInt> coeffs_;
};

/// One factor (1 - q^base)^power.
struct ProductFactor {
    std::uint64_t base;
    std::int64_t power;
};

/// A finite product of factors (1 - q^k)^e.
class ProductSpec {
public:
    ProductSpec() = default;
    explicit ProductSpec(std::vector<ProductFactor> factors);

    /// prod_{n^2 <= N} (1 - q^{n^2})^{-1}, the generating function of p2(n).
    static ProductSpec squares(std::size_t N);
    /// The G(q) product restricted to factors with exponent base <= N.
    static ProductSpec g_product(std::size_t N);

    void add(ProductFactor factor);
    [[nodiscard]] std::span<const ProductFactor> factors() const noexcept { return factors_; }

private:
    std::vector<ProductFactor> factors_;
};

/// Coefficients of the product, truncated at q^N. Factors with base > N are identity.
CoefficientSeries expand_product(const ProductSpec& spec, std::size_t N);

/// Exact parity-refined counts for one n.
struct ParityRow {
    std::size_t n = 0;
    BigInt even_count;  // p2(0,2,n)
    BigInt odd_count;   // p2(1,2,n)
    BigInt a2;          // (-1)^n (even_count - odd_count)

    friend bool operator==(const ParityRow&, const ParityRow&) = default;
};

/// Rows n = 0..N from the two-lane parity DP over square parts.
std::vector<ParityRow> count_by_parity(std::size_t N);

/// a2(0..N) from the infinite-product side only.
CoefficientSeries g_coefficients(std::size_t N);

/// p2(0..N), coefficients of prod (1 - q^{n^2})^{-1}.
CoefficientSeries square_partition_counts(std::size_t N);

/// n in [1, N] with p2(0,2,n) = p2(1,2,n), ascending.
std::vector<std::size_t> exceptional_set(std::size_t N);
std::vector<std::size_t> exceptional_set(std::span<const ParityRow> rows);

/// Glaisher's r = 1 identity p1(0,2,n) - p1(1,2,n) = (-1)^n p_odd(n) for all n <= N,
/// with p_odd counting partitions into distinct odd parts.
bool glaisher_check(std::size_t N);

/// Largest n accepted by brute_force_parity.
inline constexpr std::size_t kBruteForceLimit = 120;

struct ParityCounts {
    BigInt even_count;
    BigInt odd_count;
    friend bool operator==(const ParityCounts&, const ParityCounts&) = default;
};

/// Explicit enumeration of non-increasing square sequences summing to n.
/// Throws std::out_of_range above kBruteForceLimit.
ParityCounts brute_force_parity(std::size_t n);

/// p2(m, n) for 0 <= m, n <= N: partitions of n into exactly m squares.
/// table[n][m]; the H2(w; q) coefficient array.
std::vector<std::vector<BigInt>> parts_count_table(std::size_t N);

/// Folds H2(w; q) at w = +1 and w = -1 into (even, odd) counts per n:
/// even = (H2(1) + H2(-1)) / 2, odd = (H2(1) - H2(-1)) / 2.
std::vector<ParityCounts> fold_by_roots_of_unity(const std::vector<std::vector<BigInt>>& table);

/// Natural log of a positive big integer, accurate to double precision.
double log_of(const BigInt& value);

/// value as a double (may overflow to inf beyond ~1e308).
double to_double(const BigInt& value);

} // namespace sqparity

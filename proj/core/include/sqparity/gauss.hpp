// Quadratic Gauss sums S_{a,b} = sum_{n=1}^{b} exp(2 pi i a n^2 / b).
//
// gauss_sum_closed is Gauss's evaluation through Jacobi symbols and the
// epsilon factors; gauss_sum_direct is the literal sum and serves as its oracle.
#pragma once

#include <cstdint>
#include <vector>

#include "sqparity/types.hpp"

namespace sqparity {

/// Jacobi symbol (a/n) for odd n >= 1. Throws std::invalid_argument for even or non-positive n.
int jacobi_symbol(std::int64_t a, std::int64_t n);

/// epsilon_b: 1 if b = 1 (mod 4), i if b = 3 (mod 4). Even b is refused.
Complex epsilon_factor(std::int64_t b);

/// The defining sum; depends only on a mod b.
Complex gauss_sum_direct(std::int64_t a, std::int64_t b);

/// Closed form for coprime (a, b); a is reduced mod b first.
///   b = 2 (mod 4): 0
///   b odd:         epsilon_b sqrt(b) (a/b)
///   4 | b:         (1+i) epsilon_a^{-1} sqrt(b) (b/a)
/// S_{0,1} = 1. Non-coprime input throws std::invalid_argument.
Complex gauss_sum_closed(std::int64_t a, std::int64_t b);
Complex gauss_sum_closed(const ReducedFraction& frac);

/// Direct sums for every residue a at one fixed modulus b.
///
/// Precomputes the b-th roots of unity and the multiplicity of each square
/// residue n^2 mod b, so direct(a) costs one pass over distinct squares.
class GaussSumTable {
public:
    explicit GaussSumTable(std::int64_t b);

    [[nodiscard]] std::int64_t modulus() const noexcept { return b_; }
    [[nodiscard]] Complex direct(std::int64_t a) const;

private:
    std::int64_t b_;
    std::vector<Complex> roots_;
    std::vector<std::int64_t> square_residues_;
    std::vector<std::int64_t> multiplicity_;
};

struct GaussAgreementReport {
    std::int64_t b_max = 0;
    std::uint64_t pairs_checked = 0;
    double max_abs_error = 0.0;
    double max_scaled_error = 0.0;  // max of |direct - closed| / b
    std::int64_t argmax_a = 0;
    std::int64_t argmax_b = 1;
};

/// Compares closed and direct evaluations over all coprime (a, b), 1 <= b <= b_max.
GaussAgreementReport gauss_agreement_scan(std::int64_t b_max);

} // namespace sqparity

#include "sqparity/series.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace sqparity {

CoefficientSeries::CoefficientSeries(std::size_t truncation_order)
    : coeffs_(truncation_order + 1, BigInt(0)) {}

CoefficientSeries::CoefficientSeries(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw std::invalid_argument("CoefficientSeries: need at least the constant term");
    }
}

Complex CoefficientSeries::evaluate(Complex q) const {
    Complex acc{0.0, 0.0};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * q + to_double(*it);
    }
    return acc;
}

ProductSpec::ProductSpec(std::vector<ProductFactor> factors) {
    factors_.reserve(factors.size());
    for (const auto& f : factors) add(f);
}

void ProductSpec::add(ProductFactor factor) {
    if (factor.base < 1) {
        throw std::invalid_argument("ProductSpec: factor base must be >= 1");
    }
    factors_.push_back(factor);
}

ProductSpec ProductSpec::squares(std::size_t N) {
    ProductSpec spec;
    for (std::uint64_t k = 1; k * k <= N; ++k) spec.add({k * k, -1});
    return spec;
}

ProductSpec ProductSpec::g_product(std::size_t N) {
    ProductSpec spec;
    for (std::uint64_t k = 1; k * k <= N; ++k) {
        const std::uint64_t s = k * k;
        spec.add({s, -1});
        if (4 * s <= N) spec.add({4 * s, 2});
        if (8 * s <= N) spec.add({8 * s, -1});
    }
    return spec;
}

CoefficientSeries expand_product(const ProductSpec& spec, std::size_t N) {
    CoefficientSeries out(N);
    out[0] = 1;
    for (const auto& [base, power] : spec.factors()) {
        if (base > N || power == 0) continue;
        const std::size_t k = base;
        if (power > 0) {
            // multiply by (1 - q^k), |power| times: backward so c[n-k] is the old value
            for (std::int64_t rep = 0; rep < power; ++rep) {
                for (std::size_t n = N; n >= k; --n) {
                    out[n] -= out[n - k];
                    if (n == k) break;
                }
            }
        } else {
            // divide by (1 - q^k): forward recurrence c[n] += c[n-k]
            for (std::int64_t rep = 0; rep < -power; ++rep) {
                for (std::size_t n = k; n <= N; ++n) out[n] += out[n - k];
            }
        }
    }
    return out;
}

std::vector<ParityRow> count_by_parity(std::size_t N) {
    std::vector<BigInt> even(N + 1, BigInt(0));
    std::vector<BigInt> odd(N + 1, BigInt(0));
    even[0] = 1;

    // One more copy of part s flips the parity lane.
    for (std::size_t root = 1; root * root <= N; ++root) {
        const std::size_t s = root * root;
        for (std::size_t n = s; n <= N; ++n) {
            even[n] += odd[n - s];
            odd[n] += even[n - s];
        }
    }

    std::vector<ParityRow> rows(N + 1);
    for (std::size_t n = 0; n <= N; ++n) {
        rows[n].n = n;
        rows[n].even_count = std::move(even[n]);
        rows[n].odd_count = std::move(odd[n]);
        if (n % 2 == 0) {
            rows[n].a2 = rows[n].even_count - rows[n].odd_count;
        } else {
            rows[n].a2 = rows[n].odd_count - rows[n].even_count;
        }
    }
    return rows;
}

CoefficientSeries g_coefficients(std::size_t N) {
    return expand_product(ProductSpec::g_product(N), N);
}

CoefficientSeries square_partition_counts(std::size_t N) {
    return expand_product(ProductSpec::squares(N), N);
}

std::vector<std::size_t> exceptional_set(std::span<const ParityRow> rows) {
    std::vector<std::size_t> out;
    for (const auto& row : rows) {
        if (row.n >= 1 && row.even_count == row.odd_count) out.push_back(row.n);
    }
    return out;
}

std::vector<std::size_t> exceptional_set(std::size_t N) {
    const auto rows = count_by_parity(N);
    return exceptional_set(rows);
}

bool glaisher_check(std::size_t N) {
    // Left side: parity DP over all positive parts.
    std::vector<BigInt> even(N + 1, BigInt(0));
    std::vector<BigInt> odd(N + 1, BigInt(0));
    even[0] = 1;
    for (std::size_t k = 1; k <= N; ++k) {
        for (std::size_t n = k; n <= N; ++n) {
            even[n] += odd[n - k];
            odd[n] += even[n - k];
        }
    }

    // Right side: prod (1 + q^{2j+1}).
    std::vector<BigInt> distinct_odd(N + 1, BigInt(0));
    distinct_odd[0] = 1;
    for (std::size_t k = 1; k <= N; k += 2) {
        for (std::size_t n = N; n >= k; --n) {
            distinct_odd[n] += distinct_odd[n - k];
            if (n == k) break;
        }
    }

    for (std::size_t n = 0; n <= N; ++n) {
        BigInt lhs = even[n] - odd[n];
        BigInt rhs = (n % 2 == 0) ? BigInt(distinct_odd[n]) : BigInt(-distinct_odd[n]);
        if (lhs != rhs) return false;
    }
    return true;
}

namespace {

void enumerate_squares(std::size_t remaining, std::size_t max_root, std::size_t parts,
                       std::uint64_t& even, std::uint64_t& odd) {
    if (remaining == 0) {
        (parts % 2 == 0 ? even : odd) += 1;
        return;
    }
    for (std::size_t r = max_root; r >= 1; --r) {
        const std::size_t s = r * r;
        if (s <= remaining) enumerate_squares(remaining - s, r, parts + 1, even, odd);
    }
}

} // namespace

ParityCounts brute_force_parity(std::size_t n) {
    if (n > kBruteForceLimit) {
        throw std::out_of_range("brute_force_parity: n = " + std::to_string(n) +
                                " exceeds the enumeration guard " +
                                std::to_string(kBruteForceLimit));
    }
    std::size_t max_root = 0;
    while ((max_root + 1) * (max_root + 1) <= n) ++max_root;
    std::uint64_t even = 0;
    std::uint64_t odd = 0;
    enumerate_squares(n, max_root, 0, even, odd);
    return {BigInt(static_cast<unsigned long>(even)), BigInt(static_cast<unsigned long>(odd))};
}

std::vector<std::vector<BigInt>> parts_count_table(std::size_t N) {
    std::vector<std::vector<BigInt>> table(N + 1);
    for (std::size_t n = 0; n <= N; ++n) table[n].assign(n + 1, BigInt(0));
    table[0][0] = 1;
    for (std::size_t root = 1; root * root <= N; ++root) {
        const std::size_t s = root * root;
        for (std::size_t n = s; n <= N; ++n) {
            const auto& prev = table[n - s];
            auto& cur = table[n];
            for (std::size_t m = 1; m <= prev.size(); ++m) cur[m] += prev[m - 1];
        }
    }
    return table;
}

std::vector<ParityCounts> fold_by_roots_of_unity(const std::vector<std::vector<BigInt>>& table) {
    std::vector<ParityCounts> out;
    out.reserve(table.size());
    for (const auto& row : table) {
        BigInt at_plus(0);
        BigInt at_minus(0);
        for (std::size_t m = 0; m < row.size(); ++m) {
            at_plus += row[m];
            if (m % 2 == 0) {
                at_minus += row[m];
            } else {
                at_minus -= row[m];
            }
        }
        BigInt twice_even = at_plus + at_minus;
        BigInt twice_odd = at_plus - at_minus;
        if (mpz_odd_p(twice_even.get_mpz_t()) || mpz_odd_p(twice_odd.get_mpz_t())) {
            throw std::logic_error("fold_by_roots_of_unity: non-integral fold");
        }
        ParityCounts c;
        mpz_divexact_ui(c.even_count.get_mpz_t(), twice_even.get_mpz_t(), 2);
        mpz_divexact_ui(c.odd_count.get_mpz_t(), twice_odd.get_mpz_t(), 2);
        out.push_back(std::move(c));
    }
    return out;
}

double log_of(const BigInt& value) {
    if (sgn(value) <= 0) {
        throw std::domain_error("log_of: argument must be positive");
    }
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exponent) * std::numbers::ln2;
}

double to_double(const BigInt& value) {
    if (sgn(value) == 0) return 0.0;
    long exponent = 0;
    const double mantissa = mpz_get_d_2exp(&exponent, value.get_mpz_t());
    return std::ldexp(mantissa, static_cast<int>(exponent));
}

} // namespace sqparity

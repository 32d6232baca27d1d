#include "sqparity/gauss.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "compensated.hpp"
#include "sqparity/parallel.hpp"

namespace sqparity {

namespace {

__extension__ using int128 = __int128;

std::int64_t mod_positive(std::int64_t a, std::int64_t b) {
    std::int64_t r = a % b;
    return r < 0 ? r + b : r;
}

std::int64_t mul_mod(std::int64_t x, std::int64_t y, std::int64_t m) {
    return static_cast<std::int64_t>((static_cast<int128>(x) * y) % m);
}

Complex unit_root(std::int64_t k, std::int64_t b) {
    const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(b);
    return {std::cos(angle), std::sin(angle)};
}

} // namespace

int jacobi_symbol(std::int64_t a, std::int64_t n) {
    if (n < 1 || n % 2 == 0) {
        throw std::invalid_argument("jacobi_symbol: modulus must be odd and positive, got " +
                                    std::to_string(n));
    }
    a = mod_positive(a, n);
    int result = 1;
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            const std::int64_t r = n % 8;
            if (r == 3 || r == 5) result = -result;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) result = -result;
        a %= n;
    }
    return n == 1 ? result : 0;
}

Complex epsilon_factor(std::int64_t b) {
    if (b % 2 == 0) {
        throw std::invalid_argument("epsilon_factor: argument must be odd, got " + std::to_string(b));
    }
    return mod_positive(b, 4) == 1 ? Complex{1.0, 0.0} : Complex{0.0, 1.0};
}

Complex gauss_sum_direct(std::int64_t a, std::int64_t b) {
    if (b < 1) {
        throw std::invalid_argument("gauss_sum_direct: modulus must be positive");
    }
    const std::int64_t ar = mod_positive(a, b);
    detail::CompensatedComplexSum sum;
    for (std::int64_t n = 1; n <= b; ++n) {
        const std::int64_t sq = mul_mod(n, n, b);
        sum.add(unit_root(mul_mod(ar, sq, b), b));
    }
    return sum.value();
}

Complex gauss_sum_closed(std::int64_t a, std::int64_t b) {
    if (b < 1) {
        throw std::invalid_argument("gauss_sum_closed: modulus must be positive");
    }
    const std::int64_t ar = mod_positive(a, b);
    if (std::gcd(ar, b) != 1) {
        throw std::invalid_argument("gauss_sum_closed: (" + std::to_string(a) + ", " +
                                    std::to_string(b) + ") not coprime");
    }
    if (b == 1) return {1.0, 0.0};
    const double root_b = std::sqrt(static_cast<double>(b));
    switch (b % 4) {
    case 2:
        return {0.0, 0.0};
    case 1:
    case 3:
        return epsilon_factor(b) * root_b * static_cast<double>(jacobi_symbol(ar, b));
    default: {
        // 4 | b, so ar is odd; epsilon inverse is taken of ar mod 4.
        const Complex eps_inv = 1.0 / epsilon_factor(ar % 4);
        return Complex{1.0, 1.0} * eps_inv * root_b * static_cast<double>(jacobi_symbol(b, ar));
    }
    }
}

Complex gauss_sum_closed(const ReducedFraction& frac) {
    return gauss_sum_closed(frac.numerator(), frac.denominator());
}

GaussSumTable::GaussSumTable(std::int64_t b) : b_(b) {
    if (b < 1) {
        throw std::invalid_argument("GaussSumTable: modulus must be positive");
    }
    roots_.reserve(static_cast<std::size_t>(b));
    for (std::int64_t k = 0; k < b; ++k) roots_.push_back(unit_root(k, b));

    std::vector<std::int64_t> counts(static_cast<std::size_t>(b), 0);
    for (std::int64_t n = 1; n <= b; ++n) ++counts[static_cast<std::size_t>(mul_mod(n, n, b))];
    for (std::int64_t r = 0; r < b; ++r) {
        if (counts[static_cast<std::size_t>(r)] != 0) {
            square_residues_.push_back(r);
            multiplicity_.push_back(counts[static_cast<std::size_t>(r)]);
        }
    }
}

Complex GaussSumTable::direct(std::int64_t a) const {
    const std::int64_t ar = mod_positive(a, b_);
    detail::CompensatedComplexSum sum;
    for (std::size_t i = 0; i < square_residues_.size(); ++i) {
        const auto idx = static_cast<std::size_t>(mul_mod(ar, square_residues_[i], b_));
        sum.add(static_cast<double>(multiplicity_[i]) * roots_[idx]);
    }
    return sum.value();
}

GaussAgreementReport gauss_agreement_scan(std::int64_t b_max) {
    if (b_max < 1) {
        throw std::invalid_argument("gauss_agreement_scan: b_max must be >= 1");
    }
    struct PerModulus {
        std::uint64_t pairs = 0;
        double max_abs = 0.0;
        double max_scaled = 0.0;
        std::int64_t argmax_a = 0;
    };
    std::vector<PerModulus> per(static_cast<std::size_t>(b_max));

    parallel_for(per.size(), [&](std::size_t idx) {
        const auto b = static_cast<std::int64_t>(idx) + 1;
        const GaussSumTable table(b);
        PerModulus& out = per[idx];
        for (std::int64_t a = 0; a < b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            const double err = std::abs(table.direct(a) - gauss_sum_closed(a, b));
            ++out.pairs;
            if (err > out.max_abs) out.max_abs = err;
            const double scaled = err / static_cast<double>(b);
            if (scaled > out.max_scaled) {
                out.max_scaled = scaled;
                out.argmax_a = a;
            }
        }
    });

    GaussAgreementReport report;
    report.b_max = b_max;
    for (std::size_t idx = 0; idx < per.size(); ++idx) {
        report.pairs_checked += per[idx].pairs;
        if (per[idx].max_abs > report.max_abs_error) report.max_abs_error = per[idx].max_abs;
        if (per[idx].max_scaled > report.max_scaled_error) {
            report.max_scaled_error = per[idx].max_scaled;
            report.argmax_a = per[idx].argmax_a;
            report.argmax_b = static_cast<std::int64_t>(idx) + 1;
        }
    }
    return report;
}

} // namespace sqparity

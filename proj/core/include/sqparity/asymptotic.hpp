// Saddle-point parameters and main terms for a2(n), p2(n) and the parity counts.
//
// With E = Gamma(3/2) zeta(3/2) / (4 sqrt 2):
//
//   a2(n) ~ B^{1/3} / (sqrt(3 pi) (2n)^{5/6}) exp(3 E^{2/3} n^{1/3}),  B = 2E
//   p2(n) ~ B0 n^{-7/6} exp(Lambda n^{1/3}),  Lambda = 6 E^{2/3},  B0 = Lambda / (2 (3 pi)^{3/2})
//
// Main terms are formed in log space; the exponent passes 100 near n = 3e4.
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "sqparity/series.hpp"

namespace sqparity {

struct AsymptoticConstants {
    double E;        // Gamma(3/2) zeta(3/2) / (4 sqrt 2)
    double B;        // Gamma(3/2) zeta(3/2) / (2 sqrt 2)
    double Lambda;   // 3 (Gamma(3/2) zeta(3/2) / 2)^{2/3}
    double B0;       // Lambda / (2 (3 pi)^{3/2})
    double remark1;  // E^{2/3} / (2 pi sqrt(3 pi)), the parity-count prefactor
};

const AsymptoticConstants& asymptotic_constants();

struct SaddleParams {
    std::uint64_t n = 0;
    double y = 0.0;  // n^{-2/3} (sqrt(pi) zeta(3/2) / (8 sqrt 2))^{2/3}
    double m = 0.0;  // n y
    double B = 0.0;
};

SaddleParams saddle_params(std::uint64_t n);

double log_a2_main_term(std::uint64_t n);
double a2_main_term(std::uint64_t n);
/// The unsimplified saddle form y/(2 sqrt 2 pi) e^{...} 2 sqrt 2 sqrt pi / (sqrt 3 (2n)^{1/6} B^{1/3}).
double log_a2_main_term_saddle_form(std::uint64_t n);

double log_p2_main_term(std::uint64_t n);
double p2_main_term(std::uint64_t n);
/// Half of p2_main_term: the common main term of p2(0,2,n) and p2(1,2,n).
double log_p2_parity_main_term(std::uint64_t n);
double p2_parity_main_term(std::uint64_t n);

struct MeinardusData {
    double alpha;    // position of the pole of D(s)
    double A;        // its residue
    double D0;       // D(0)
    double D0prime;  // D'(0)

    static MeinardusData for_h2();
    static MeinardusData for_g();
};

struct MeinardusConstants {
    double C;
    double kappa;
    double exp_coeff;  // coefficient of n^{alpha/(alpha+1)} in the exponent
};

/// Throws std::invalid_argument unless alpha > 0 and A > 0.
MeinardusConstants meinardus_constants(const MeinardusData& data);

/// |-B/(2 sqrt(y)) + n y| at y = y_scale * y(n).
double taylor_cancellation_check(std::uint64_t n, double y_scale = 1.0);

struct AsymptoticReport {
    std::uint64_t n = 0;
    BigInt exact_a2;
    double a2_main = 0.0;
    BigInt exact_p2;
    double p2_main = 0.0;
    double ratio_a2 = 0.0;
    double ratio_p2 = 0.0;
};

/// One report per grid value, using rows from count_by_parity. A grid value
/// beyond the table throws std::out_of_range; n = 0 throws std::invalid_argument.
/// A non-positive ratio at n >= 65 throws std::logic_error.
std::vector<AsymptoticReport> error_report(std::span<const ParityRow> rows,
                                           std::span<const std::uint64_t> grid);

/// Mean of |ratio_a2 - 1|.
double mean_abs_ratio_deviation(std::span<const AsymptoticReport> reports);

struct ParityBalance {
    double ratio = 0.0;          // even / odd
    double ratio_minus_one = 0.0;  // (even - odd) / odd without cancellation
};

ParityBalance parity_balance(const ParityRow& row);

} // namespace sqparity

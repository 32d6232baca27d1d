// Real-argument zeta functions and the constants the rest of the toolkit uses.
//
// All evaluations go through one Euler-Maclaurin scheme: 50 explicit terms
// plus Bernoulli corrections through B_12.
#pragma once

#include <vector>

namespace sqparity {

struct SpecialConstants {
    double zeta_3_2;        // zeta(3/2)
    double gamma_3_2;       // Gamma(3/2) = sqrt(pi)/2
    double euler_gamma;     // Euler-Mascheroni constant
    double bound_constant;  // zeta(3/2) / (1.14 * 2 sqrt 2), the lambda* ceiling
};

/// Computed on first use, immutable afterwards.
const SpecialConstants& special_constants();

/// zeta(s) for real s > 1.
double riemann_zeta(double s);

/// zeta(s, q) = sum_{n>=0} (q + n)^{-s} for s > 1, 0 < q <= 1.
double hurwitz_zeta(double s, double q);

/// Magnitude of the first omitted Euler-Maclaurin correction at (s, q).
double hurwitz_tail_bound(double s, double q);

/// 1 + 8^{-s} - 2^{1-2s}, the factor with D(s) = factor(s) zeta(2s).
double dirichlet_factor(double s);
double dirichlet_factor_derivative(double s);

/// D(s) = (1 + 8^{-s} - 2^{1-2s}) zeta(2s) for s > 1/2. The pole s = 1/2 and
/// everything left of it are refused.
double dirichlet_D(double s);

/// D(0) and D'(0) from the factor form, using zeta(0) = -1/2 and zeta'(0) = -log(2 pi)/2.
double dirichlet_D_at_zero();
double dirichlet_D_prime_at_zero();

struct ResidueProbe {
    std::vector<double> offsets;        // s - 1/2
    std::vector<double> scaled_values;  // (s - 1/2) D(s)
    double extrapolated = 0.0;          // polynomial extrapolation to offset 0
};

/// Samples (s - 1/2) D(s) just right of the pole and extrapolates to the residue.
ResidueProbe dirichlet_residue_probe(const std::vector<double>& offsets = {1e-3, 1e-4, 1e-5});

namespace detail {

/// The raw Euler-Maclaurin sum. Also valid as the analytic continuation for
/// real s != 1 with s > -11; used to probe zeta near 0.
double euler_maclaurin_hurwitz(double s, double q);

} // namespace detail

} // namespace sqparity

#include "sqparity/zeta.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "compensated.hpp"

namespace sqparity {

namespace {

constexpr int kExplicitTerms = 50;

// B_{2j} / (2j)! for j = 1..6, then the first omitted one (j = 7).
constexpr std::array<double, 6> kBernoulliOverFactorial = {
    (1.0 / 6.0) / 2.0,
    (-1.0 / 30.0) / 24.0,
    (1.0 / 42.0) / 720.0,
    (-1.0 / 30.0) / 40320.0,
    (5.0 / 66.0) / 3628800.0,
    (-691.0 / 2730.0) / 479001600.0,
};
constexpr double kOmittedBernoulliOverFactorial = (7.0 / 6.0) / 87178291200.0;

void require_zeta_domain(double s, const char* who) {
    if (!(s > 1.0)) {
        throw std::domain_error(std::string(who) + ": requires s > 1, got " + std::to_string(s));
    }
}

} // namespace

double detail::euler_maclaurin_hurwitz(double s, double q) {
    if (s == 1.0) {
        throw std::domain_error("euler_maclaurin_hurwitz: pole at s = 1");
    }
    if (!(q > 0.0)) {
        throw std::domain_error("euler_maclaurin_hurwitz: requires q > 0");
    }
    detail::CompensatedSum sum;
    for (int k = kExplicitTerms - 1; k >= 0; --k) sum.add(std::pow(q + k, -s));

    const double x = q + kExplicitTerms;
    sum.add(std::pow(x, 1.0 - s) / (s - 1.0));
    sum.add(0.5 * std::pow(x, -s));

    // s (s+1) ... (s+2j-2) x^{-s-2j+1}
    double rising = s;
    double power = std::pow(x, -s - 1.0);
    const double inv_x2 = 1.0 / (x * x);
    for (std::size_t j = 0; j < kBernoulliOverFactorial.size(); ++j) {
        sum.add(kBernoulliOverFactorial[j] * rising * power);
        const double m = 2.0 * static_cast<double>(j + 1);
        rising *= (s + m - 1.0) * (s + m);
        power *= inv_x2;
    }
    return sum.value();
}

double hurwitz_tail_bound(double s, double q) {
    const double x = q + kExplicitTerms;
    double rising = 1.0;
    for (int k = 0; k < 13; ++k) rising *= s + k;
    return std::abs(kOmittedBernoulliOverFactorial * rising * std::pow(x, -s - 13.0));
}

double riemann_zeta(double s) {
    require_zeta_domain(s, "riemann_zeta");
    return detail::euler_maclaurin_hurwitz(s, 1.0);
}

double hurwitz_zeta(double s, double q) {
    require_zeta_domain(s, "hurwitz_zeta");
    if (!(q > 0.0 && q <= 1.0)) {
        throw std::domain_error("hurwitz_zeta: requires 0 < q <= 1, got " + std::to_string(q));
    }
    return detail::euler_maclaurin_hurwitz(s, q);
}

const SpecialConstants& special_constants() {
    static const SpecialConstants constants = [] {
        SpecialConstants c{};
        c.zeta_3_2 = riemann_zeta(1.5);
        c.gamma_3_2 = std::sqrt(std::numbers::pi) / 2.0;
        c.euler_gamma = std::numbers::egamma;
        c.bound_constant = c.zeta_3_2 / (1.14 * 2.0 * std::numbers::sqrt2);
        return c;
    }();
    return constants;
}

double dirichlet_factor(double s) {
    return 1.0 + std::pow(8.0, -s) - std::pow(2.0, 1.0 - 2.0 * s);
}

double dirichlet_factor_derivative(double s) {
    const double ln2 = std::numbers::ln2;
    return -3.0 * ln2 * std::pow(8.0, -s) + 4.0 * ln2 * std::pow(2.0, 1.0 - 2.0 * s) / 2.0;
}

double dirichlet_D(double s) {
    if (s == 0.5) {
        throw std::domain_error("dirichlet_D: pole at s = 1/2");
    }
    if (!(s > 0.5)) {
        throw std::domain_error("dirichlet_D: only the convergent region s > 1/2 is evaluated");
    }
    return dirichlet_factor(s) * riemann_zeta(2.0 * s);
}

double dirichlet_D_at_zero() {
    constexpr double zeta_at_zero = -0.5;
    return dirichlet_factor(0.0) * zeta_at_zero;
}

double dirichlet_D_prime_at_zero() {
    // d/ds [factor(s) zeta(2s)] = factor'(s) zeta(2s) + 2 factor(s) zeta'(2s)
    constexpr double zeta_at_zero = -0.5;
    const double zeta_prime_at_zero = -0.5 * std::log(2.0 * std::numbers::pi);
    return dirichlet_factor_derivative(0.0) * zeta_at_zero +
           2.0 * dirichlet_factor(0.0) * zeta_prime_at_zero;
}

ResidueProbe dirichlet_residue_probe(const std::vector<double>& offsets) {
    if (offsets.empty()) {
        throw std::invalid_argument("dirichlet_residue_probe: need at least one offset");
    }
    ResidueProbe probe;
    probe.offsets = offsets;
    for (double eps : offsets) {
        if (!(eps > 0.0)) {
            throw std::invalid_argument("dirichlet_residue_probe: offsets must be positive");
        }
        probe.scaled_values.push_back(eps * dirichlet_D(0.5 + eps));
    }
    // Lagrange interpolation through all samples, evaluated at offset 0.
    double extrapolated = 0.0;
    for (std::size_t i = 0; i < offsets.size(); ++i) {
        double weight = 1.0;
        for (std::size_t j = 0; j < offsets.size(); ++j) {
            if (j != i) weight *= offsets[j] / (offsets[j] - offsets[i]);
        }
        extrapolated += weight * probe.scaled_values[i];
    }
    probe.extrapolated = extrapolated;
    return probe;
}

} // namespace sqparity

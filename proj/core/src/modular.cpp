#include "sqparity/modular.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "compensated.hpp"
#include "sqparity/lambda.hpp"
#include "sqparity/parallel.hpp"
#include "sqparity/series.hpp"
#include "sqparity/zeta.hpp"

namespace sqparity {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kTailLog = -41.44653167389282;  // log(1e-18)

// log(1 + z) without losing the real part when |z| is small.
Complex log1p_complex(Complex z) {
    const double re = 0.5 * std::log1p(2.0 * z.real() + std::norm(z));
    const double im = std::atan2(z.imag(), 1.0 + z.real());
    return {re, im};
}

void require_inside_disc(Complex q, const char* who) {
    if (!(std::abs(q) < 1.0)) {
        throw std::domain_error(std::string(who) + ": need |q| < 1");
    }
}

std::int64_t rows_for_square_tail(double minus_log_abs_q) {
    // smallest N with N^2 * (-log|q|) > -log(1e-18)
    auto n = static_cast<std::int64_t>(std::ceil(std::sqrt(-kTailLog / minus_log_abs_q)));
    return std::max<std::int64_t>(n, 1);
}

} // namespace

Complex TauPoint::tau() const { return {y, -kTwoPi * x}; }

Complex TauPoint::q() const { return std::exp(-tau()); }

Complex TauPoint::tau_prime() const {
    if (!anchor) {
        throw std::logic_error("TauPoint::tau_prime: no anchor fraction");
    }
    const double shift = static_cast<double>(anchor->numerator()) /
                         static_cast<double>(anchor->denominator());
    return {y, -kTwoPi * (x - shift)};
}

std::int64_t least_b1(std::int64_t b) {
    if (b < 1) {
        throw std::invalid_argument("least_b1: b must be positive");
    }
    std::int64_t b1 = 1;
    while ((b1 * b1) % b != 0) ++b1;
    return b1;
}

std::int64_t d_h_residue(const ReducedFraction& frac, std::int64_t h) {
    const std::int64_t b = frac.denominator();
    if (h < 1 || h > b) {
        throw std::invalid_argument("d_h_residue: h must lie in [1, b]");
    }
    return (frac.numerator() * ((h * h) % b)) % b;
}

PProduct p_product(const ReducedFraction& frac, Complex tau_prime, PProductOptions options) {
    if (!(tau_prime.real() > 0.0)) {
        throw std::domain_error("p_product: need Re(tau') > 0");
    }
    const Complex root = std::sqrt(tau_prime);
    if (!(root.real() > 0.0)) {
        throw std::logic_error("p_product: principal square root has Re <= 0");
    }
    const std::int64_t b = frac.denominator();
    const double bd = static_cast<double>(b);
    const double scale = std::pow(kTwoPi, 1.5);

    Complex value{1.0, 0.0};
    detail::CompensatedSum log_abs;
    std::int64_t max_l = 0;

    for (std::int64_t h = 1; h <= b; ++h) {
        const std::int64_t dh = d_h_residue(frac, h);
        const Complex phase_shift{0.0, -kTwoPi * static_cast<double>(h) / bd};
        for (int s = 1; s <= 2; ++s) {
            double mu = 1.0;
            if (dh != 0) mu = (s == 1 ? static_cast<double>(dh) : bd - static_cast<double>(dh)) / bd;
            const Complex direction =
                std::polar(1.0, std::numbers::pi * (2.0 * s + 1.0) / 4.0) / (bd * root);
            const Complex coeff = scale * direction;
            if (!(coeff.real() < 0.0)) {
                throw PProductError("p_product: |g| >= 1 at h = " + std::to_string(h) +
                                        ", l = 0, s = " + std::to_string(s),
                                    h, 0, s);
            }
            bool converged = false;
            for (std::int64_t l = 0; l <= options.max_terms; ++l) {
                const Complex g =
                    std::exp(coeff * std::sqrt(static_cast<double>(l) + mu) + phase_shift);
                const double mag = std::abs(g);
                if (mag >= 1.0) {
                    throw PProductError("p_product: |g| >= 1 at h = " + std::to_string(h) +
                                            ", l = " + std::to_string(l) +
                                            ", s = " + std::to_string(s),
                                        h, l, s);
                }
                if (mag < options.tolerance) {
                    converged = true;
                    break;
                }
                value /= 1.0 - g;
                log_abs.add(-log1p_complex(-g).real());
                max_l = std::max(max_l, l);
            }
            if (!converged) {
                throw PProductError("p_product: |g| still above tolerance after " +
                                        std::to_string(options.max_terms) + " terms at h = " +
                                        std::to_string(h) + ", s = " + std::to_string(s),
                                    h, options.max_terms, s);
            }
        }
    }
    return {value, log_abs.value(), max_l};
}

Complex h2_truncated(Complex q, std::int64_t N) {
    require_inside_disc(q, "h2_truncated");
    Complex product{1.0, 0.0};
    for (std::int64_t n = 1; n <= N; ++n) {
        product /= 1.0 - std::pow(q, static_cast<double>(n * n));
    }
    return product;
}

Complex h2_product(Complex q) {
    require_inside_disc(q, "h2_product");
    if (q == Complex{}) return {1.0, 0.0};
    return h2_truncated(q, rows_for_square_tail(-std::log(std::abs(q))));
}

Complex h2_series(Complex q) {
    require_inside_disc(q, "h2_series");
    if (q == Complex{}) return {1.0, 0.0};
    // p2(n) <= e^{Lambda n^{1/3}}
    const double y = -std::log(std::abs(q));
    const auto& k = special_constants();
    const double growth = 3.0 * std::pow(k.gamma_3_2 * k.zeta_3_2 / 2.0, 2.0 / 3.0);
    std::size_t N = 8;
    while (growth * std::cbrt(static_cast<double>(N)) - y * static_cast<double>(N) > kTailLog) N *= 2;
    return square_partition_counts(N).evaluate(q);
}

Complex h2_at_rational(const ReducedFraction& frac, Complex tau_prime) {
    if (!(tau_prime.real() > 0.0)) {
        throw std::domain_error("h2_at_rational: need Re(tau') > 0");
    }
    const std::int64_t a = frac.numerator();
    const std::int64_t b = frac.denominator();
    const std::int64_t N = rows_for_square_tail(tau_prime.real());
    Complex product{1.0, 0.0};
    for (std::int64_t n = 1; n <= N; ++n) {
        const std::int64_t residue = (a * ((n * n) % b)) % b;
        const Complex exponent = Complex{0.0, kTwoPi * static_cast<double>(residue) /
                                                  static_cast<double>(b)} -
                                 static_cast<double>(n * n) * tau_prime;
        product /= 1.0 - std::exp(exponent);
    }
    return product;
}

WrightFactors wright_factors(const ReducedFraction& frac, Complex tau_prime) {
    WrightFactors out;
    out.frac = frac;
    out.b1 = least_b1(frac.denominator());
    out.b2 = frac.denominator() / out.b1;
    out.c_b = static_cast<double>(out.b1) / kTwoPi;
    out.lambda = special_constants().gamma_3_2 * lambda_big_star(frac);
    out.p_value = p_product(frac, tau_prime).value;
    const Complex root = std::sqrt(tau_prime);
    out.rhs = out.c_b * root * std::exp(out.lambda / root) * out.p_value;
    return out;
}

double verify_wright_transform(const ReducedFraction& frac, Complex tau_prime) {
    const Complex lhs = h2_at_rational(frac, tau_prime);
    const WrightFactors w = wright_factors(frac, tau_prime);
    return std::abs(lhs - w.rhs) / std::abs(lhs);
}

double verify_g_factorization(Complex q) {
    require_inside_disc(q, "verify_g_factorization");
    if (q == Complex{}) return std::abs(g_coefficients(0).evaluate(q) - 1.0);

    const double y = -std::log(std::abs(q));
    const auto& k = special_constants();
    // a2(n) <= p2(n) <= e^{Lambda n^{1/3}}
    const double growth = 3.0 * std::pow(k.gamma_3_2 * k.zeta_3_2 / 2.0, 2.0 / 3.0);
    std::size_t N = 8;
    while (growth * std::cbrt(static_cast<double>(N)) - y * static_cast<double>(N) > kTailLog) N *= 2;

    const Complex series = g_coefficients(N).evaluate(q);
    const Complex h4 = h2_product(q * q * q * q);
    const Complex product = h2_product(q) * h2_product(std::pow(q, 8.0)) / (h4 * h4);
    return std::abs(series - product) / std::abs(product);
}

double verify_g_factorization(const TauPoint& tau) {
    if (!(tau.y > 0.0)) {
        throw std::domain_error("verify_g_factorization: need y > 0");
    }
    return verify_g_factorization(tau.q());
}

Complex log_g(const TauPoint& tau) {
    if (!(tau.y > 0.0)) {
        throw std::domain_error("log_g: need y > 0");
    }
    const Complex t = tau.tau();
    const std::int64_t N = rows_for_square_tail(tau.y);
    detail::CompensatedComplexSum total;
    for (std::int64_t n = 1; n <= N; ++n) {
        const double n2 = static_cast<double>(n * n);
        total.add(-log1p_complex(-std::exp(-n2 * t)));
        total.add(2.0 * log1p_complex(-std::exp(-4.0 * n2 * t)));
        total.add(-log1p_complex(-std::exp(-8.0 * n2 * t)));
    }
    return total.value();
}

double verify_small_tau_expansion(const TauPoint& tau) {
    if (!(tau.y > 0.0)) {
        throw std::domain_error("verify_small_tau_expansion: need y > 0");
    }
    if (std::abs(tau.x) > 0.5) {
        throw std::domain_error("verify_small_tau_expansion: need |x| <= 1/2");
    }
    const Complex t = tau.tau();
    if (std::abs(std::arg(t)) > std::numbers::pi / 4.0) {
        throw std::domain_error("verify_small_tau_expansion: |Arg tau| exceeds pi/4");
    }
    const auto& k = special_constants();
    const double lead = std::sqrt(std::numbers::pi) * k.zeta_3_2 / (4.0 * std::numbers::sqrt2);
    const Complex predicted = lead / std::sqrt(t) - std::numbers::ln2 / 2.0;
    return std::abs(log_g(tau) - predicted);
}

PGrowthProfile p_growth_profile(std::int64_t b_max, double tau_prime) {
    if (b_max < 1 || !(tau_prime > 0.0)) {
        throw std::invalid_argument("p_growth_profile: need b_max >= 1 and tau' > 0");
    }
    PGrowthProfile profile;
    profile.tau_prime = tau_prime;
    profile.rows.resize(static_cast<std::size_t>(b_max));

    parallel_for(profile.rows.size(), [&](std::size_t idx) {
        const auto b = static_cast<std::int64_t>(idx) + 1;
        PGrowthRow& row = profile.rows[idx];
        row.b = b;
        for (std::int64_t a = 0; a < b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            const double v = std::abs(p_product(ReducedFraction(a, b), {tau_prime, 0.0}).log_abs);
            if (v > row.max_abs_log) {
                row.max_abs_log = v;
                row.argmax_a = a;
            }
        }
    });

    // least squares max_abs_log ~ slope * b + intercept
    double sx = 0.0;
    double sy = 0.0;
    double sxx = 0.0;
    double sxy = 0.0;
    const auto n = static_cast<double>(profile.rows.size());
    for (const auto& row : profile.rows) {
        const auto x = static_cast<double>(row.b);
        sx += x;
        sy += row.max_abs_log;
        sxx += x * x;
        sxy += x * row.max_abs_log;
    }
    const double denom = n * sxx - sx * sx;
    profile.slope = denom != 0.0 ? (n * sxy - sx * sy) / denom : 0.0;
    profile.intercept = (sy - profile.slope * sx) / n;
    for (auto& row : profile.rows) {
        row.residual = row.max_abs_log - (profile.slope * static_cast<double>(row.b) + profile.intercept);
        profile.max_abs_residual = std::max(profile.max_abs_residual, std::abs(row.residual));
        profile.max_ratio = std::max(profile.max_ratio, row.max_abs_log / static_cast<double>(row.b));
    }
    return profile;
}

} // namespace sqparity

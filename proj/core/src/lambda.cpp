#include "sqparity/lambda.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <string>

#include "compensated.hpp"
#include "sqparity/gauss.hpp"
#include "sqparity/parallel.hpp"
#include "sqparity/zeta.hpp"

namespace sqparity {

namespace {

constexpr double kSqrt2 = std::numbers::sqrt2;

std::vector<std::int64_t> divisors_of(std::int64_t n) {
    std::vector<std::int64_t> small;
    std::vector<std::int64_t> large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

double pow_three_halves(double x) { return x * std::sqrt(x); }

} // namespace

// ---------------------------------------------------------------------------
// Lambda* and lambda*

LambdaEvaluator::LambdaEvaluator(std::int64_t max_denominator) : max_d_(max_denominator) {
    if (max_denominator < 1) {
        throw std::invalid_argument("LambdaEvaluator: max_denominator must be >= 1");
    }
    const auto count = static_cast<std::size_t>(max_denominator) + 1;
    hurwitz_.resize(count);
    gauss_.resize(count);
    parallel_for(count - 1, [this](std::size_t idx) {
        const auto d = static_cast<std::int64_t>(idx) + 1;
        const double scale = 1.0 / pow_three_halves(static_cast<double>(d));
        auto& hz = hurwitz_[static_cast<std::size_t>(d)];
        auto& gs = gauss_[static_cast<std::size_t>(d)];
        hz.assign(static_cast<std::size_t>(d) + 1, 0.0);
        gs.assign(static_cast<std::size_t>(d), Complex{});
        for (std::int64_t l = 1; l <= d; ++l) {
            if (std::gcd(l, d) != 1) continue;
            hz[static_cast<std::size_t>(l)] =
                scale * hurwitz_zeta(1.5, static_cast<double>(l) / static_cast<double>(d));
        }
        for (std::int64_t r = 0; r < d; ++r) {
            if (std::gcd(r, d) != 1) continue;
            gs[static_cast<std::size_t>(r)] = gauss_sum_closed(r, d);
        }
    });
}

void LambdaEvaluator::require_covered(std::int64_t b) const {
    if (b > max_d_) {
        throw std::out_of_range("LambdaEvaluator: denominator " + std::to_string(b) +
                                " exceeds cache ceiling " + std::to_string(max_d_));
    }
}

Complex LambdaEvaluator::big_star(const ReducedFraction& frac) const {
    const std::int64_t b = frac.denominator();
    const std::int64_t a = frac.numerator();
    require_covered(b);

    detail::CompensatedComplexSum total;
    for (const std::int64_t d : divisors_of(b)) {
        if (d % 4 == 2) continue;  // S_{.,d} vanishes
        const auto& hz = hurwitz_[static_cast<std::size_t>(d)];
        const auto& gs = gauss_[static_cast<std::size_t>(d)];
        Complex inner{};
        for (std::int64_t l = 1; l <= d; ++l) {
            const double h = hz[static_cast<std::size_t>(l)];
            if (h == 0.0) continue;
            inner += gs[static_cast<std::size_t>((l * a) % d)] * h;
        }
        total.add(std::sqrt(static_cast<double>(d)) * inner);
    }
    return total.value() / pow_three_halves(static_cast<double>(b));
}

Complex LambdaEvaluator::small_star(const ReducedFraction& frac) const {
    return big_star(frac) + big_star(eight_fold_index(frac)) / (2.0 * kSqrt2) -
           big_star(four_fold_index(frac));
}

LambdaValue LambdaEvaluator::evaluate(const ReducedFraction& frac) const {
    return {frac, big_star(frac), small_star(frac)};
}

Complex lambda_big_star(const ReducedFraction& frac) {
    return LambdaEvaluator(frac.denominator()).big_star(frac);
}

Complex lambda_small_star(const ReducedFraction& frac) {
    return LambdaEvaluator(frac.denominator()).small_star(frac);
}

namespace {

ReducedFraction scaled_index(const ReducedFraction& frac, std::int64_t factor) {
    const std::int64_t b = frac.denominator();
    const std::int64_t g = std::gcd(b, factor);
    const std::int64_t reduced_b = b / g;
    return ReducedFraction::from_residue((factor / g) * frac.numerator(), reduced_b);
}

} // namespace

ReducedFraction eight_fold_index(const ReducedFraction& frac) { return scaled_index(frac, 8); }
ReducedFraction four_fold_index(const ReducedFraction& frac) { return scaled_index(frac, 4); }

Complex lambda_series_oracle(const ReducedFraction& frac, std::uint64_t M) {
    if (M < 1) {
        throw std::invalid_argument("lambda_series_oracle: M must be >= 1");
    }
    const std::int64_t b = frac.denominator();
    const std::int64_t a = frac.numerator();
    std::vector<Complex> sums(static_cast<std::size_t>(b));
    for (std::int64_t r = 0; r < b; ++r) sums[static_cast<std::size_t>(r)] = gauss_sum_direct(r, b);

    detail::CompensatedComplexSum total;
    for (std::uint64_t m = M; m >= 1; --m) {
        const auto r = static_cast<std::size_t>((static_cast<std::int64_t>(m % static_cast<std::uint64_t>(b)) * a) % b);
        total.add(sums[r] / pow_three_halves(static_cast<double>(m)));
    }
    return total.value() / static_cast<double>(b);
}

double lambda_series_tail_bound(std::int64_t b, std::uint64_t M) {
    return 2.0 * std::sqrt(static_cast<double>(b)) / std::sqrt(static_cast<double>(M));
}

double max_component(Complex z) { return std::max(std::abs(z.real()), std::abs(z.imag())); }

LemmaScanReport verify_lemma_bound(std::int64_t b_max) {
    if (b_max < 2) {
        throw std::invalid_argument("verify_lemma_bound: b_max must be >= 2");
    }
    const LambdaEvaluator evaluator(b_max);
    const double bound = special_constants().bound_constant;

    struct PerB {
        DenominatorMax best;
        std::uint64_t pairs = 0;
        std::uint64_t violations = 0;
    };
    std::vector<PerB> per(static_cast<std::size_t>(b_max - 1));

    parallel_for(per.size(), [&](std::size_t idx) {
        const auto b = static_cast<std::int64_t>(idx) + 2;
        PerB& out = per[idx];
        out.best.b = b;
        for (std::int64_t a = 1; a < b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            const double v = max_component(evaluator.small_star(ReducedFraction(a, b)));
            ++out.pairs;
            if (v >= bound) ++out.violations;
            if (v > out.best.max_value) {
                out.best.max_value = v;
                out.best.argmax_a = a;
            }
        }
    });

    LemmaScanReport report;
    report.b_max = b_max;
    report.bound = bound;
    report.per_denominator.reserve(per.size());
    for (const auto& p : per) {
        report.pairs_checked += p.pairs;
        report.violations += p.violations;
        report.per_denominator.push_back(p.best);
        if (p.best.max_value > report.max_value) {
            report.max_value = p.best.max_value;
            report.argmax_a = p.best.argmax_a;
            report.argmax_b = p.best.b;
        }
    }
    return report;
}

// ---------------------------------------------------------------------------
// Divisor-sum bound and case envelopes

double analytic_divisor_bound(double beta, double L, double l) {
    const double gamma = special_constants().euler_gamma;
    return 1.0 / l + (std::log(beta / L) + gamma + 1.0 / (2.0 * beta / L + 1.0 / 3.0)) / L;
}

DivisorBound divisor_sum_bound(std::uint64_t beta, std::uint64_t L, std::uint64_t l) {
    if (beta < 1 || L < 1 || l < 1) {
        throw std::invalid_argument("divisor_sum_bound: beta, L, l must be positive");
    }
    if (beta < L) {
        throw std::invalid_argument("divisor_sum_bound: requires beta >= L (got beta = " +
                                    std::to_string(beta) + ", L = " + std::to_string(L) + ")");
    }
    if (l > L) {
        throw std::invalid_argument("divisor_sum_bound: residue l must satisfy l <= L");
    }
    const auto divisors = divisors_of(static_cast<std::int64_t>(beta));
    detail::CompensatedSum exact;
    for (const auto d : divisors) {
        if (static_cast<std::uint64_t>(d) % L == l % L) exact.add(1.0 / static_cast<double>(d));
    }
    return {exact.value(),
            analytic_divisor_bound(static_cast<double>(beta), static_cast<double>(L),
                                   static_cast<double>(l))};
}

EnvelopeCase envelope_case(std::int64_t b) {
    if (b < 1) {
        throw std::invalid_argument("envelope_case: b must be positive");
    }
    if (b % 2 != 0) return EnvelopeCase::odd;
    if (b % 4 != 0) return EnvelopeCase::twice_odd;
    if (b % 8 != 0) return EnvelopeCase::four_times_odd;
    return EnvelopeCase::multiple_of_eight;
}

const char* to_string(EnvelopeCase c) {
    switch (c) {
    case EnvelopeCase::odd: return "odd";
    case EnvelopeCase::twice_odd: return "twice_odd";
    case EnvelopeCase::four_times_odd: return "four_times_odd";
    case EnvelopeCase::multiple_of_eight: return "multiple_of_eight";
    }
    return "unknown";
}

double case_envelope(EnvelopeCase c, double b) {
    const double zeta = special_constants().zeta_3_2;
    const double root_b = std::sqrt(b);
    constexpr std::array<double, 2> mod4_classes = {1.0, 3.0};
    constexpr std::array<double, 4> mod8_classes = {1.0, 3.0, 5.0, 7.0};
    const auto shifted_by_four = [](double l) { return l + 4.0 > 8.0 ? l - 4.0 : l + 4.0; };

    switch (c) {
    case EnvelopeCase::odd: {
        double worst = 0.0;
        for (double l : mod4_classes) worst = std::max(worst, analytic_divisor_bound(b, 4.0, l));
        return zeta / (2.0 * kSqrt2 * root_b) * worst;
    }
    case EnvelopeCase::twice_odd: {
        const double beta = b / 2.0;
        double worst = 0.0;
        for (double l : mod8_classes) {
            worst = std::max(worst, (kSqrt2 - 1.0) * analytic_divisor_bound(beta, 8.0, l) +
                                        (kSqrt2 + 1.0) *
                                            analytic_divisor_bound(beta, 8.0, shifted_by_four(l)));
        }
        return zeta / root_b * worst;
    }
    case EnvelopeCase::four_times_odd: {
        const double beta = b / 4.0;
        double worst = 0.0;
        for (double j : mod8_classes) {
            worst = std::max(worst,
                             (7.0 + 2.0 * kSqrt2) * analytic_divisor_bound(beta, 8.0, j) +
                                 (7.0 - 2.0 * kSqrt2) *
                                     analytic_divisor_bound(beta, 8.0, shifted_by_four(j)));
        }
        const double odd_part =
            4.0 * (1.0 - std::pow(2.0, -1.5)) * analytic_divisor_bound(beta, 2.0, 1.0);
        return zeta / (4.0 * root_b) * (worst + odd_part);
    }
    case EnvelopeCase::multiple_of_eight: {
        const double beta = b / 8.0;
        double worst = 0.0;
        for (double l : mod4_classes) worst = std::max(worst, analytic_divisor_bound(beta, 4.0, l));
        return zeta / root_b *
               (worst / 8.0 +
                3.5 * (1.0 - std::pow(2.0, -1.5)) * analytic_divisor_bound(beta, 2.0, 1.0));
    }
    }
    throw std::logic_error("case_envelope: unknown case");
}

double case_envelope(std::int64_t b) {
    if (b < 2) {
        throw std::invalid_argument("case_envelope: b must be >= 2");
    }
    return case_envelope(envelope_case(b), static_cast<double>(b));
}

std::int64_t envelope_crossover(EnvelopeCase c, std::int64_t search_limit) {
    const double bound = special_constants().bound_constant;
    std::int64_t last_failure = 1;
    for (std::int64_t b = 2; b <= search_limit; ++b) {
        if (case_envelope(c, static_cast<double>(b)) >= bound) last_failure = b;
    }
    return last_failure + 1;
}

// ---------------------------------------------------------------------------
// f(t) and the real-part decomposition

double f_profile(double t) {
    const double u = 1.0 / std::hypot(1.0, t);
    const double u2 = u * u;
    return (std::sqrt(u + u2) + std::sqrt(std::max(u - u2, 0.0))) / kSqrt2;
}

double f_profile_derivative(double t) {
    if (t == 0.0) {
        throw std::domain_error("f_profile_derivative: f is not differentiable at t = 0");
    }
    const double u = 1.0 / std::hypot(1.0, t);
    const double u2 = u * u;
    const double du = -t * u * u2;        // d/dt (1+t^2)^{-1/2}
    const double du2 = -2.0 * t * u2 * u2;  // d/dt (1+t^2)^{-1}
    const double plus = (du + du2) / (2.0 * std::sqrt(u + u2));
    const double minus = (du - du2) / (2.0 * std::sqrt(u - u2));
    return (plus + minus) / kSqrt2;
}

FMaximum maximize_f() {
    // Coarse scan locates the basin; golden-section narrows it.
    constexpr double lo_limit = 0.0;
    constexpr double hi_limit = 10.0;
    constexpr int coarse = 1000;
    int best = 0;
    double best_value = f_profile(lo_limit);
    for (int i = 1; i <= coarse; ++i) {
        const double t = lo_limit + (hi_limit - lo_limit) * i / coarse;
        const double v = f_profile(t);
        if (v > best_value) {
            best_value = v;
            best = i;
        }
    }
    const double step = (hi_limit - lo_limit) / coarse;
    double lo = std::max(lo_limit, lo_limit + (best - 1) * step);
    double hi = std::min(hi_limit, lo_limit + (best + 1) * step);

    const double ratio = (std::sqrt(5.0) - 1.0) / 2.0;
    double c = hi - ratio * (hi - lo);
    double d = lo + ratio * (hi - lo);
    double fc = f_profile(c);
    double fd = f_profile(d);
    while (hi - lo > 1e-10) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - ratio * (hi - lo);
            fc = f_profile(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + ratio * (hi - lo);
            fd = f_profile(d);
        }
    }

    // f is flat at the top, so comparisons of f stop resolving t near 1e-8.
    // Finish on the sign of f', which changes linearly through the maximizer.
    double left = std::max(lo - 1e-6, 1e-12);
    double right = hi + 1e-6;
    if (f_profile_derivative(left) > 0.0 && f_profile_derivative(right) < 0.0) {
        for (int iter = 0; iter < 200 && right - left > 1e-15; ++iter) {
            const double mid = 0.5 * (left + right);
            if (f_profile_derivative(mid) > 0.0) {
                left = mid;
            } else {
                right = mid;
            }
        }
        lo = left;
        hi = right;
    }
    const double t = 0.5 * (lo + hi);
    return {t, f_profile(t)};
}

bool real_part_decomposition_check(const ReducedFraction& frac, double t) {
    const Complex lambda = special_constants().gamma_3_2 * lambda_small_star(frac);
    const double direct = (lambda / std::sqrt(Complex{1.0, t})).real();
    const double half_angle = std::atan(t) / 2.0;
    const double decomposed = (std::cos(half_angle) * lambda.real() +
                               std::sin(half_angle) * lambda.imag()) /
                              std::pow(1.0 + t * t, 0.25);
    return std::abs(direct - decomposed) <= 1e-10;
}

GapChainReport verify_gap_chain(std::int64_t b_max, double t_max, double t_step) {
    if (b_max < 2 || !(t_step > 0.0) || !(t_max >= 0.0)) {
        throw std::invalid_argument("verify_gap_chain: need b_max >= 2, t_step > 0, t_max >= 0");
    }
    const auto& k = special_constants();
    const double gamma = k.gamma_3_2;
    constexpr double f_ceiling = 1.1398;

    const auto steps = static_cast<std::int64_t>(std::llround(t_max / t_step));
    std::vector<Complex> inv_sqrt;
    std::vector<double> f_values;
    for (std::int64_t i = -steps; i <= steps; ++i) {
        const double t = static_cast<double>(i) * t_step;
        inv_sqrt.push_back(1.0 / std::sqrt(Complex{1.0, t}));
        f_values.push_back(f_profile(t));
    }

    const LambdaEvaluator evaluator(b_max);
    struct PerB {
        std::uint64_t pairs = 0;
        std::uint64_t first = 0;
        std::uint64_t second = 0;
        double max_real = -1e300;
    };
    std::vector<PerB> per(static_cast<std::size_t>(b_max - 1));
    parallel_for(per.size(), [&](std::size_t idx) {
        const auto b = static_cast<std::int64_t>(idx) + 2;
        PerB& out = per[idx];
        for (std::int64_t a = 1; a < b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            ++out.pairs;
            const Complex star = evaluator.small_star(ReducedFraction(a, b));
            const Complex lambda = gamma * star;
            const double m = max_component(star);
            for (std::size_t i = 0; i < inv_sqrt.size(); ++i) {
                const double re = (lambda * inv_sqrt[i]).real();
                out.max_real = std::max(out.max_real, re);
                if (re > f_values[i] * gamma * m + 1e-12) ++out.first;
                if (f_values[i] * m > f_ceiling * k.bound_constant) ++out.second;
            }
        }
    });

    GapChainReport report;
    report.b_max = b_max;
    report.grid_points = inv_sqrt.size();
    report.max_real_part = -1e300;
    report.chain_ceiling = f_ceiling * gamma * k.bound_constant;
    report.lambda_01 = gamma * k.zeta_3_2 / (2.0 * kSqrt2);
    for (const auto& p : per) {
        report.pairs_checked += p.pairs;
        report.first_link_violations += p.first;
        report.second_link_violations += p.second;
        report.max_real_part = std::max(report.max_real_part, p.max_real);
    }
    return report;
}

// ---------------------------------------------------------------------------
// Case-wise closed forms

Complex lambda_small_star_odd_form(const ReducedFraction& frac) {
    const std::int64_t a = frac.numerator();
    const std::int64_t b = frac.denominator();
    if (b % 2 == 0) {
        throw std::invalid_argument("lambda_small_star_odd_form: b must be odd");
    }
    Complex total{};
    for (const std::int64_t d : divisors_of(b)) {
        double inner = 0.0;
        for (std::int64_t l = 1; l <= d; ++l) {
            const int chi = jacobi_symbol(l, d);
            if (chi != 0) inner += chi * hurwitz_zeta(1.5, static_cast<double>(l) / d);
        }
        total += epsilon_factor(d) * static_cast<double>(jacobi_symbol(2 * a, d)) * inner /
                 std::sqrt(static_cast<double>(d));
    }
    return total / (2.0 * kSqrt2 * pow_three_halves(static_cast<double>(b)));
}

Complex lambda_small_star_twice_odd_form(const ReducedFraction& frac) {
    const std::int64_t a = frac.numerator();
    const std::int64_t b = frac.denominator();
    if (b % 4 != 2) {
        throw std::invalid_argument("lambda_small_star_twice_odd_form: need 2 || b");
    }
    Complex total{};
    for (const std::int64_t d : divisors_of(b / 2)) {
        double inner = 0.0;
        for (std::int64_t l = 1; l <= d; ++l) {
            const int chi = jacobi_symbol(l * a, d);
            if (chi != 0) inner += chi * hurwitz_zeta(1.5, static_cast<double>(l) / d);
        }
        total += epsilon_factor(d) * (1.0 - kSqrt2 * jacobi_symbol(2, d)) * inner /
                 std::sqrt(static_cast<double>(d));
    }
    return 2.0 * total / pow_three_halves(static_cast<double>(b));
}

Complex lambda_small_star_four_times_odd_form(const ReducedFraction& frac) {
    const std::int64_t a = frac.numerator();
    const std::int64_t b = frac.denominator();
    if (b % 8 != 4) {
        throw std::invalid_argument("lambda_small_star_four_times_odd_form: need 4 || b");
    }
    Complex total{};
    for (const std::int64_t d : divisors_of(b / 4)) {
        double odd_inner = 0.0;
        for (std::int64_t l = 1; l <= d; ++l) {
            const int chi = jacobi_symbol(l * a, d);
            if (chi != 0) odd_inner += chi * hurwitz_zeta(1.5, static_cast<double>(l) / d);
        }
        total += epsilon_factor(d) * (-7.0 + 2.0 * kSqrt2 * jacobi_symbol(2, d)) * odd_inner /
                 std::sqrt(static_cast<double>(d));

        const std::int64_t four_d = 4 * d;
        Complex even_inner{};
        for (std::int64_t l = 1; l <= four_d; ++l) {
            const std::int64_t la = l * a;
            if (la % 2 == 0) continue;
            const int chi = jacobi_symbol(four_d, la);
            if (chi == 0) continue;
            even_inner += (1.0 / epsilon_factor(la % 4)) * static_cast<double>(chi) *
                          hurwitz_zeta(1.5, static_cast<double>(l) / static_cast<double>(four_d));
        }
        total += Complex{1.0, 1.0} * even_inner / std::sqrt(static_cast<double>(four_d));
    }
    return total / pow_three_halves(static_cast<double>(b));
}

} // namespace sqparity

#include "sqparity/asymptotic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "sqparity/zeta.hpp"

namespace sqparity {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSqrt2 = std::numbers::sqrt2;

void require_positive(std::uint64_t n, const char* who) {
    if (n < 1) {
        throw std::invalid_argument(std::string(who) + ": n must be >= 1");
    }
}

// sign(v) * exp(log|v| - log|w|) for w > 0
double ratio_of(const BigInt& v, const BigInt& w) {
    const int sign = sgn(v);
    if (sign == 0) return 0.0;
    const BigInt mag = abs(v);
    return sign * std::exp(log_of(mag) - log_of(w));
}

} // namespace

const AsymptoticConstants& asymptotic_constants() {
    static const AsymptoticConstants constants = [] {
        const auto& k = special_constants();
        AsymptoticConstants c{};
        c.E = k.gamma_3_2 * k.zeta_3_2 / (4.0 * kSqrt2);
        c.B = k.gamma_3_2 * k.zeta_3_2 / (2.0 * kSqrt2);
        c.Lambda = 3.0 * std::pow(k.gamma_3_2 * k.zeta_3_2 / 2.0, 2.0 / 3.0);
        c.B0 = c.Lambda / (2.0 * std::pow(3.0 * kPi, 1.5));
        c.remark1 = std::pow(c.E, 2.0 / 3.0) / (2.0 * kPi * std::sqrt(3.0 * kPi));
        return c;
    }();
    return constants;
}

SaddleParams saddle_params(std::uint64_t n) {
    require_positive(n, "saddle_params");
    const auto& k = special_constants();
    const double nd = static_cast<double>(n);
    SaddleParams p;
    p.n = n;
    p.y = std::pow(nd, -2.0 / 3.0) *
          std::pow(std::sqrt(kPi) / (8.0 * kSqrt2) * k.zeta_3_2, 2.0 / 3.0);
    p.m = nd * p.y;
    p.B = asymptotic_constants().B;
    return p;
}

double log_a2_main_term(std::uint64_t n) {
    require_positive(n, "a2_main_term");
    const auto& c = asymptotic_constants();
    const double nd = static_cast<double>(n);
    return std::log(std::cbrt(c.B) / std::sqrt(3.0 * kPi)) - 5.0 / 6.0 * std::log(2.0 * nd) +
           3.0 * std::cbrt(nd) * std::pow(c.E, 2.0 / 3.0);
}

double a2_main_term(std::uint64_t n) { return std::exp(log_a2_main_term(n)); }

double log_a2_main_term_saddle_form(std::uint64_t n) {
    const SaddleParams p = saddle_params(n);
    const auto& c = asymptotic_constants();
    const double nd = static_cast<double>(n);
    return std::log(p.y / (2.0 * kSqrt2 * kPi)) + 3.0 * std::cbrt(nd) * std::pow(c.E, 2.0 / 3.0) +
           std::log(2.0 * kSqrt2 * std::sqrt(kPi) /
                    (std::sqrt(3.0) * std::pow(2.0 * nd, 1.0 / 6.0) * std::cbrt(p.B)));
}

double log_p2_main_term(std::uint64_t n) {
    require_positive(n, "p2_main_term");
    const auto& c = asymptotic_constants();
    const double nd = static_cast<double>(n);
    return std::log(c.B0) - 7.0 / 6.0 * std::log(nd) + c.Lambda * std::cbrt(nd);
}

double p2_main_term(std::uint64_t n) { return std::exp(log_p2_main_term(n)); }

double log_p2_parity_main_term(std::uint64_t n) { return log_p2_main_term(n) - std::numbers::ln2; }

double p2_parity_main_term(std::uint64_t n) { return std::exp(log_p2_parity_main_term(n)); }

MeinardusData MeinardusData::for_h2() {
    return {0.5, 0.5, -0.5, -std::log(2.0 * kPi)};
}

MeinardusData MeinardusData::for_g() {
    return {0.5, 1.0 / (4.0 * kSqrt2), dirichlet_D_at_zero(), dirichlet_D_prime_at_zero()};
}

MeinardusConstants meinardus_constants(const MeinardusData& data) {
    if (!(data.alpha > 0.0) || !(data.A > 0.0)) {
        throw std::invalid_argument("meinardus_constants: need alpha > 0 and A > 0");
    }
    const double a = data.alpha;
    const double core = data.A * std::tgamma(a + 1.0) * riemann_zeta(a + 1.0);
    MeinardusConstants out{};
    out.C = std::exp(data.D0prime) / std::sqrt(2.0 * kPi * (1.0 + a)) *
            std::pow(core, (1.0 - 2.0 * data.D0) / (2.0 + 2.0 * a));
    out.kappa = (data.D0 - 1.0 - 0.5 * a) / (1.0 + a);
    out.exp_coeff = (1.0 + 1.0 / a) * std::pow(core, 1.0 / (a + 1.0));
    return out;
}

double taylor_cancellation_check(std::uint64_t n, double y_scale) {
    const SaddleParams p = saddle_params(n);
    const double y = p.y * y_scale;
    return std::abs(-p.B / (2.0 * std::sqrt(y)) + static_cast<double>(n) * y);
}

std::vector<AsymptoticReport> error_report(std::span<const ParityRow> rows,
                                           std::span<const std::uint64_t> grid) {
    std::vector<AsymptoticReport> out;
    out.reserve(grid.size());
    for (const std::uint64_t n : grid) {
        if (n < 1) {
            throw std::invalid_argument("error_report: grid values must be >= 1");
        }
        if (n >= rows.size()) {
            throw std::out_of_range("error_report: n = " + std::to_string(n) +
                                    " exceeds the computed table (max " +
                                    std::to_string(rows.empty() ? 0 : rows.size() - 1) + ")");
        }
        const ParityRow& row = rows[n];
        AsymptoticReport r;
        r.n = n;
        r.exact_a2 = row.a2;
        r.exact_p2 = row.even_count + row.odd_count;
        const double log_a2_main = log_a2_main_term(n);
        const double log_p2_main = log_p2_main_term(n);
        r.a2_main = std::exp(log_a2_main);
        r.p2_main = std::exp(log_p2_main);
        r.ratio_a2 = sgn(r.exact_a2) == 0
                         ? 0.0
                         : sgn(r.exact_a2) * std::exp(log_of(abs(r.exact_a2)) - log_a2_main);
        r.ratio_p2 = std::exp(log_of(r.exact_p2) - log_p2_main);
        if (n >= 65 && !(r.ratio_a2 > 0.0 && r.ratio_p2 > 0.0)) {
            throw std::logic_error("error_report: non-positive ratio at n = " + std::to_string(n));
        }
        out.push_back(std::move(r));
    }
    return out;
}

double mean_abs_ratio_deviation(std::span<const AsymptoticReport> reports) {
    if (reports.empty()) {
        throw std::invalid_argument("mean_abs_ratio_deviation: no reports");
    }
    double total = 0.0;
    for (const auto& r : reports) total += std::abs(r.ratio_a2 - 1.0);
    return total / static_cast<double>(reports.size());
}

ParityBalance parity_balance(const ParityRow& row) {
    if (sgn(row.odd_count) <= 0) {
        throw std::domain_error("parity_balance: odd count must be positive");
    }
    ParityBalance out;
    out.ratio = std::exp(log_of(row.even_count) - log_of(row.odd_count));
    out.ratio_minus_one = ratio_of(row.even_count - row.odd_count, row.odd_count);
    return out;
}

} // namespace sqparity

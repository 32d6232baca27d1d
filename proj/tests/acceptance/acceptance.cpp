#include <json.hpp>

#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "sqparity/asymptotic.hpp"
#include "sqparity/gauss.hpp"
#include "sqparity/lambda.hpp"
#include "sqparity/modular.hpp"
#include "sqparity/series.hpp"
#include "sqparity/zeta.hpp"

using namespace sqparity;

namespace {

constexpr std::size_t kMaxN = 50000;

struct Verdict {
    bool pass;
    std::string detail;
};

const std::vector<ParityRow>& rows() {
    static const auto table = count_by_parity(kMaxN);
    return table;
}

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

Verdict exceptional_set_reproduced() {
    const std::vector<std::size_t> expected = {4, 5, 6, 7, 13, 14, 15, 16, 22, 23, 24, 31, 39, 47, 48, 56, 64};
    const auto found = exceptional_set(rows());
    const auto small = exceptional_set(10000);
    return {found == expected && small == expected,
            std::to_string(found.size()) + " elements up to " + std::to_string(kMaxN) + ", last " +
                (found.empty() ? std::string("-") : std::to_string(found.back()))};
}

Verdict sign_theorem() {
    std::size_t bad = 0;
    for (std::size_t n = 65; n <= kMaxN; ++n) {
        if (sgn(rows()[n].a2) <= 0) ++bad;
        const int diff = sgn(rows()[n].even_count - rows()[n].odd_count);
        if (diff != (n % 2 == 0 ? 1 : -1)) ++bad;
    }
    return {bad == 0, std::to_string(bad) + " exceptions in [65, " + std::to_string(kMaxN) + "]"};
}

Verdict counting_oracles_agree() {
    const auto g = g_coefficients(kMaxN);
    std::size_t product_mismatch = 0;
    for (std::size_t n = 0; n <= kMaxN; ++n) {
        const BigInt diff = rows()[n].even_count - rows()[n].odd_count;
        const BigInt folded = n % 2 == 0 ? diff : BigInt(-diff);
        if (g[n] != folded || g[n] != rows()[n].a2) ++product_mismatch;
    }
    std::size_t brute_mismatch = 0;
    for (std::size_t n = 0; n <= kBruteForceLimit; ++n) {
        const auto bf = brute_force_parity(n);
        if (bf.even_count != rows()[n].even_count || bf.odd_count != rows()[n].odd_count) ++brute_mismatch;
    }
    return {product_mismatch == 0 && brute_mismatch == 0,
            std::to_string(product_mismatch) + " product mismatches, " + std::to_string(brute_mismatch) +
                " brute-force mismatches"};
}

Verdict glaisher() {
    const bool ok = glaisher_check(500);
    return {ok, ok ? "holds for n <= 500" : "fails"};
}

Verdict gauss_sums() {
    const auto rep = gauss_agreement_scan(2000);
    return {rep.max_scaled_error < 1e-9,
            "max |direct - closed| / b = " + fmt(rep.max_scaled_error) + " over " + std::to_string(rep.pairs_checked) +
                " pairs"};
}

Verdict lambda_bound() {
    const auto rep = verify_lemma_bound(600);
    const double spot = lambda_small_star(ReducedFraction(1, 2)).real();
    const bool spot_ok = std::abs(spot - (-0.765147024625408)) < 1e-6;

    nlohmann::ordered_json doc;
    doc["b_max"] = rep.b_max;
    doc["max_value"] = rep.max_value;
    doc["argmax_a"] = rep.argmax_a;
    doc["argmax_b"] = rep.argmax_b;
    doc["bound"] = rep.bound;
    doc["pairs_checked"] = rep.pairs_checked;
    doc["violations"] = rep.violations;
    std::ofstream("lambda_scan_report.json") << doc.dump(2) << '\n';

    return {rep.holds() && rep.max_value < rep.bound && spot_ok,
            "max " + fmt(rep.max_value) + " at " + std::to_string(rep.argmax_a) + "/" +
                std::to_string(rep.argmax_b) + " < " + fmt(rep.bound) + ", lambda*(1/2) = " + fmt(spot)};
}

Verdict divisor_bound() {
    std::mt19937_64 rng(20240101);
    constexpr std::array<std::uint64_t, 3> moduli = {2, 4, 8};
    std::uniform_int_distribution<std::size_t> pick(0, moduli.size() - 1);
    std::size_t violations = 0;
    constexpr std::size_t trials = 10000;
    for (std::size_t t = 0; t < trials; ++t) {
        const std::uint64_t L = moduli[pick(rng)];
        const std::uint64_t beta = std::uniform_int_distribution<std::uint64_t>(L, 100000)(rng);
        const std::uint64_t l = 2 * std::uniform_int_distribution<std::uint64_t>(0, L / 2 - 1)(rng) + 1;
        if (!divisor_sum_bound(beta, L, l).holds()) ++violations;
    }
    return {violations == 0, std::to_string(violations) + " violations in " + std::to_string(trials) + " triples"};
}

Verdict f_maximum() {
    const auto m = maximize_f();
    const double t_err = std::abs(m.t - 1.0 / std::sqrt(3.0));
    const double v_err = std::abs(m.value - std::pow(3.0, 0.75) / 2.0);
    return {t_err < 1e-8 && v_err < 1e-12, "t error " + fmt(t_err) + ", value error " + fmt(v_err)};
}

Verdict wright_transform() {
    double worst = 0.0;
    for (std::int64_t b : {1, 2, 3, 4, 5, 8}) {
        for (std::int64_t a = 0; a < b; ++a) {
            if (std::gcd(a, b) != 1) continue;
            for (double tau : {0.3, 0.5, 1.0}) {
                worst = std::max(worst, verify_wright_transform(ReducedFraction(a, b), {tau, 0.0}));
            }
        }
    }
    return {worst < 1e-6, "max relative error " + fmt(worst)};
}

Verdict g_factorization() {
    double worst = 0.0;
    for (double m : {0.2, 0.3, 0.4}) {
        for (double ph : {0.0, 0.2, 0.4}) worst = std::max(worst, verify_g_factorization(std::polar(m, ph)));
    }
    return {worst < 1e-10, "max relative error " + fmt(worst)};
}

Verdict small_tau() {
    std::string detail;
    double previous = INFINITY;
    bool decreasing = true;
    for (double y : {0.2, 0.1, 0.05, 0.02}) {
        const double r = verify_small_tau_expansion({y, 0.0, std::nullopt});
        decreasing = decreasing && r < previous;
        previous = r;
        detail += (detail.empty() ? "" : ", ") + fmt(r);
    }
    return {decreasing, "residuals " + detail};
}

Verdict constant_identities() {
    const auto& c = asymptotic_constants();
    double saddle = 0.0;
    for (std::uint64_t n : {1ULL, 1000ULL, 1000000ULL}) {
        const auto p = saddle_params(n);
        saddle = std::max(saddle, std::abs(p.B - 2.0 * static_cast<double>(n) * std::pow(p.y, 1.5)) / p.B);
    }
    const auto h2 = meinardus_constants(MeinardusData::for_h2());
    const double h2_err = std::max({std::abs(h2.C - c.B0), std::abs(h2.kappa + 7.0 / 6.0),
                                    std::abs(h2.exp_coeff - c.Lambda)});
    const auto g = meinardus_constants(MeinardusData::for_g());
    const double g_prefactor = std::cbrt(c.B) / (std::sqrt(3.0 * std::numbers::pi) * std::pow(2.0, 5.0 / 6.0));
    const double g_err = std::max({std::abs(g.C - g_prefactor), std::abs(g.kappa + 5.0 / 6.0),
                                   std::abs(g.exp_coeff - 3.0 * std::pow(c.E, 2.0 / 3.0))});
    const double remark = std::abs(c.remark1 - c.B0 / 2.0);
    return {saddle < 1e-12 && h2_err < 1e-10 && g_err < 1e-10 && remark < 1e-12,
            "saddle " + fmt(saddle) + ", H2 " + fmt(h2_err) + ", G " + fmt(g_err) + ", remark " + fmt(remark)};
}

Verdict asymptotic_convergence() {
    const std::span<const ParityRow> table(rows().data(), 10001);
    const std::vector<std::uint64_t> at = {10000};
    const double ratio = error_report(table, at).front().ratio_a2;
    std::vector<std::uint64_t> early(1001);
    std::vector<std::uint64_t> late(1001);
    std::iota(early.begin(), early.end(), 1000);
    std::iota(late.begin(), late.end(), 9000);
    const double d_early = mean_abs_ratio_deviation(error_report(table, early));
    const double d_late = mean_abs_ratio_deviation(error_report(table, late));
    const double balance = parity_balance(rows()[10000]).ratio;
    return {ratio > 0.5 && ratio < 2.0 && d_late < d_early && balance > 0.99 && balance < 1.01,
            "ratio(10^4) " + fmt(ratio) + ", mean deviation " + fmt(d_early) + " -> " + fmt(d_late) +
                ", parity ratio " + fmt(balance)};
}

} // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria = {
        {"exceptional-set", exceptional_set_reproduced},
        {"sign-theorem", sign_theorem},
        {"counting-oracles", counting_oracles_agree},
        {"glaisher", glaisher},
        {"gauss-sums", gauss_sums},
        {"lambda-bound", lambda_bound},
        {"divisor-bound", divisor_bound},
        {"f-maximum", f_maximum},
        {"wright-transform", wright_transform},
        {"g-factorization", g_factorization},
        {"small-tau", small_tau},
        {"constant-identities", constant_identities},
        {"asymptotic-convergence", asymptotic_convergence},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!v.pass) ++failures;
        std::printf("%s %2zu %-24s %s (%.1fs)\n", v.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    v.detail.c_str(), secs);
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <numeric>
#include <vector>

#include "sqparity/asymptotic.hpp"
#include "sqparity/zeta.hpp"

using namespace sqparity;

namespace {

const std::vector<ParityRow>& table() {
    static const auto rows = count_by_parity(10000);
    return rows;
}

std::vector<std::uint64_t> range(std::uint64_t lo, std::uint64_t hi) {
    std::vector<std::uint64_t> out(hi - lo + 1);
    std::iota(out.begin(), out.end(), lo);
    return out;
}

} // namespace

TEST(Saddle, AtOne) {
    const auto p = saddle_params(1);
    // mpmath: (sqrt(pi) zeta(3/2) / (8 sqrt 2))^{2/3} and Gamma(3/2) zeta(3/2) / (2 sqrt 2)
    EXPECT_NEAR(p.y, 0.55123529726610866, 1e-14);
    EXPECT_NEAR(p.B, 0.81853173912050800, 1e-14);
    EXPECT_NEAR(p.y, std::pow(asymptotic_constants().E, 2.0 / 3.0), 1e-15);
    EXPECT_DOUBLE_EQ(p.m, p.y);
    EXPECT_THROW((void)saddle_params(0), std::invalid_argument);
}

TEST(Saddle, BEqualsTwoNYToThreeHalves) {
    for (std::uint64_t n : {1ull, 1000ull, 1000000ull}) {
        const auto p = saddle_params(n);
        const double nd = static_cast<double>(n);
        EXPECT_NEAR(p.B, 2.0 * nd * std::pow(p.y, 1.5), 1e-12) << n;
        EXPECT_NEAR(p.m, nd * p.y, 1e-12 * p.m) << n;
        EXPECT_NEAR(p.m, std::cbrt(nd) * saddle_params(1).y, 1e-12 * p.m) << n;
    }
}

TEST(MainTerms, A2AtThousand) {
    EXPECT_NEAR(a2_main_term(1000) / 8.2e3, 1.0, 0.01);
    EXPECT_THROW((void)a2_main_term(0), std::invalid_argument);
}

TEST(MainTerms, SaddleFormAgrees) {
    for (std::uint64_t n : {100ull, 10000ull}) {
        EXPECT_NEAR(log_a2_main_term(n), log_a2_main_term_saddle_form(n), 1e-12) << n;
    }
}

TEST(MainTerms, ParityHalvesP2) {
    EXPECT_NEAR(p2_main_term(5000) / p2_parity_main_term(5000), 2.0, 1e-12);
    EXPECT_NEAR(log_p2_main_term(1), std::log(asymptotic_constants().B0) + asymptotic_constants().Lambda,
                1e-14);
}

TEST(Constants, Identities) {
    const auto& c = asymptotic_constants();
    EXPECT_NEAR(c.Lambda, 3.30741178359665199, 1e-14);
    EXPECT_NEAR(c.B0, 0.05715465170954259, 1e-15);
    EXPECT_NEAR(c.Lambda, 6.0 * std::pow(c.E, 2.0 / 3.0), 1e-14);
    EXPECT_NEAR(c.B, 2.0 * c.E, 1e-15);
    EXPECT_NEAR(c.remark1, c.B0 / 2.0, 1e-15);
    const double direct = std::tgamma(1.5) * riemann_zeta(1.5) / (4.0 * std::numbers::sqrt2);
    EXPECT_NEAR(c.E, direct, 1e-15);
}

TEST(Meinardus, H2MatchesMainTerm) {
    const auto& c = asymptotic_constants();
    const auto m = meinardus_constants(MeinardusData::for_h2());
    EXPECT_NEAR(m.C, c.B0, 1e-15);
    EXPECT_NEAR(m.kappa, -7.0 / 6.0, 1e-15);
    EXPECT_NEAR(m.exp_coeff, c.Lambda, 1e-14);
}

TEST(Meinardus, GMatchesA2MainTerm) {
    const auto& c = asymptotic_constants();
    const auto m = meinardus_constants(MeinardusData::for_g());
    EXPECT_NEAR(m.kappa, -5.0 / 6.0, 1e-15);
    EXPECT_NEAR(m.exp_coeff, 3.0 * std::pow(c.E, 2.0 / 3.0), 1e-14);
    EXPECT_NEAR(m.C, std::cbrt(c.B) / (std::sqrt(3.0 * std::numbers::pi) * std::pow(2.0, 5.0 / 6.0)), 1e-15);
}

TEST(Meinardus, OrdinaryPartitions) {
    // D = zeta: p(n) ~ exp(pi sqrt(2n/3)) / (4 sqrt 3 n)
    const MeinardusData data{1.0, 1.0, -0.5, -0.5 * std::log(2.0 * std::numbers::pi)};
    const auto m = meinardus_constants(data);
    EXPECT_NEAR(m.kappa, -1.0, 1e-15);
    EXPECT_NEAR(m.exp_coeff, std::numbers::pi * std::sqrt(2.0 / 3.0), 1e-13);
    EXPECT_NEAR(m.C, 1.0 / (4.0 * std::sqrt(3.0)), 1e-14);
}

TEST(Meinardus, Refusals) {
    EXPECT_THROW((void)meinardus_constants({0.0, 1.0, 0.0, 0.0}), std::invalid_argument);
    EXPECT_THROW((void)meinardus_constants({0.5, -1.0, 0.0, 0.0}), std::invalid_argument);
}

TEST(Taylor, LinearTermCancels) {
    for (std::uint64_t n : {10ull, 1000ull, 100000ull}) {
        const double ny = saddle_params(n).m;
        EXPECT_LT(taylor_cancellation_check(n), 1e-10 * ny) << n;
    }
}

TEST(Taylor, PerturbedSaddleLeavesResidual) {
    const std::uint64_t n = 1000;
    const double ny = saddle_params(n).m;
    EXPECT_NEAR(taylor_cancellation_check(n, 1.001) / ny, 1.5e-3, 1e-5);
}

TEST(ErrorReport, Grid) {
    const std::vector<std::uint64_t> grid = {1000, 5000, 10000};
    const auto reports = error_report(table(), grid);
    ASSERT_EQ(reports.size(), 3u);
    EXPECT_NEAR(reports[0].ratio_a2, 1.13392, 1e-4);
    EXPECT_NEAR(reports[2].ratio_a2, 0.974021, 1e-4);
    EXPECT_GT(reports[2].ratio_a2, 0.5);
    EXPECT_LT(reports[2].ratio_a2, 2.0);
    for (std::size_t i = 1; i < reports.size(); ++i) {
        EXPECT_LT(std::abs(reports[i].ratio_p2 - 1.0), std::abs(reports[i - 1].ratio_p2 - 1.0));
    }
    EXPECT_EQ(reports[1].exact_a2, table()[5000].a2);
}

TEST(ErrorReport, Refusals) {
    const std::vector<std::uint64_t> beyond = {10001};
    EXPECT_THROW((void)error_report(table(), beyond), std::out_of_range);
    const std::vector<std::uint64_t> zero = {0};
    EXPECT_THROW((void)error_report(table(), zero), std::invalid_argument);
    EXPECT_THROW((void)mean_abs_ratio_deviation({}), std::invalid_argument);
}

TEST(ErrorReport, DeviationShrinks) {
    const auto early = range(1000, 2000);
    const auto late = range(9000, 10000);
    const double d_early = mean_abs_ratio_deviation(error_report(table(), early));
    const double d_late = mean_abs_ratio_deviation(error_report(table(), late));
    EXPECT_LT(d_late, d_early);
}

TEST(ParityBalanceTest, ApproachesOne) {
    const auto b4 = parity_balance(table()[10000]);
    EXPECT_GT(b4.ratio, 0.99);
    EXPECT_LT(b4.ratio, 1.01);
    double previous = 1e300;
    for (std::size_t n : {100u, 1000u, 10000u}) {
        const auto b = parity_balance(table()[n]);
        EXPECT_LT(std::abs(b.ratio_minus_one), previous) << n;
        previous = std::abs(b.ratio_minus_one);
    }
    EXPECT_LT(previous, 1e-12);
    EXPECT_THROW((void)parity_balance(table()[0]), std::domain_error);
}

// Numerical checks of the modular behaviour of H2(q) = prod (1 - q^{n^2})^{-1}
// and G(q) = H2(q) H2(q^8) / H2(q^4)^2.
//
// Wright's transformation near the rational point a/b, with q = e^{2 pi i a/b - tau'}:
//
//   H2(q) = C_b sqrt(tau') exp(Lambda_{a,b} / sqrt(tau')) P_{a,b}(tau'),
//   C_b = b1 / (2 pi),   Lambda_{a,b} = Gamma(3/2) Lambda*_{a,b},
//   P_{a,b}(tau') = prod_{h=1}^{b} prod_{s=1}^{2} prod_{l>=0} (1 - g(h,l,s))^{-1},
//   g(h,l,s) = exp((2 pi)^{3/2} (l + mu_{h,s})^{1/2} e^{pi i (2s+1)/4} / (b sqrt(tau'))
//                  - 2 pi i h / b).
//
// Square roots are principal throughout.
#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sqparity/types.hpp"

namespace sqparity {

/// tau = y - 2 pi i x and q = e^{-tau}, so |q| = e^{-y}.
struct TauPoint {
    double y = 1.0;
    double x = 0.0;
    std::optional<ReducedFraction> anchor;  // a/b with x = a/b + x', so tau = tau' - 2 pi i a/b

    [[nodiscard]] Complex tau() const;
    [[nodiscard]] Complex q() const;
    /// tau' = tau + 2 pi i a/b; requires an anchor.
    [[nodiscard]] Complex tau_prime() const;
};

/// Least b1 >= 1 with b | b1^2.
std::int64_t least_b1(std::int64_t b);

/// d_h = a h^2 mod b for 1 <= h <= b.
std::int64_t d_h_residue(const ReducedFraction& frac, std::int64_t h);

/// Thrown when the P product cannot be truncated: either a factor has |g| >= 1
/// or |g| has not dropped below the tolerance by the term cap.
class PProductError : public std::runtime_error {
public:
    PProductError(const std::string& what, std::int64_t h, std::int64_t l, int s)
        : std::runtime_error(what), h_(h), l_(l), s_(s) {}
    [[nodiscard]] std::int64_t h() const noexcept { return h_; }
    [[nodiscard]] std::int64_t l() const noexcept { return l_; }
    [[nodiscard]] int s() const noexcept { return s_; }

private:
    std::int64_t h_;
    std::int64_t l_;
    int s_;
};

struct PProductOptions {
    std::int64_t max_terms = 10000;  // cap on l per (h, s)
    double tolerance = 1e-16;        // stop once |g| drops below this
};

struct PProduct {
    Complex value;
    double log_abs = 0.0;        // log |P|, accumulated factor by factor
    std::int64_t max_l_used = 0;  // largest l retained over all (h, s)
};

/// Truncated P_{a,b}(tau'); l is extended per (h, s) until |g| < tolerance.
/// Re(tau') <= 0 throws std::domain_error.
PProduct p_product(const ReducedFraction& frac, Complex tau_prime, PProductOptions options = {});

/// prod_{n <= N} (1 - q^{n^2})^{-1}. |q| >= 1 throws std::domain_error.
Complex h2_truncated(Complex q, std::int64_t N);

/// h2_truncated with the smallest N such that |q|^{N^2} < 1e-18.
Complex h2_product(Complex q);

/// sum_{n <= N} p2(n) q^n with p2 from the exact series, N chosen so the
/// dropped tail is below 1e-18.
Complex h2_series(Complex q);

/// H2(e^{2 pi i a/b - tau'}) with the phases of q^{n^2} reduced exactly mod b.
Complex h2_at_rational(const ReducedFraction& frac, Complex tau_prime);

struct WrightFactors {
    ReducedFraction frac{0, 1};
    std::int64_t b1 = 1;
    std::int64_t b2 = 1;  // b / b1; reported only
    double c_b = 0.0;     // b1 / (2 pi)
    Complex lambda;       // Lambda_{a,b}
    Complex p_value;      // truncated P_{a,b}(tau')
    Complex rhs;          // C_b sqrt(tau') exp(Lambda / sqrt(tau')) P
};

WrightFactors wright_factors(const ReducedFraction& frac, Complex tau_prime);

/// |H2(q) - rhs| / |H2(q)| at q = e^{2 pi i a/b - tau'}.
double verify_wright_transform(const ReducedFraction& frac, Complex tau_prime);

/// Relative gap between the truncated a2 series and H2(q) H2(q^8) / H2(q^4)^2.
double verify_g_factorization(Complex q);
double verify_g_factorization(const TauPoint& tau);

/// |Log G(e^{-tau}) - (sqrt(pi) zeta(3/2) / (4 sqrt 2 sqrt(tau)) - log(2)/2)|.
/// Refuses |Arg tau| > pi/4, |x| > 1/2 or y <= 0 with std::domain_error.
double verify_small_tau_expansion(const TauPoint& tau);

/// Log G(e^{-tau}) as the sum of principal logs of its factors.
Complex log_g(const TauPoint& tau);

struct PGrowthRow {
    std::int64_t b = 0;
    std::int64_t argmax_a = 0;
    double max_abs_log = 0.0;  // max over coprime a of |log |P_{a,b}(tau')||
    double residual = 0.0;     // against the least-squares line
};

struct PGrowthProfile {
    double tau_prime = 0.0;
    std::vector<PGrowthRow> rows;  // b = 1..b_max
    double slope = 0.0;
    double intercept = 0.0;
    double max_abs_residual = 0.0;
    double max_ratio = 0.0;  // max over b of max_abs_log / b
};

/// Growth of |log |P_{a,b}(tau')|| in b for real tau' > 0.
PGrowthProfile p_growth_profile(std::int64_t b_max = 40, double tau_prime = 0.5);

} // namespace sqparity

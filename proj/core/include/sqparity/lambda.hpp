// Singular-series values at rational points and the bounds built on them.
//
//   Lambda*_{a,b} = (1/b) sum_{m>=1} S_{ma,b} m^{-3/2}
//   lambda*_{a,b} = Lambda*_{a,b} + Lambda*_{8a/(b,8), b/(b,8)} / (2 sqrt 2)
//                   - Lambda*_{4a/(b,4), b/(b,4)}
//
// Lambda* is evaluated from the divisor-sum form with each inner series
// closed by periodicity of m -> S_{ma,d}:
//
//   Lambda*_{a,b} = b^{-3/2} sum_{d | b} d^{1/2}
//                   sum_{l <= d, (l,d) = 1} S_{la,d} d^{-3/2} zeta(3/2, l/d).
//
// The unstarred values are Gamma(3/2) times the starred ones.
#pragma once

#include <cstdint>
#include <vector>

#include "sqparity/types.hpp"

namespace sqparity {

struct LambdaValue {
    ReducedFraction frac;
    Complex big_star;    // Lambda*_{a,b}
    Complex small_star;  // lambda*_{a,b}
};

/// Caches zeta(3/2, l/d) and the closed-form Gauss sums for every d up to a
/// fixed ceiling so that repeated evaluations reuse them. Thread-safe for
/// concurrent const use.
class LambdaEvaluator {
public:
    explicit LambdaEvaluator(std::int64_t max_denominator);

    [[nodiscard]] std::int64_t max_denominator() const noexcept { return max_d_; }

    [[nodiscard]] Complex big_star(const ReducedFraction& frac) const;
    [[nodiscard]] Complex small_star(const ReducedFraction& frac) const;
    [[nodiscard]] LambdaValue evaluate(const ReducedFraction& frac) const;

private:
    void require_covered(std::int64_t b) const;

    std::int64_t max_d_;
    // hurwitz_[d][l] = d^{-3/2} zeta(3/2, l/d); zero where gcd(l, d) > 1
    std::vector<std::vector<double>> hurwitz_;
    // gauss_[d][r] = S_{r,d} for r coprime to d, zero elsewhere
    std::vector<std::vector<Complex>> gauss_;
};

Complex lambda_big_star(const ReducedFraction& frac);
Complex lambda_small_star(const ReducedFraction& frac);

/// The index 8a/(b,8) reduced modulo b/(b,8), and likewise for 4.
ReducedFraction eight_fold_index(const ReducedFraction& frac);
ReducedFraction four_fold_index(const ReducedFraction& frac);

/// Partial sum (1/b) sum_{m <= M} S_{ma,b} / m^{3/2} with direct Gauss sums.
Complex lambda_series_oracle(const ReducedFraction& frac, std::uint64_t M);

/// 2 sqrt(b) / sqrt(M): bound on the dropped tail of lambda_series_oracle.
double lambda_series_tail_bound(std::int64_t b, std::uint64_t M);

/// max{|Re z|, |Im z|}
double max_component(Complex z);

struct DenominatorMax {
    std::int64_t b = 0;
    std::int64_t argmax_a = 0;
    double max_value = 0.0;
};

struct LemmaScanReport {
    std::int64_t b_max = 0;
    double max_value = 0.0;
    std::int64_t argmax_a = 0;
    std::int64_t argmax_b = 0;
    double bound = 0.0;
    std::uint64_t pairs_checked = 0;
    std::uint64_t violations = 0;
    std::vector<DenominatorMax> per_denominator;  // sorted by b

    [[nodiscard]] bool holds() const noexcept { return violations == 0 && max_value < bound; }
};

/// Exhaustive scan of max{|Re lambda*|, |Im lambda*|} over coprime (a, b),
/// 2 <= b <= b_max, against zeta(3/2) / (1.14 * 2 sqrt 2).
LemmaScanReport verify_lemma_bound(std::int64_t b_max);

struct DivisorBound {
    double exact = 0.0;  // sum of 1/d over d | beta, d = l (mod L)
    double bound = 0.0;  // 1/l + (log(beta/L) + gamma + 1/(2 beta/L + 1/3)) / L
    [[nodiscard]] bool holds() const noexcept { return exact <= bound; }
};

/// Throws std::invalid_argument unless beta >= L >= l >= 1.
DivisorBound divisor_sum_bound(std::uint64_t beta, std::uint64_t L, std::uint64_t l);

/// The analytic right-hand side for real beta, with no domain guard.
double analytic_divisor_bound(double beta, double L, double l);

enum class EnvelopeCase {
    odd,                // 2 does not divide b
    twice_odd,          // 2 || b
    four_times_odd,     // 4 || b
    multiple_of_eight,  // 8 | b
};

EnvelopeCase envelope_case(std::int64_t b);
const char* to_string(EnvelopeCase c);

/// The decreasing analytic upper bound for max{|Re lambda*|, |Im lambda*|}
/// in the given case, taking the worst admissible residue class.
double case_envelope(EnvelopeCase c, double b);
double case_envelope(std::int64_t b);

/// Smallest integer b0 >= 2 with case_envelope(c, b) < bound for every
/// b in [b0, search_limit].
std::int64_t envelope_crossover(EnvelopeCase c, std::int64_t search_limit = 100000);

/// f(t) = (sqrt(u + u^2) + sqrt(u - u^2)) / sqrt 2 with u = (1 + t^2)^{-1/2}.
double f_profile(double t);
double f_profile_derivative(double t);

struct FMaximum {
    double t = 0.0;
    double value = 0.0;
};

/// Global maximizer of f on [0, 10].
FMaximum maximize_f();

/// Re(lambda / sqrt(1 + it)) by complex arithmetic versus its cos/sin
/// decomposition, lambda = Gamma(3/2) lambda*; true when they agree to 1e-10.
bool real_part_decomposition_check(const ReducedFraction& frac, double t);

struct GapChainReport {
    std::int64_t b_max = 0;
    std::uint64_t pairs_checked = 0;
    std::uint64_t grid_points = 0;
    std::uint64_t first_link_violations = 0;   // Re(lambda/sqrt(1+it)) <= f(t) Gamma(3/2) max
    std::uint64_t second_link_violations = 0;  // f(t) max <= 1.1398 * ceiling
    double max_real_part = 0.0;                // sup of Re(lambda/sqrt(1+it))
    double chain_ceiling = 0.0;                // 1.1398 Gamma(3/2) ceiling
    double lambda_01 = 0.0;                    // Gamma(3/2) zeta(3/2) / (2 sqrt 2)

    [[nodiscard]] bool holds() const noexcept {
        return first_link_violations == 0 && second_link_violations == 0 &&
               max_real_part < lambda_01 && chain_ceiling < lambda_01;
    }
};

/// Checks the gap chain for every coprime (a, b) with 2 <= b <= b_max and
/// t on the grid [-t_max, t_max] with spacing t_step.
GapChainReport verify_gap_chain(std::int64_t b_max, double t_max = 10.0, double t_step = 0.01);

/// Case-wise Jacobi-symbol closed forms of lambda*, used as cross-checks.
/// Each throws std::invalid_argument if b is not in its case.
Complex lambda_small_star_odd_form(const ReducedFraction& frac);
Complex lambda_small_star_twice_odd_form(const ReducedFraction& frac);
Complex lambda_small_star_four_times_odd_form(const ReducedFraction& frac);

} // namespace sqparity

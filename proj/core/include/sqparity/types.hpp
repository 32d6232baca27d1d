// Domain types shared across the sqparity modules.
#pragma once

#include <complex>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace sqparity {

using Complex = std::complex<double>;

/// A rational point a/b on the unit circle with 0 <= a < b and gcd(a, b) = 1.
/// The only fraction with a = 0 is 0/1.
class ReducedFraction {
public:
    ReducedFraction(std::int64_t a, std::int64_t b) : a_(a), b_(b) {
        if (b < 1) {
            throw std::invalid_argument("ReducedFraction: denominator must be positive, got " +
                                        std::to_string(b));
        }
        if (a < 0 || a >= b) {
            throw std::invalid_argument("ReducedFraction: numerator " + std::to_string(a) +
                                        " outside [0, " + std::to_string(b) + ")");
        }
        if (std::gcd(a, b) != 1) {
            throw std::invalid_argument("ReducedFraction: " + std::to_string(a) + "/" +
                                        std::to_string(b) + " is not reduced");
        }
    }

    /// Reduces an arbitrary numerator modulo b. Fails if the residue is not coprime to b.
    static ReducedFraction from_residue(std::int64_t numerator, std::int64_t b) {
        if (b < 1) {
            throw std::invalid_argument("ReducedFraction: denominator must be positive");
        }
        std::int64_t r = numerator % b;
        if (r < 0) r += b;
        return ReducedFraction(r, b);
    }

    [[nodiscard]] std::int64_t numerator() const noexcept { return a_; }
    [[nodiscard]] std::int64_t denominator() const noexcept { return b_; }

    friend bool operator==(const ReducedFraction&, const ReducedFraction&) = default;
    friend auto operator<=>(const ReducedFraction& l, const ReducedFraction& r) {
        if (auto c = l.b_ <=> r.b_; c != 0) return c;
        return l.a_ <=> r.a_;
    }

private:
    std::int64_t a_;
    std::int64_t b_;
};

} // namespace sqparity

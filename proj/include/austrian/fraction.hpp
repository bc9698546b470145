#pragma once

#include <compare>
#include <cstdint>
#include <string>

#include "austrian/errors.hpp"

namespace austrian {

/// Exact non-negative rational q/p. No floating point anywhere: comparisons
/// cross-multiply in 128-bit intermediates, so they cannot overflow or drift
/// for any 64-bit operands.
struct Fraction {
    long long num = 0;  // q >= 0
    long long den = 1;  // p >= 1

    Fraction() = default;
    Fraction(long long q, long long p);

    Fraction reduced() const;
    bool is_reduced() const;

    /// Renders as "q/p".
    std::string str() const;
};

/// Value equality: 2/4 == 1/2.
bool operator==(const Fraction& a, const Fraction& b);
std::strong_ordering operator<=>(const Fraction& a, const Fraction& b);

/// ceil(a/b) for a >= 0, b > 0, by integer arithmetic.
inline long long ceil_div(long long a, long long b) {
    return (a + b - 1) / b;
}

/// ceil(a*b/d) with the product widened to 128 bits. Throws if the result
/// does not fit in 64 bits.
long long mul_ceil_div(long long a, long long b, long long d);

/// floor(a*b/d), same contract as mul_ceil_div.
long long mul_floor_div(long long a, long long b, long long d);

}  // namespace austrian

#include "austrian/fraction.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace austrian {

namespace {

using wide = __int128;

long long narrow(wide v) {
    if (v > std::numeric_limits<long long>::max() ||
        v < std::numeric_limits<long long>::min()) {
        throw std::overflow_error("value does not fit in 64 bits");
    }
    return static_cast<long long>(v);
}

}  // namespace

Fraction::Fraction(long long q, long long p) : num(q), den(p) {
    if (q < 0) throw std::invalid_argument("fraction numerator must be non-negative");
    if (p < 1) throw std::invalid_argument("fraction denominator must be positive");
}

Fraction Fraction::reduced() const {
    const long long g = num == 0 ? den : std::gcd(num, den);
    return Fraction(num / g, den / g);
}

bool Fraction::is_reduced() const {
    return num == 0 ? den == 1 : std::gcd(num, den) == 1;
}

std::string Fraction::str() const {
    return std::to_string(num) + "/" + std::to_string(den);
}

bool operator==(const Fraction& a, const Fraction& b) {
    return wide(a.num) * b.den == wide(b.num) * a.den;
}

std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    const wide lhs = wide(a.num) * b.den;
    const wide rhs = wide(b.num) * a.den;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

long long mul_ceil_div(long long a, long long b, long long d) {
    if (a < 0 || b < 0 || d <= 0) throw std::invalid_argument("mul_ceil_div domain");
    return narrow((wide(a) * b + d - 1) / d);
}

long long mul_floor_div(long long a, long long b, long long d) {
    if (a < 0 || b < 0 || d <= 0) throw std::invalid_argument("mul_floor_div domain");
    return narrow(wide(a) * b / d);
}

}  // namespace austrian

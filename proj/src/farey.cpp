#include "austrian/farey.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "austrian/errors.hpp"

namespace austrian {

namespace {

void require_reduced(const Fraction& f) {
    if (!f.is_reduced()) throw std::invalid_argument("fraction must be in lowest terms");
}

struct RawPair {
    long long num;
    int den;
};

bool raw_less(const RawPair& a, const RawPair& b) {
    const __int128 lhs = static_cast<__int128>(a.num) * b.den;
    const __int128 rhs = static_cast<__int128>(b.num) * a.den;
    if (lhs != rhs) return lhs < rhs;
    return a.den < b.den;  // equal values listed by ascending denominator
}

}  // namespace

std::vector<FareyEntry> full_farey(int L, long long count) {
    if (L < 1) throw std::invalid_argument("capacity must be positive");
    if (count < 1) throw std::invalid_argument("count must be positive");

    long long num_bound =
        ceil_div(2 * count, static_cast<long long>(L) * (L + 1)) * L + 2LL * L;
    std::vector<RawPair> pairs;
    while (true) {
        pairs.clear();
        pairs.reserve(static_cast<std::size_t>((num_bound + 1) * L));
        for (int den = 1; den <= L; ++den) {
            for (long long num = 0; num <= num_bound; ++num) {
                pairs.push_back(RawPair{num, den});
            }
        }
        std::sort(pairs.begin(), pairs.end(), raw_less);
        // only entries strictly below num_bound / L are complete
        long long complete = 0;
        for (const RawPair& pair : pairs) {
            if (pair.num * L < num_bound * pair.den) ++complete;
        }
        if (complete > count) break;
        num_bound *= 2;
    }

    std::vector<FareyEntry> out;
    out.reserve(static_cast<std::size_t>(count));
    for (long long i = 0; i < count; ++i) {
        const RawPair& pair = pairs[static_cast<std::size_t>(i)];
        out.push_back(FareyEntry{i, pair.num, pair.den,
                                 Fraction(pair.num, pair.den).reduced()});
    }
    return out;
}

long long first_index(const Fraction& f, int L) {
    require_reduced(f);
    if (f.den > L) {
        throw DenominatorTooLarge("denominator " + std::to_string(f.den) +
                                  " exceeds capacity " + std::to_string(L));
    }
    __int128 sum = 0;
    for (int k = 1; k <= L; ++k) {
        sum += mul_ceil_div(f.num, k, f.den);
    }
    if (sum > std::numeric_limits<long long>::max()) {
        throw std::overflow_error("first index does not fit in 64 bits");
    }
    return static_cast<long long>(sum);
}

long long multiplicity(const Fraction& f, int L) {
    require_reduced(f);
    if (f.den > L) {
        throw DenominatorTooLarge("denominator " + std::to_string(f.den) +
                                  " exceeds capacity " + std::to_string(L));
    }
    return L / f.den;
}

IndexedFraction index_to_fraction(long long n, int L) {
    if (L < 1) throw std::invalid_argument("capacity must be positive");
    if (n < 0) throw std::invalid_argument("index must be non-negative");

    // a_n lies in [whole, whole + 1): the first index of t/1 is
    // t * L(L+1)/2, so whole is n divided by that triangular base.
    const long long base = static_cast<long long>(L) * (L + 1) / 2;
    const long long whole = n / base;

    // All reduced fractions with value in [whole, whole + 1), denominator <= L.
    std::vector<Fraction> candidates;
    for (int p = 1; p <= L; ++p) {
        for (int r = 0; r < p; ++r) {
            if (std::gcd(r, p) != 1 && !(r == 0 && p == 1)) continue;
            candidates.push_back(Fraction(whole * p + r, p));
        }
    }
    std::sort(candidates.begin(), candidates.end());

    for (const Fraction& f : candidates) {
        const long long first = first_index(f, L);
        if (n < first) break;
        if (n < first + multiplicity(f, L)) {
            return IndexedFraction{f, n - first};
        }
    }
    throw InternalInconsistency("index " + std::to_string(n) +
                                " not covered by any fraction interval");
}

}  // namespace austrian

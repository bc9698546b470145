#pragma once

#include <vector>

#include "austrian/fraction.hpp"

namespace austrian {

/// One entry of the full Farey sequence for a capacity L: every
/// numerator/denominator pair with denominator in 1..L appears, reduced or
/// not, in non-decreasing value order. Equal values are listed by ascending
/// denominator, which is the order needed to keep listings reproducible.
struct FareyEntry {
    long long index;
    long long raw_num;
    int raw_den;
    Fraction value;  // reduced

    bool operator==(const FareyEntry&) const = default;
};

/// The first `count` entries a_0..a_{count-1} of the full Farey sequence
/// with denominators at most L.
std::vector<FareyEntry> full_farey(int L, long long count);

/// Index of the first appearance of a reduced fraction q/p in the full
/// Farey sequence: N = sum over k = 1..L of ceil(kq/p). Exact closed form,
/// no sequence generation. Throws DenominatorTooLarge if p > L.
long long first_index(const Fraction& f, int L);

/// How many entries of the sequence equal q/p: floor(L/p).
long long multiplicity(const Fraction& f, int L);

struct IndexedFraction {
    Fraction value;    // reduced value of a_n
    long long offset;  // number of earlier entries with the same value
};

/// Reduced value of a_n plus its offset within the block of equal entries.
/// Works by the closed-form index, not by generating the sequence, so it is
/// cheap even for large n.
IndexedFraction index_to_fraction(long long n, int L);

}  // namespace austrian

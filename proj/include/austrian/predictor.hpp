#pragma once

#include <vector>

#include "austrian/fraction.hpp"
#include "austrian/partition.hpp"

namespace austrian {

/// The limit cycle for a deck size and capacity, computed in closed form.
struct CyclePrediction {
    Fraction fraction;  // reduced q/p
    long long period;   // = fraction.den
    AustrianPartition min_bank_state;
    std::vector<AustrianPartition> cycle_states;  // step order from min_bank_state
};

/// The cycle state with the smallest bank:
/// freq[m] = ceil(q(L-m+1)/p) - ceil(q(L-m)/p), bank = offset.
/// Requires f reduced with denominator <= L and offset < floor(L/p); throws
/// InconsistentTotal if the built state does not sum to n.
AustrianPartition min_bank_partition(const Fraction& f, int L, long long n,
                                     long long offset);

/// The full closed-form answer for (n, L): locate a_n in the full Farey
/// sequence, build the minimal-bank state, and unroll the remaining cycle
/// states with the step map. The orbit is required to close in exactly
/// `period` steps; anything else throws InternalInconsistency.
CyclePrediction predict_cycle(long long n, int L);

}  // namespace austrian

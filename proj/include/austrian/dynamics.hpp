#pragma once

#include <vector>

#include "austrian/partition.hpp"

namespace austrian {

/// Result of running a trajectory until it revisits a state.
///
/// cycle_states are listed in step order starting from the first state the
/// trajectory reached inside the cycle; the period is minimal by
/// construction (a deterministic orbit closes exactly once).
struct CycleReport {
    long long transient_length = 0;
    long long period = 1;
    std::vector<AustrianPartition> cycle_states;
};

/// One turn: draw a card from every pile into the hand, form as many new
/// piles of size L as the hand allows, keep the remainder as the new bank.
/// Total is preserved and the result is always a valid state.
AustrianPartition step(const AustrianPartition& state);

/// The same turn on an unrestricted configuration. Old parts shrink by one
/// (vanishing at zero), the hand is bank + number of parts, and floor(hand/L)
/// new parts of exactly L are formed. After one step the bank is always
/// below L, whatever it was before.
GeneralPartition step_general(const GeneralPartition& g);

struct NormalizeResult {
    AustrianPartition state;
    long long steps;
};

/// Iterates step_general until the configuration satisfies the Austrian
/// constraints. Oversized parts shrink by one per step, so this terminates
/// within max(0, largest part - L) + 1 steps.
NormalizeResult normalize(const GeneralPartition& g);

/// Iterates from `start`, recording visited states, until the first revisit.
CycleReport find_cycle(const AustrianPartition& start);

/// The unique cycle state with the smallest bank deposit. Throws
/// InternalInconsistency if the minimum is tied, which cannot happen for a
/// genuine cycle of this system.
const AustrianPartition& cycle_min_bank_state(const CycleReport& report);

/// The cycle rotated to start at the minimal-bank state, for canonical
/// cross-run comparison.
std::vector<AustrianPartition> canonical_rotation(const CycleReport& report);

}  // namespace austrian

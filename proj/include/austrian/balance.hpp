#pragma once

#include <optional>
#include <vector>

#include "austrian/dynamics.hpp"
#include "austrian/fraction.hpp"
#include "austrian/partition.hpp"

namespace austrian {

/// One period of a bi-infinite sequence of non-negative integers,
/// beta_i = word[i mod p] for every integer i. The stored period need not be
/// minimal; reduced() cuts the word down to its minimal period when that is
/// wanted explicitly.
class PeriodicSequence {
public:
    explicit PeriodicSequence(std::vector<long long> word);

    int period() const { return static_cast<int>(word_.size()); }
    const std::vector<long long>& word() const { return word_; }

    /// beta_i for any integer i, negative included.
    long long at(long long i) const;

    /// Sum over one stored period.
    long long period_sum() const;

    int minimal_period() const;
    PeriodicSequence reduced() const;

    /// The shift sigma^j: result.at(i) == at(i - j).
    PeriodicSequence shifted(long long j) const;

    bool operator==(const PeriodicSequence&) const = default;

private:
    std::vector<long long> word_;
};

/// Encodes a cycle as the word of top-size-part frequencies along backward
/// iterates of its base state: word[i] is freq(L) of the state i steps
/// before cycle_states[0]. Throws NotACycle if the report's states are not
/// closed under step.
PeriodicSequence phi(const CycleReport& report);

/// Rebuilds the state a word would encode for the given capacity and deck
/// size: freq[m] = beta_{L-m}, bank = n - sum m*freq[m]. Returns nullopt
/// when that bank falls outside [0, L). A feasible result is only a
/// candidate; it need not belong to any real cycle.
std::optional<AustrianPartition> phi_inverse(const PeriodicSequence& beta,
                                             int L, long long n);

/// The maximally even word of a reduced fraction q/p:
/// gamma_i = ceil(q(i+1)/p) - ceil(qi/p), for i = 0..length-1.
/// The infinite word has period p.
std::vector<long long> gamma_word(const Fraction& f, long long length);

/// Partial sums of beta: entry k-1 holds beta_0 + ... + beta_{k-1},
/// for k = 1..k_max.
std::vector<long long> partial_sums(const PeriodicSequence& beta, long long k_max);

/// If some shift of beta equals the maximally even word of its own reduced
/// density q/p, returns the smallest shift exponent j >= 0 with
/// sigma^j(beta) = gamma. Returns nullopt otherwise.
std::optional<long long> balance_offset(const PeriodicSequence& beta);

inline bool is_balanced(const PeriodicSequence& beta) {
    return balance_offset(beta).has_value();
}

/// The rotation of a balanced word whose partial sums dominate every other
/// rotation pointwise over k = 1..p; it equals the maximally even word of
/// the reduced density. Throws NotBalanced for imbalanced input.
PeriodicSequence maximal_rotation(const PeriodicSequence& beta);

}  // namespace austrian

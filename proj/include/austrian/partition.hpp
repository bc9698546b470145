#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "austrian/errors.hpp"

namespace austrian {

/// Canonical game state: a bank deposit below the capacity L plus a
/// frequency vector counting the parts of each size 1..L.
///
/// Invariants, enforced at construction:
///   - 0 <= bank < L
///   - freq has exactly L entries, all >= 0 (freq[m-1] counts parts of size m)
///
/// Values are immutable after construction and compare structurally, so a
/// state can serve directly as a hash key for cycle detection. The frequency
/// form keeps the step map O(L) regardless of how many parts there are;
/// parts lists are a derived view.
class AustrianPartition {
public:
    AustrianPartition(int capacity, long long bank, std::vector<long long> freq);

    /// Builds a state from an (unordered) list of parts.
    /// Throws CapacityViolation if bank >= capacity or any part > capacity;
    /// parts must be strictly positive.
    static AustrianPartition from_parts(long long bank,
                                        const std::vector<long long>& parts,
                                        int capacity);

    int capacity() const { return capacity_; }
    long long bank() const { return bank_; }

    /// Frequency of parts of size m, 1 <= m <= capacity.
    long long freq(int m) const { return freq_.at(static_cast<std::size_t>(m) - 1); }
    const std::vector<long long>& frequencies() const { return freq_; }

    /// Number of non-bank parts.
    long long part_count() const;

    /// Deck size: bank + sum of m * freq[m].
    long long total() const;

    /// Parts in non-increasing order.
    std::vector<long long> parts() const;

    bool operator==(const AustrianPartition&) const = default;

private:
    int capacity_;
    long long bank_;
    std::vector<long long> freq_;
};

struct PartitionHash {
    std::size_t operator()(const AustrianPartition& state) const noexcept;
};

/// Arbitrary initial configuration: the bank may reach or exceed the
/// capacity and parts may be oversized. Parts are kept non-increasing.
struct GeneralPartition {
    GeneralPartition(int capacity, long long bank, std::vector<long long> parts);
    static GeneralPartition of(const AustrianPartition& state);

    int capacity;
    long long bank;
    std::vector<long long> parts;

    long long total() const;
    bool is_austrian() const;

    /// Conversion for states that already satisfy the Austrian constraints.
    AustrianPartition to_austrian() const;

    bool operator==(const GeneralPartition&) const = default;
};

/// Visits every state with deck size n and capacity L exactly once, in a
/// fixed order: bank ascending, then parts lists (non-increasing within each
/// list) in ascending lexicographic order. Return false from the visitor to
/// stop early. n = 0 yields the single empty state.
void enumerate_all(long long n, int L,
                   const std::function<bool(const AustrianPartition&)>& visit);

/// Materialized form of the enumeration, same order.
std::vector<AustrianPartition> enumerate_all(long long n, int L);

}  // namespace austrian

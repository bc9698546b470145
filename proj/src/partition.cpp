#include "austrian/partition.hpp"

#include <algorithm>
#include <string>

namespace austrian {

AustrianPartition::AustrianPartition(int capacity, long long bank,
                                     std::vector<long long> freq)
    : capacity_(capacity), bank_(bank), freq_(std::move(freq)) {
    if (capacity_ < 1) throw std::invalid_argument("capacity must be positive");
    if (bank_ < 0 || bank_ >= capacity_) {
        throw CapacityViolation("bank deposit " + std::to_string(bank_) +
                                " outside [0, " + std::to_string(capacity_) + ")");
    }
    if (freq_.size() != static_cast<std::size_t>(capacity_)) {
        throw std::invalid_argument("frequency vector must have exactly L entries");
    }
    for (long long f : freq_) {
        if (f < 0) throw std::invalid_argument("negative part frequency");
    }
}

AustrianPartition AustrianPartition::from_parts(long long bank,
                                                const std::vector<long long>& parts,
                                                int capacity) {
    if (capacity < 1) throw std::invalid_argument("capacity must be positive");
    if (bank < 0) throw std::invalid_argument("bank deposit must be non-negative");
    if (bank >= capacity) {
        throw CapacityViolation("bank deposit " + std::to_string(bank) +
                                " not below capacity " + std::to_string(capacity));
    }
    std::vector<long long> freq(static_cast<std::size_t>(capacity), 0);
    for (long long part : parts) {
        if (part < 1) throw std::invalid_argument("parts must be positive");
        if (part > capacity) {
            throw CapacityViolation("part " + std::to_string(part) +
                                    " exceeds capacity " + std::to_string(capacity));
        }
        ++freq[static_cast<std::size_t>(part) - 1];
    }
    return AustrianPartition(capacity, bank, std::move(freq));
}

long long AustrianPartition::part_count() const {
    long long count = 0;
    for (long long f : freq_) count += f;
    return count;
}

long long AustrianPartition::total() const {
    long long sum = bank_;
    for (int m = 1; m <= capacity_; ++m) sum += m * freq_[static_cast<std::size_t>(m) - 1];
    return sum;
}

std::vector<long long> AustrianPartition::parts() const {
    std::vector<long long> out;
    out.reserve(static_cast<std::size_t>(part_count()));
    for (int m = capacity_; m >= 1; --m) {
        for (long long i = 0; i < freq_[static_cast<std::size_t>(m) - 1]; ++i) {
            out.push_back(m);
        }
    }
    return out;
}

std::size_t PartitionHash::operator()(const AustrianPartition& state) const noexcept {
    // FNV-1a over the structural fields.
    std::size_t h = 1469598103934665603ull;
    auto mix = [&h](unsigned long long v) {
        h ^= v;
        h *= 1099511628211ull;
    };
    mix(static_cast<unsigned long long>(state.capacity()));
    mix(static_cast<unsigned long long>(state.bank()));
    for (long long f : state.frequencies()) mix(static_cast<unsigned long long>(f));
    return h;
}

GeneralPartition::GeneralPartition(int capacity_in, long long bank_in,
                                   std::vector<long long> parts_in)
    : capacity(capacity_in), bank(bank_in), parts(std::move(parts_in)) {
    if (capacity < 1) throw std::invalid_argument("capacity must be positive");
    if (bank < 0) throw std::invalid_argument("bank deposit must be non-negative");
    for (long long part : parts) {
        if (part < 1) throw std::invalid_argument("parts must be positive");
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
}

GeneralPartition GeneralPartition::of(const AustrianPartition& state) {
    return GeneralPartition(state.capacity(), state.bank(), state.parts());
}

long long GeneralPartition::total() const {
    long long sum = bank;
    for (long long part : parts) sum += part;
    return sum;
}

bool GeneralPartition::is_austrian() const {
    // parts are sorted non-increasing, so checking the front suffices
    return bank < capacity && (parts.empty() || parts.front() <= capacity);
}

AustrianPartition GeneralPartition::to_austrian() const {
    return AustrianPartition::from_parts(bank, parts, capacity);
}

namespace {

// Parts lists are built largest-first; ascending choice of the leading part
// gives ascending lexicographic order over the finished lists.
bool emit_partitions(long long remaining, long long cap, int L, long long bank,
                     std::vector<long long>& freq,
                     const std::function<bool(const AustrianPartition&)>& visit) {
    if (remaining == 0) {
        return visit(AustrianPartition(L, bank, freq));
    }
    for (long long part = 1; part <= std::min<long long>(cap, remaining); ++part) {
        ++freq[static_cast<std::size_t>(part) - 1];
        const bool keep_going = emit_partitions(remaining - part, part, L, bank, freq, visit);
        --freq[static_cast<std::size_t>(part) - 1];
        if (!keep_going) return false;
    }
    return true;
}

}  // namespace

void enumerate_all(long long n, int L,
                   const std::function<bool(const AustrianPartition&)>& visit) {
    if (L < 1) throw std::invalid_argument("capacity must be positive");
    if (n < 0) throw std::invalid_argument("deck size must be non-negative");
    std::vector<long long> freq(static_cast<std::size_t>(L), 0);
    for (long long bank = 0; bank <= std::min<long long>(L - 1, n); ++bank) {
        if (!emit_partitions(n - bank, L, L, bank, freq, visit)) return;
    }
}

std::vector<AustrianPartition> enumerate_all(long long n, int L) {
    std::vector<AustrianPartition> out;
    enumerate_all(n, L, [&out](const AustrianPartition& state) {
        out.push_back(state);
        return true;
    });
    return out;
}

}  // namespace austrian

#include "austrian/dynamics.hpp"

#include <algorithm>
#include <string>
#include <unordered_map>

#include "austrian/errors.hpp"

namespace austrian {

AustrianPartition step(const AustrianPartition& state) {
    const int L = state.capacity();
    const long long hand = state.bank() + state.part_count();
    std::vector<long long> freq(static_cast<std::size_t>(L), 0);
    for (int m = 1; m <= L - 1; ++m) {
        freq[static_cast<std::size_t>(m) - 1] = state.freq(m + 1);
    }
    freq[static_cast<std::size_t>(L) - 1] = hand / L;
    return AustrianPartition(L, hand % L, std::move(freq));
}

GeneralPartition step_general(const GeneralPartition& g) {
    const long long hand = g.bank + static_cast<long long>(g.parts.size());
    std::vector<long long> parts;
    parts.reserve(g.parts.size() + static_cast<std::size_t>(hand / g.capacity));
    for (long long part : g.parts) {
        if (part > 1) parts.push_back(part - 1);
    }
    for (long long i = 0; i < hand / g.capacity; ++i) {
        parts.push_back(g.capacity);
    }
    return GeneralPartition(g.capacity, hand % g.capacity, std::move(parts));
}

NormalizeResult normalize(const GeneralPartition& g) {
    const long long largest = g.parts.empty() ? 0 : g.parts.front();
    const long long bound = std::max<long long>(0, largest - g.capacity) + 1;
    GeneralPartition current = g;
    long long steps = 0;
    while (!current.is_austrian()) {
        if (steps >= bound) {
            throw InternalInconsistency("normalization exceeded its step bound");
        }
        current = step_general(current);
        ++steps;
    }
    return NormalizeResult{current.to_austrian(), steps};
}

CycleReport find_cycle(const AustrianPartition& start) {
    std::unordered_map<AustrianPartition, long long, PartitionHash> visited;
    std::vector<AustrianPartition> trajectory;
    AustrianPartition current = start;
    while (true) {
        auto [it, inserted] = visited.try_emplace(current, static_cast<long long>(trajectory.size()));
        if (!inserted) {
            const long long first = it->second;
            CycleReport report;
            report.transient_length = first;
            report.period = static_cast<long long>(trajectory.size()) - first;
            report.cycle_states.assign(trajectory.begin() + first, trajectory.end());
            return report;
        }
        trajectory.push_back(current);
        current = step(current);
    }
}

const AustrianPartition& cycle_min_bank_state(const CycleReport& report) {
    if (report.cycle_states.empty()) throw NotACycle("empty cycle report");
    const auto it = std::min_element(
        report.cycle_states.begin(), report.cycle_states.end(),
        [](const AustrianPartition& a, const AustrianPartition& b) {
            return a.bank() < b.bank();
        });
    for (auto other = report.cycle_states.begin(); other != report.cycle_states.end(); ++other) {
        if (other != it && other->bank() == it->bank()) {
            throw InternalInconsistency("cycle has a tied minimal bank deposit");
        }
    }
    return *it;
}

std::vector<AustrianPartition> canonical_rotation(const CycleReport& report) {
    const AustrianPartition& base = cycle_min_bank_state(report);
    const auto begin = std::find(report.cycle_states.begin(), report.cycle_states.end(), base);
    std::vector<AustrianPartition> out(begin, report.cycle_states.end());
    out.insert(out.end(), report.cycle_states.begin(), begin);
    return out;
}

}  // namespace austrian

#include "austrian/predictor.hpp"

#include <stdexcept>
#include <string>

#include "austrian/balance.hpp"
#include "austrian/dynamics.hpp"
#include "austrian/errors.hpp"
#include "austrian/farey.hpp"

namespace austrian {

AustrianPartition min_bank_partition(const Fraction& f, int L, long long n,
                                     long long offset) {
    if (!f.is_reduced()) throw std::invalid_argument("fraction must be in lowest terms");
    if (f.den > L) {
        throw DenominatorTooLarge("denominator " + std::to_string(f.den) +
                                  " exceeds capacity " + std::to_string(L));
    }
    if (offset < 0 || offset >= L / f.den) {
        throw std::invalid_argument("offset must lie below floor(L/p)");
    }

    // freq[m] = gamma_{L-m} of the reduced fraction
    const std::vector<long long> gamma = gamma_word(f, L);
    std::vector<long long> freq(static_cast<std::size_t>(L), 0);
    long long parts_total = 0;
    for (int m = 1; m <= L; ++m) {
        freq[static_cast<std::size_t>(m) - 1] = gamma[static_cast<std::size_t>(L - m)];
        parts_total += m * freq[static_cast<std::size_t>(m) - 1];
    }
    if (offset + parts_total != n) {
        throw InconsistentTotal("state sums to " + std::to_string(offset + parts_total) +
                                ", caller expected " + std::to_string(n));
    }
    return AustrianPartition(L, offset, std::move(freq));
}

CyclePrediction predict_cycle(long long n, int L) {
    const IndexedFraction located = index_to_fraction(n, L);
    AustrianPartition base = min_bank_partition(located.value, L, n, located.offset);
    const long long period = located.value.den;

    std::vector<AustrianPartition> states;
    states.reserve(static_cast<std::size_t>(period));
    states.push_back(base);
    for (long long i = 1; i < period; ++i) {
        states.push_back(step(states.back()));
    }
    // deliberate redundancy: the closed form must close under the step map
    if (step(states.back()) != base) {
        throw InternalInconsistency("predicted orbit does not close in " +
                                    std::to_string(period) + " steps");
    }
    return CyclePrediction{located.value, period, std::move(base), std::move(states)};
}

}  // namespace austrian

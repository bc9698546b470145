#include "austrian/balance.hpp"

#include <algorithm>
#include <stdexcept>

namespace austrian {

PeriodicSequence::PeriodicSequence(std::vector<long long> word)
    : word_(std::move(word)) {
    if (word_.empty()) throw std::invalid_argument("periodic word must be non-empty");
    for (long long entry : word_) {
        if (entry < 0) throw std::invalid_argument("periodic word entries must be non-negative");
    }
}

long long PeriodicSequence::at(long long i) const {
    const long long p = period();
    return word_[static_cast<std::size_t>(((i % p) + p) % p)];
}

long long PeriodicSequence::period_sum() const {
    long long sum = 0;
    for (long long entry : word_) sum += entry;
    return sum;
}

int PeriodicSequence::minimal_period() const {
    const int p = period();
    for (int d = 1; d <= p; ++d) {
        if (p % d != 0) continue;
        bool repeats = true;
        for (int i = d; i < p && repeats; ++i) {
            repeats = word_[static_cast<std::size_t>(i)] ==
                      word_[static_cast<std::size_t>(i % d)];
        }
        if (repeats) return d;
    }
    return p;  // unreachable: d == p always repeats
}

PeriodicSequence PeriodicSequence::reduced() const {
    const int d = minimal_period();
    return PeriodicSequence(std::vector<long long>(word_.begin(), word_.begin() + d));
}

PeriodicSequence PeriodicSequence::shifted(long long j) const {
    const int p = period();
    std::vector<long long> out(static_cast<std::size_t>(p));
    for (int i = 0; i < p; ++i) {
        out[static_cast<std::size_t>(i)] = at(i - j);
    }
    return PeriodicSequence(std::move(out));
}

PeriodicSequence phi(const CycleReport& report) {
    const auto& states = report.cycle_states;
    const long long p = report.period;
    if (states.empty() || static_cast<long long>(states.size()) != p) {
        throw NotACycle("report period does not match its state list");
    }
    for (std::size_t i = 0; i < states.size(); ++i) {
        if (step(states[i]) != states[(i + 1) % states.size()]) {
            throw NotACycle("states are not closed under the step map");
        }
    }
    const int L = states.front().capacity();
    std::vector<long long> word(static_cast<std::size_t>(p));
    for (long long i = 0; i < p; ++i) {
        // the state i steps before the base, inside the cycle
        word[static_cast<std::size_t>(i)] = states[static_cast<std::size_t>((p - i) % p)].freq(L);
    }
    return PeriodicSequence(std::move(word));
}

std::optional<AustrianPartition> phi_inverse(const PeriodicSequence& beta,
                                             int L, long long n) {
    if (L < 1) throw std::invalid_argument("capacity must be positive");
    std::vector<long long> freq(static_cast<std::size_t>(L), 0);
    long long parts_total = 0;
    for (int m = 1; m <= L; ++m) {
        freq[static_cast<std::size_t>(m) - 1] = beta.at(L - m);
        parts_total += m * freq[static_cast<std::size_t>(m) - 1];
    }
    const long long bank = n - parts_total;
    if (bank < 0 || bank >= L) return std::nullopt;
    return AustrianPartition(L, bank, std::move(freq));
}

std::vector<long long> gamma_word(const Fraction& f, long long length) {
    if (!f.is_reduced()) throw std::invalid_argument("fraction must be in lowest terms");
    if (length < 1) throw std::invalid_argument("length must be positive");
    std::vector<long long> out(static_cast<std::size_t>(length));
    long long prev = 0;  // ceil(q*0/p)
    for (long long i = 0; i < length; ++i) {
        const long long next = mul_ceil_div(f.num, i + 1, f.den);
        out[static_cast<std::size_t>(i)] = next - prev;
        prev = next;
    }
    return out;
}

std::vector<long long> partial_sums(const PeriodicSequence& beta, long long k_max) {
    if (k_max < 1) throw std::invalid_argument("k_max must be positive");
    std::vector<long long> out(static_cast<std::size_t>(k_max));
    long long sum = 0;
    for (long long k = 1; k <= k_max; ++k) {
        sum += beta.at(k - 1);
        out[static_cast<std::size_t>(k) - 1] = sum;
    }
    return out;
}

std::optional<long long> balance_offset(const PeriodicSequence& beta) {
    const int p = beta.period();
    const Fraction density = Fraction(beta.period_sum(), p).reduced();
    // gamma has period den | p, so p positions decide bi-infinite equality
    const std::vector<long long> gamma = gamma_word(density, p);
    for (long long j = 0; j < p; ++j) {
        bool match = true;
        for (int i = 0; i < p && match; ++i) {
            match = beta.at(i - j) == gamma[static_cast<std::size_t>(i)];
        }
        if (match) return j;
    }
    return std::nullopt;
}

PeriodicSequence maximal_rotation(const PeriodicSequence& beta) {
    if (!is_balanced(beta)) {
        throw NotBalanced("word has no maximally even rotation");
    }
    const int p = beta.period();
    std::vector<std::vector<long long>> sums(static_cast<std::size_t>(p));
    for (int start = 0; start < p; ++start) {
        auto& row = sums[static_cast<std::size_t>(start)];
        row.resize(static_cast<std::size_t>(p));
        long long sum = 0;
        for (int k = 0; k < p; ++k) {
            sum += beta.at(start + k);
            row[static_cast<std::size_t>(k)] = sum;
        }
    }
    for (int start = 0; start < p; ++start) {
        bool dominant = true;
        for (int other = 0; other < p && dominant; ++other) {
            for (int k = 0; k < p && dominant; ++k) {
                dominant = sums[static_cast<std::size_t>(start)][static_cast<std::size_t>(k)] >=
                           sums[static_cast<std::size_t>(other)][static_cast<std::size_t>(k)];
            }
        }
        if (dominant) {
            std::vector<long long> word(static_cast<std::size_t>(p));
            for (int i = 0; i < p; ++i) {
                word[static_cast<std::size_t>(i)] = beta.at(start + i);
            }
            return PeriodicSequence(std::move(word));
        }
    }
    throw InternalInconsistency("balanced word lost its dominant rotation");
}

}  // namespace austrian

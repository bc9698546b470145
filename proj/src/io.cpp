#include "austrian/io.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace austrian {

json to_json(const AustrianPartition& state) {
    return json{{"L", state.capacity()}, {"bank", state.bank()}, {"parts", state.parts()}};
}

AustrianPartition state_from_json(const json& j) {
    const int L = j.at("L").get<int>();
    const long long bank = j.at("bank").get<long long>();
    const auto parts = j.at("parts").get<std::vector<long long>>();
    return AustrianPartition::from_parts(bank, parts, L);
}

json to_json(const CycleReport& report) {
    json cycle = json::array();
    for (const AustrianPartition& state : report.cycle_states) {
        cycle.push_back(to_json(state));
    }
    return json{{"transient", report.transient_length},
                {"period", report.period},
                {"cycle", std::move(cycle)}};
}

json to_json(const CyclePrediction& prediction) {
    json cycle = json::array();
    for (const AustrianPartition& state : prediction.cycle_states) {
        cycle.push_back(to_json(state));
    }
    return json{{"fraction", prediction.fraction.str()},
                {"period", prediction.period},
                {"min_bank_state", to_json(prediction.min_bank_state)},
                {"cycle", std::move(cycle)}};
}

json to_json(const ConnectivityReport& report) {
    json cycle = json::array();
    for (const AustrianPartition& state : report.canonical_cycle) {
        cycle.push_back(to_json(state));
    }
    json histogram = json::object();
    for (const auto& [transient, count] : report.transient_histogram) {
        histogram[std::to_string(transient)] = count;
    }
    return json{{"n", report.n},
                {"L", report.L},
                {"state_count", report.state_count},
                {"connected", report.connected},
                {"period", static_cast<long long>(report.canonical_cycle.size())},
                {"max_transient", report.max_transient},
                {"transient_histogram", std::move(histogram)},
                {"canonical_cycle", std::move(cycle)}};
}

json to_json(const FareyEntry& entry) {
    return json{{"index", entry.index},
                {"raw", std::to_string(entry.raw_num) + "/" + std::to_string(entry.raw_den)},
                {"value", entry.value.str()}};
}

std::string farey_line(const FareyEntry& entry) {
    std::ostringstream out;
    out << entry.index << ' ' << entry.raw_num << '/' << entry.raw_den << ' '
        << entry.value.str();
    return out.str();
}

namespace {

std::string literal_of(long long bank, const std::vector<long long>& parts) {
    std::ostringstream out;
    out << '(' << bank << ';';
    for (std::size_t i = 0; i < parts.size(); ++i) {
        out << (i == 0 ? " " : ",") << parts[i];
    }
    out << ')';
    return out.str();
}

}  // namespace

std::string to_literal(const AustrianPartition& state) {
    return literal_of(state.bank(), state.parts());
}

std::string to_literal(const GeneralPartition& g) {
    return literal_of(g.bank, g.parts);
}

namespace {

class LiteralScanner {
public:
    explicit LiteralScanner(std::string_view text) : text_(text) {}

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
        }
    }

    bool consume(char c) {
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    std::size_t pos() const { return pos_; }
    bool done() const { return pos_ >= text_.size(); }

    long long integer(const char* what) {
        const std::size_t start = pos_;
        if (consume('-')) {
            while (pos_ < text_.size() &&
                   std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                ++pos_;
            }
            throw NegativeValue(std::string(what) + " must be non-negative", start);
        }
        if (done() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            throw ParseError(std::string("expected ") + what, pos_);
        }
        long long value = 0;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            const int digit = text_[pos_] - '0';
            if (value > (std::numeric_limits<long long>::max() - digit) / 10) {
                throw ParseError(std::string(what) + " is too large", start);
            }
            value = value * 10 + digit;
            ++pos_;
        }
        return value;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

GeneralPartition parse_state_literal(std::string_view text, int capacity) {
    LiteralScanner scan(text);
    scan.skip_ws();
    if (!scan.consume('(')) throw ParseError("expected '('", scan.pos());
    scan.skip_ws();
    const long long bank = scan.integer("bank deposit");
    scan.skip_ws();
    if (!scan.consume(';')) throw ParseError("expected ';'", scan.pos());
    scan.skip_ws();

    std::vector<long long> parts;
    if (!scan.consume(')')) {
        while (true) {
            const std::size_t at = scan.pos();
            const long long part = scan.integer("part");
            if (part == 0) throw ParseError("part must be positive", at);
            parts.push_back(part);
            scan.skip_ws();
            if (scan.consume(')')) break;
            if (!scan.consume(',')) throw ParseError("expected ',' or ')'", scan.pos());
            scan.skip_ws();
        }
    }
    scan.skip_ws();
    if (!scan.done()) throw ParseError("unexpected trailing input", scan.pos());
    return GeneralPartition(capacity, bank, std::move(parts));
}

std::string partial_sums_csv(const PeriodicSequence& beta, long long k_max) {
    const long long q = beta.period_sum();
    const long long p = beta.period();
    const std::vector<long long> sums = partial_sums(beta, k_max);
    std::ostringstream out;
    out << "k,sum,lower_bound,upper_bound\n";
    for (long long k = 1; k <= k_max; ++k) {
        out << k << ',' << sums[static_cast<std::size_t>(k) - 1] << ','
            << mul_floor_div(q, k, p) << ',' << mul_ceil_div(q, k, p) << '\n';
    }
    return out.str();
}

}  // namespace austrian

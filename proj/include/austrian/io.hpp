#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "austrian/balance.hpp"
#include "austrian/dynamics.hpp"
#include "austrian/explorer.hpp"
#include "austrian/farey.hpp"
#include "austrian/partition.hpp"
#include "austrian/predictor.hpp"

namespace austrian {

using json = nlohmann::ordered_json;

// A state is encoded as {"L": int, "bank": int, "parts": [non-increasing]}.
json to_json(const AustrianPartition& state);
AustrianPartition state_from_json(const json& j);

// {"transient": int, "period": int, "cycle": [state, ...]}
json to_json(const CycleReport& report);

// {"fraction": "q/p", "period": p, "min_bank_state": state, "cycle": [...]}
json to_json(const CyclePrediction& prediction);

json to_json(const ConnectivityReport& report);
json to_json(const FareyEntry& entry);

/// "index raw_num/raw_den reduced_q/reduced_p"
std::string farey_line(const FareyEntry& entry);

/// Parts notation, e.g. "(0; 5,5,4,3,2,2,1)" or "(3;)".
std::string to_literal(const AustrianPartition& state);
std::string to_literal(const GeneralPartition& g);

/// Parses "(bank; part,part,...)" with optional whitespace; parts may be
/// empty. Throws ParseError with the offending position, or NegativeValue
/// for negative integers. Parts need not be sorted on input.
GeneralPartition parse_state_literal(std::string_view text, int capacity);

/// CSV rows "k,sum,lower_bound,upper_bound" for k = 1..k_max, where the
/// bounds are floor(qk/p) and ceil(qk/p) for the word's own density q/p.
/// Feed this to a plotter to see how a word tracks its bounding lines.
std::string partial_sums_csv(const PeriodicSequence& beta, long long k_max);

}  // namespace austrian

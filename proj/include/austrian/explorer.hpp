#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "austrian/fraction.hpp"
#include "austrian/partition.hpp"

namespace austrian {

/// Outcome of exhaustively iterating every state of one (n, L) cell.
struct ConnectivityReport {
    long long n = 0;
    int L = 1;
    long long state_count = 0;
    bool connected = false;
    std::vector<AustrianPartition> canonical_cycle;  // min-bank rotation
    long long max_transient = 0;
    std::map<long long, long long> transient_histogram;  // transient -> states
};

/// Runs every state of the cell to its cycle, computing each state's
/// successor exactly once (one pass over the functional graph), and reports
/// whether all states reach the same cycle. connected = false is reported,
/// not thrown: it would falsify the library, and the caller decides what to
/// do with that.
ConnectivityReport verify_connectivity(long long n, int L);

/// One row of a parameter sweep. `error` is empty on success; a failed cell
/// records its message here and never aborts the sweep.
struct SweepRow {
    long long n = 0;
    int L = 1;
    long long state_count = 0;
    long long period = 0;
    Fraction fraction;
    long long max_transient = 0;
    bool connected = false;
    bool matches_prediction = false;
    std::string error;
};

/// Evaluates every cell of the inclusive ranges, cells running concurrently
/// on `jobs` threads (0 = hardware concurrency). Rows reach the sink in
/// (L, n) order no matter which cells finish first. Each row also carries
/// the closed-form prediction cross-check for its cell.
void sweep(long long n_lo, long long n_hi, int L_lo, int L_hi,
           const std::function<void(const SweepRow&)>& sink, int jobs = 0);

std::vector<SweepRow> sweep(long long n_lo, long long n_hi, int L_lo, int L_hi,
                            int jobs = 0);

std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRow& row);

/// DOT digraph of the cell's state graph: one node per state labeled in
/// parts notation, one edge per step, cycle nodes drawn as double circles.
/// Throws TooLarge when the cell holds more than node_cap states.
std::string export_state_graph(long long n, int L, long long node_cap = 5000);

}  // namespace austrian

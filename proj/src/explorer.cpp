#include "austrian/explorer.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <optional>
#include <sstream>
#include <thread>
#include <unordered_map>

#include "austrian/dynamics.hpp"
#include "austrian/errors.hpp"
#include "austrian/io.hpp"
#include "austrian/predictor.hpp"

namespace austrian {

namespace {

// The cell's functional graph, resolved in one pass: each state's successor
// is computed exactly once, then every node learns its cycle and distance.
struct CellGraph {
    std::vector<AustrianPartition> states;       // enumeration order
    std::vector<std::size_t> succ;
    std::vector<long long> transient;
    std::vector<std::size_t> cycle_id;
    std::vector<std::vector<std::size_t>> cycles;  // node ids in step order
};

CellGraph resolve_cell(long long n, int L) {
    CellGraph graph;
    graph.states = enumerate_all(n, L);

    std::unordered_map<AustrianPartition, std::size_t, PartitionHash> index;
    index.reserve(graph.states.size());
    for (std::size_t i = 0; i < graph.states.size(); ++i) {
        index.emplace(graph.states[i], i);
    }

    graph.succ.resize(graph.states.size());
    for (std::size_t i = 0; i < graph.states.size(); ++i) {
        const auto it = index.find(step(graph.states[i]));
        if (it == index.end()) {
            throw InternalInconsistency("step left the enumerated state space");
        }
        graph.succ[i] = it->second;
    }

    graph.transient.assign(graph.states.size(), 0);
    graph.cycle_id.assign(graph.states.size(), 0);
    std::vector<unsigned char> status(graph.states.size(), 0);  // 0 new, 1 on path, 2 done
    std::vector<std::size_t> path;
    for (std::size_t start = 0; start < graph.states.size(); ++start) {
        if (status[start] == 2) continue;
        path.clear();
        std::size_t node = start;
        while (status[node] == 0) {
            status[node] = 1;
            path.push_back(node);
            node = graph.succ[node];
        }
        std::size_t unwind_from = path.size();
        if (status[node] == 1) {
            // closed a brand-new cycle at `node`
            const auto entry = std::find(path.begin(), path.end(), node) - path.begin();
            std::vector<std::size_t> cycle(path.begin() + entry, path.end());
            const std::size_t id = graph.cycles.size();
            for (std::size_t member : cycle) {
                status[member] = 2;
                graph.transient[member] = 0;
                graph.cycle_id[member] = id;
            }
            graph.cycles.push_back(std::move(cycle));
            unwind_from = static_cast<std::size_t>(entry);
        }
        for (std::size_t i = unwind_from; i-- > 0;) {
            const std::size_t member = path[i];
            status[member] = 2;
            graph.transient[member] = graph.transient[graph.succ[member]] + 1;
            graph.cycle_id[member] = graph.cycle_id[graph.succ[member]];
        }
    }
    return graph;
}

CycleReport report_for(const CellGraph& graph, std::size_t cycle_id) {
    CycleReport report;
    report.transient_length = 0;
    report.period = static_cast<long long>(graph.cycles[cycle_id].size());
    for (std::size_t node : graph.cycles[cycle_id]) {
        report.cycle_states.push_back(graph.states[node]);
    }
    return report;
}

}  // namespace

ConnectivityReport verify_connectivity(long long n, int L) {
    const CellGraph graph = resolve_cell(n, L);

    ConnectivityReport report;
    report.n = n;
    report.L = L;
    report.state_count = static_cast<long long>(graph.states.size());
    report.connected = graph.cycles.size() == 1;
    report.canonical_cycle = canonical_rotation(report_for(graph, 0));
    for (long long t : graph.transient) {
        report.max_transient = std::max(report.max_transient, t);
        ++report.transient_histogram[t];
    }
    return report;
}

void sweep(long long n_lo, long long n_hi, int L_lo, int L_hi,
           const std::function<void(const SweepRow&)>& sink, int jobs) {
    std::vector<std::pair<int, long long>> cells;
    for (int L = L_lo; L <= L_hi; ++L) {
        for (long long n = n_lo; n <= n_hi; ++n) {
            cells.emplace_back(L, n);
        }
    }
    if (cells.empty()) return;

    std::vector<std::optional<SweepRow>> results(cells.size());
    std::mutex emit_mutex;
    std::size_t next_to_emit = 0;

    auto run_cell = [](int L, long long n) {
        SweepRow row;
        row.n = n;
        row.L = L;
        try {
            const ConnectivityReport report = verify_connectivity(n, L);
            const CyclePrediction prediction = predict_cycle(n, L);
            row.state_count = report.state_count;
            row.period = static_cast<long long>(report.canonical_cycle.size());
            row.fraction = prediction.fraction;
            row.max_transient = report.max_transient;
            row.connected = report.connected;
            row.matches_prediction = report.canonical_cycle == prediction.cycle_states;
        } catch (const std::exception& e) {
            row.error = e.what();
        }
        return row;
    };

    auto store_and_flush = [&](std::size_t cell, SweepRow row) {
        std::lock_guard<std::mutex> lock(emit_mutex);
        results[cell] = std::move(row);
        while (next_to_emit < results.size() && results[next_to_emit].has_value()) {
            sink(*results[next_to_emit]);
            results[next_to_emit].reset();  // rows can be large; drop after emit
            ++next_to_emit;
        }
    };

    if (jobs <= 0) {
        jobs = static_cast<int>(std::thread::hardware_concurrency());
        if (jobs < 1) jobs = 1;
    }
    jobs = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(jobs), cells.size()));

    if (jobs == 1) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            store_and_flush(i, run_cell(cells[i].first, cells[i].second));
        }
        return;
    }

    std::atomic<std::size_t> cursor{0};
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(jobs));
    for (int w = 0; w < jobs; ++w) {
        workers.emplace_back([&]() {
            while (true) {
                const std::size_t i = cursor.fetch_add(1);
                if (i >= cells.size()) return;
                store_and_flush(i, run_cell(cells[i].first, cells[i].second));
            }
        });
    }
    for (std::thread& worker : workers) worker.join();
}

std::vector<SweepRow> sweep(long long n_lo, long long n_hi, int L_lo, int L_hi,
                            int jobs) {
    std::vector<SweepRow> rows;
    sweep(n_lo, n_hi, L_lo, L_hi,
          [&rows](const SweepRow& row) { rows.push_back(row); }, jobs);
    return rows;
}

std::string sweep_csv_header() {
    return "n,L,state_count,period,fraction,max_transient,connected";
}

std::string sweep_csv_row(const SweepRow& row) {
    std::ostringstream out;
    if (!row.error.empty()) {
        // failed cell: zeros plus the message as a trailing extra field
        std::string message = row.error;
        for (char& c : message) {
            if (c == ',' || c == '\n' || c == '\r') c = ' ';
        }
        out << row.n << ',' << row.L << ",0,0,,0,false," << message;
        return out.str();
    }
    out << row.n << ',' << row.L << ',' << row.state_count << ',' << row.period
        << ',' << row.fraction.str() << ',' << row.max_transient << ','
        << (row.connected ? "true" : "false");
    return out.str();
}

std::string export_state_graph(long long n, int L, long long node_cap) {
    if (node_cap < 1) throw std::invalid_argument("node cap must be positive");
    long long seen = 0;
    enumerate_all(n, L, [&seen, node_cap](const AustrianPartition&) {
        return ++seen <= node_cap;
    });
    if (seen > node_cap) {
        throw TooLarge("state graph for n=" + std::to_string(n) + ", L=" +
                       std::to_string(L) + " exceeds the cap of " +
                       std::to_string(node_cap) + " nodes");
    }

    const CellGraph graph = resolve_cell(n, L);
    std::vector<bool> on_cycle(graph.states.size(), false);
    for (const auto& cycle : graph.cycles) {
        for (std::size_t node : cycle) on_cycle[node] = true;
    }

    std::ostringstream out;
    out << "digraph states {\n";
    out << "  label=\"n=" << n << " L=" << L << "\";\n";
    for (std::size_t i = 0; i < graph.states.size(); ++i) {
        out << "  s" << i << " [label=\"" << to_literal(graph.states[i]) << "\"";
        if (on_cycle[i]) out << ",shape=doublecircle";
        out << "];\n";
    }
    for (std::size_t i = 0; i < graph.states.size(); ++i) {
        out << "  s" << i << " -> s" << graph.succ[i] << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace austrian

// austrian: command line front end for the cycle library.

#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "austrian/dynamics.hpp"
#include "austrian/explorer.hpp"
#include "austrian/farey.hpp"
#include "austrian/io.hpp"
#include "austrian/predictor.hpp"

namespace {

using austrian::json;

std::vector<long long> parse_word(const std::string& text) {
    std::vector<long long> word;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(text.substr(pos), &used);
        } catch (const std::exception&) {
            throw austrian::ParseError("expected integer in word", pos);
        }
        if (value < 0) throw austrian::NegativeValue("word entries must be non-negative", pos);
        word.push_back(value);
        pos += used;
        if (pos < text.size()) {
            if (text[pos] != ',') throw austrian::ParseError("expected ','", pos);
            ++pos;
        }
    }
    if (word.empty()) throw austrian::ParseError("empty word", 0);
    return word;
}

struct Output {
    std::ofstream file;
    std::ostream* stream = &std::cout;

    explicit Output(const std::string& path) {
        if (path.empty()) return;
        file.open(path);
        if (!file) throw austrian::Error("cannot open output file: " + path);
        stream = &file;
    }
};

void emit_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

void print_cycle(std::ostream& out, const std::vector<austrian::AustrianPartition>& states) {
    out << "cycle:\n";
    for (const auto& state : states) {
        out << "  " << austrian::to_literal(state) << '\n';
    }
}

int run_simulate(const std::string& literal, int L, const std::string& format, std::ostream& out) {
    const austrian::GeneralPartition start = austrian::parse_state_literal(literal, L);
    long long lead_in = 0;
    austrian::AustrianPartition state = [&] {
        if (start.is_austrian()) return start.to_austrian();
        austrian::NormalizeResult norm = austrian::normalize(start);
        lead_in = norm.steps;
        return norm.state;
    }();
    austrian::CycleReport report = austrian::find_cycle(state);
    report.transient_length += lead_in;
    if (format == "json") {
        emit_json(out, austrian::to_json(report));
    } else {
        out << "transient " << report.transient_length << '\n'
            << "period " << report.period << '\n';
        print_cycle(out, report.cycle_states);
    }
    return 0;
}

int run_predict(long long n, int L, const std::string& format, std::ostream& out) {
    const austrian::CyclePrediction prediction = austrian::predict_cycle(n, L);
    if (format == "json") {
        emit_json(out, austrian::to_json(prediction));
    } else {
        out << "fraction " << prediction.fraction.str() << '\n'
            << "period " << prediction.period << '\n'
            << "min bank state " << austrian::to_literal(prediction.min_bank_state) << '\n';
        print_cycle(out, prediction.cycle_states);
    }
    return 0;
}

int run_verify(long long n, int L, const std::string& format, std::ostream& out) {
    const austrian::ConnectivityReport report = austrian::verify_connectivity(n, L);
    if (format == "json") {
        emit_json(out, austrian::to_json(report));
    } else {
        out << "n " << report.n << '\n'
            << "L " << report.L << '\n'
            << "states " << report.state_count << '\n'
            << "connected " << (report.connected ? "true" : "false") << '\n'
            << "period " << report.canonical_cycle.size() << '\n'
            << "max transient " << report.max_transient << '\n';
        print_cycle(out, report.canonical_cycle);
    }
    return report.connected ? 0 : 2;
}

int run_sweep(long long n_lo, long long n_hi, int L_lo, int L_hi, int jobs, std::ostream& out) {
    out << austrian::sweep_csv_header() << '\n';
    bool falsified = false;
    austrian::sweep(n_lo, n_hi, L_lo, L_hi,
                    [&](const austrian::SweepRow& row) {
                        out << austrian::sweep_csv_row(row) << '\n';
                        if (!row.connected || !row.matches_prediction || !row.error.empty()) {
                            falsified = true;
                        }
                    },
                    jobs);
    return falsified ? 2 : 0;
}

int run_farey(int L, long long count, const std::string& format, std::ostream& out) {
    const std::vector<austrian::FareyEntry> entries = austrian::full_farey(L, count);
    if (format == "json") {
        json array = json::array();
        for (const austrian::FareyEntry& entry : entries) array.push_back(austrian::to_json(entry));
        emit_json(out, array);
    } else {
        for (const austrian::FareyEntry& entry : entries) {
            out << austrian::farey_line(entry) << '\n';
        }
    }
    return 0;
}

int run_partial_sums(const std::string& word_text, long long k_max, std::ostream& out) {
    const austrian::PeriodicSequence beta(parse_word(word_text));
    out << austrian::partial_sums_csv(beta, k_max);
    return 0;
}

int run_graph(long long n, int L, long long cap, std::ostream& out) {
    out << austrian::export_state_graph(n, L, cap);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Austrian Solitaire cycle tool"};
    app.require_subcommand(1);

    std::string output_path;
    app.add_option("-o,--output", output_path, "write output to a file instead of stdout");

    std::string literal;
    int sim_L = 0;
    std::string sim_format = "json";
    CLI::App* simulate = app.add_subcommand("simulate", "iterate a state until its cycle is found");
    simulate->add_option("state", literal, "state literal, e.g. \"(0; 5,5,4,3,2,2,1)\"")->required();
    simulate->add_option("--L", sim_L, "largest allowed pile size")->required()
        ->check(CLI::PositiveNumber);
    simulate->add_option("--format", sim_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    long long pre_n = 0;
    int pre_L = 0;
    std::string pre_format = "json";
    CLI::App* predict = app.add_subcommand("predict", "closed-form cycle for a deck size");
    predict->add_option("n", pre_n, "deck size")->required()->check(CLI::NonNegativeNumber);
    predict->add_option("L", pre_L, "largest allowed pile size")->required()
        ->check(CLI::PositiveNumber);
    predict->add_option("--format", pre_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    long long ver_n = 0;
    int ver_L = 0;
    std::string ver_format = "json";
    CLI::App* verify = app.add_subcommand("verify", "exhaustively check that one cycle attracts every state");
    verify->add_option("n", ver_n, "deck size")->required()->check(CLI::NonNegativeNumber);
    verify->add_option("L", ver_L, "largest allowed pile size")->required()
        ->check(CLI::PositiveNumber);
    verify->add_option("--format", ver_format, "json or text")
        ->check(CLI::IsMember({"json", "text"}));

    long long sw_n_lo = 0, sw_n_hi = 0;
    int sw_L_lo = 1, sw_L_hi = 1, sw_jobs = 0;
    CLI::App* sweep = app.add_subcommand("sweep", "verify a whole grid of (n, L) cells, CSV output");
    sweep->add_option("n_lo", sw_n_lo, "smallest deck size")->required()->check(CLI::NonNegativeNumber);
    sweep->add_option("n_hi", sw_n_hi, "largest deck size")->required()->check(CLI::NonNegativeNumber);
    sweep->add_option("L_lo", sw_L_lo, "smallest pile bound")->required()->check(CLI::PositiveNumber);
    sweep->add_option("L_hi", sw_L_hi, "largest pile bound")->required()->check(CLI::PositiveNumber);
    sweep->add_option("--jobs", sw_jobs, "worker threads (0 = all cores)")
        ->check(CLI::NonNegativeNumber);

    int far_L = 0;
    long long far_count = 0;
    std::string far_format = "text";
    CLI::App* farey = app.add_subcommand("farey", "leading entries of the full Farey sequence");
    farey->add_option("L", far_L, "denominator bound")->required()->check(CLI::PositiveNumber);
    farey->add_option("count", far_count, "how many entries")->required()
        ->check(CLI::PositiveNumber);
    farey->add_option("--format", far_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    std::string word_text;
    long long ps_k_max = 0;
    CLI::App* partial = app.add_subcommand("partial-sums",
                                           "partial sums of a periodic word with slope bounds, CSV output");
    partial->add_option("word", word_text, "comma separated entries, e.g. \"2,1,1\"")->required();
    partial->add_option("k_max", ps_k_max, "number of rows")->required()->check(CLI::PositiveNumber);

    long long gr_n = 0;
    int gr_L = 0;
    long long gr_cap = 5000;
    CLI::App* graph = app.add_subcommand("graph", "DOT digraph of the full state space");
    graph->add_option("n", gr_n, "deck size")->required()->check(CLI::NonNegativeNumber);
    graph->add_option("L", gr_L, "largest allowed pile size")->required()->check(CLI::PositiveNumber);
    graph->add_option("--cap", gr_cap, "refuse above this many states")->check(CLI::PositiveNumber);

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; })) {
        sub->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        Output output(output_path);
        std::ostream& out = *output.stream;
        if (simulate->parsed()) return run_simulate(literal, sim_L, sim_format, out);
        if (predict->parsed()) return run_predict(pre_n, pre_L, pre_format, out);
        if (verify->parsed()) return run_verify(ver_n, ver_L, ver_format, out);
        if (sweep->parsed()) return run_sweep(sw_n_lo, sw_n_hi, sw_L_lo, sw_L_hi, sw_jobs, out);
        if (farey->parsed()) return run_farey(far_L, far_count, far_format, out);
        if (partial->parsed()) return run_partial_sums(word_text, ps_k_max, out);
        if (graph->parsed()) return run_graph(gr_n, gr_L, gr_cap, out);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

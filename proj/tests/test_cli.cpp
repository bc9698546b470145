// Integration checks that drive the installed binary the way a user would.
// Takes the path to the CLI as argv[1] and reports one line per failure.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>

#include <json.hpp>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::cerr << "FAILED: " << what << '\n';
    }
}

struct RunResult {
    int status = -1;
    std::string output;
};

RunResult run(const std::string& command) {
    RunResult result;
    FILE* pipe = popen((command + " 2>/dev/null").c_str(), "r");
    if (pipe == nullptr) return result;
    char buffer[4096];
    std::size_t got = 0;
    while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) {
        result.output.append(buffer, got);
    }
    const int rc = pclose(pipe);
    if (WIFEXITED(rc)) result.status = WEXITSTATUS(rc);
    return result;
}

long long count_lines(const std::string& text) {
    long long lines = 0;
    for (char c : text) {
        if (c == '\n') ++lines;
    }
    return lines;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: test_cli <path-to-cli>\n";
        return 2;
    }
    const std::string cli = std::string("\"") + argv[1] + "\"";

    {
        const auto r = run(cli + " predict 22 5");
        expect(r.status == 0, "predict 22 5 exits 0");
        const auto j = nlohmann::json::parse(r.output, nullptr, false);
        expect(!j.is_discarded(), "predict output is JSON");
        expect(j["fraction"] == "4/3", "predict fraction 4/3");
        expect(j["period"] == 3, "predict period 3");
        expect(j["min_bank_state"]["bank"] == 0, "predict min bank 0");
        expect(j["min_bank_state"]["parts"] == nlohmann::json({5, 5, 4, 3, 2, 2, 1}),
               "predict min bank parts");
        expect(j["cycle"].size() == 3, "predict cycle size");

        const auto again = run(cli + " predict 22 5");
        expect(again.output == r.output, "predict output is reproducible byte for byte");
    }
    {
        const auto r = run(cli + " predict 139 14 --format text");
        expect(r.status == 0, "predict text exits 0");
        expect(r.output.find("fraction 5/4") != std::string::npos, "predict text fraction");
        expect(r.output.find("period 4") != std::string::npos, "predict text period");
        expect(r.output.find("(2; 14,14,13,12,11,10,10,9,8,7,6,6,5,4,3,2,2,1)") !=
                   std::string::npos,
               "predict text min bank state");
    }
    {
        const auto r = run(cli + " simulate \"(3;)\" --L 5");
        expect(r.status == 0, "simulate fixed point exits 0");
        const auto j = nlohmann::json::parse(r.output, nullptr, false);
        expect(j["transient"] == 0, "fixed point has no transient");
        expect(j["period"] == 1, "fixed point period 1");
        expect(j["cycle"][0]["bank"] == 3, "fixed point bank");
    }
    {
        // one oversized pile of 22: seventeen shrinking turns, then two more
        // inside the proper state space
        const auto r = run(cli + " simulate \"(0; 22)\" --L 5");
        expect(r.status == 0, "simulate oversized exits 0");
        const auto j = nlohmann::json::parse(r.output, nullptr, false);
        expect(j["transient"] == 19, "oversized transient 19");
        expect(j["period"] == 3, "oversized period 3");
    }
    {
        const auto r = run(cli + " verify 22 5");
        expect(r.status == 0, "verify exits 0");
        const auto j = nlohmann::json::parse(r.output, nullptr, false);
        expect(j["connected"] == true, "verify connected");
        expect(j["state_count"] == 973, "verify state count");
        expect(j["max_transient"] == 9, "verify max transient");

        const auto text = run(cli + " verify 22 5 --format text");
        expect(text.output.find("connected true") != std::string::npos, "verify text");
    }
    {
        const auto a = run(cli + " sweep 0 10 1 3 --jobs 1");
        const auto b = run(cli + " sweep 0 10 1 3 --jobs 4");
        expect(a.status == 0, "sweep exits 0");
        expect(a.output == b.output, "sweep output independent of thread count");
        expect(count_lines(a.output) == 1 + 11 * 3, "sweep row count");
        expect(a.output.rfind("n,L,state_count,period,fraction,max_transient,connected\n",
                              0) == 0,
               "sweep header");
    }
    {
        const auto r = run(cli + " farey 5 24");
        expect(r.status == 0, "farey exits 0");
        expect(count_lines(r.output) == 24, "farey line count");
        expect(r.output.rfind("0 0/1 0/1\n", 0) == 0, "farey first line");
        expect(r.output.find("\n22 4/3 4/3\n") != std::string::npos, "farey line 22");

        const auto j = nlohmann::json::parse(run(cli + " farey 5 24 --format json").output,
                                             nullptr, false);
        expect(j.is_array() && j.size() == 24, "farey json array");
        expect(j[21]["raw"] == "5/4", "farey json entry 21");
    }
    {
        const auto r = run(cli + " partial-sums \"2,1,1\" 6");
        expect(r.status == 0, "partial-sums exits 0");
        expect(r.output ==
                   "k,sum,lower_bound,upper_bound\n"
                   "1,2,1,2\n2,3,2,3\n3,4,4,4\n4,6,5,6\n5,7,6,7\n6,8,8,8\n",
               "partial-sums CSV");
    }
    {
        const auto r = run(cli + " graph 3 2");
        expect(r.status == 0, "graph exits 0");
        expect(r.output.rfind("digraph states {", 0) == 0, "graph DOT opener");
        expect(r.output.find("doublecircle") != std::string::npos, "graph marks cycle");
        expect(run(cli + " graph 22 5 --cap 10").status == 1, "graph over cap exits 1");
    }
    {
        const std::string path =
            "/tmp/austrian_cli_test_" + std::to_string(getpid()) + ".json";
        const auto direct = run(cli + " predict 22 5");
        const auto redirected = run(cli + " predict 22 5 -o " + path);
        expect(redirected.status == 0, "predict -o exits 0");
        expect(redirected.output.empty(), "predict -o keeps stdout quiet");
        std::ifstream file(path);
        std::stringstream content;
        content << file.rdbuf();
        expect(content.str() == direct.output, "predict -o writes the same bytes");
        std::remove(path.c_str());
    }
    {
        expect(run(cli).status == 1, "no subcommand exits 1");
        expect(run(cli + " shuffle").status == 1, "unknown subcommand exits 1");
        expect(run(cli + " predict 22").status == 1, "missing argument exits 1");
        expect(run(cli + " predict 22 5 --format dot").status == 1, "wrong format exits 1");
        expect(run(cli + " predict -3 5").status == 1, "negative deck exits 1");
        expect(run(cli + " simulate \"(0; zz)\" --L 5").status == 1, "bad literal exits 1");
        expect(run(cli + " simulate \"(0; 3)\" --L 0").status == 1, "zero capacity exits 1");
        expect(run(cli + " --help").status == 0, "help exits 0");
    }

    if (failures == 0) {
        std::cout << "test_cli: all checks passed\n";
        return 0;
    }
    std::cerr << "test_cli: " << failures << " check(s) failed\n";
    return 1;
}

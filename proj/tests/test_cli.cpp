// Drives the installed CLI binary end to end.  The binary path comes from
// argv[1] (wired up by CMake), falling back to the FOCKPARITY_CLI env var.

#define DOCTEST_CONFIG_IMPLEMENT
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include <nlohmann/json.hpp>

namespace {

std::string g_cli;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = g_cli + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) {
        r.out.append(buf.data(), got);
    }
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream f(p, std::ios::binary);
    REQUIRE(f.good());
    return std::string(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("verify suite passes and reports json") {
    const auto tmp = std::filesystem::temp_directory_path() / "fockparity_verify.json";
    const RunResult r =
        run_cli("verify --suite hermite --out " + tmp.string());
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("[PASS] hermite-recurrence-vs-expansion") != std::string::npos);

    const nlohmann::json j = nlohmann::json::parse(slurp(tmp));
    CHECK(j.at("suite") == "hermite");
    CHECK(j.at("failed") == 0);
    CHECK(j.at("checks").at(0).at("pass") == true);
    std::filesystem::remove(tmp);
}

TEST_CASE("verify exit codes: failure and usage") {
    // absurd tolerance forces a check failure -> exit 1
    CHECK(run_cli("verify --suite hermite --tol hermite-recurrence-vs-expansion=1e-30")
              .exit_code == 1);
    CHECK(run_cli("verify --suite bogus").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("verify --suite hermite --cutoff 999").exit_code == 2);
    CHECK(run_cli("sweep --input bogus:1 --phi 0:1:3 --cutoff 6").exit_code == 2);
    CHECK(run_cli("sweep --input noon:1 --phi 0:1:3 --cutoff 6 --bs1 sideways").exit_code == 2);
}

TEST_CASE("compare balanced conjugation against the fock sum") {
    const RunResult r = run_cli("compare --method-a conjugation:pi/2,0 --method-b fock:0 "
                                "--cutoff 8 --block 7");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("maxdiff").get<double>() <= 1e-10);
    CHECK(j.at("hermiticity_a").get<double>() <= 1e-10);
    CHECK(j.at("hermiticity_b").get<double>() <= 1e-14);
    CHECK(j.at("block") == 7);
    CHECK(j.at("grid").at("radius") == 7.0);
}

TEST_CASE("dump-operator emits the documented schema") {
    const RunResult r = run_cli("dump-operator --op fock:0 --cutoff 2");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j.at("cutoff") == 2);
    REQUIRE(j.at("entries").size() == 16);
    // swap permutation: rows (00,01,10,11) map to columns (00,10,01,11)
    const int want_col[4] = {0, 2, 1, 3};
    for (int row = 0; row < 4; ++row) {
        for (int col = 0; col < 4; ++col) {
            const auto& e = j.at("entries").at(row * 4 + col);
            const double want = (col == want_col[row]) ? 1.0 : 0.0;
            CHECK(e.at(0).get<double>() == want);
            CHECK(e.at(1).get<double>() == 0.0);
        }
    }
}

TEST_CASE("sweep emits byte-stable csv with small closed-form error") {
    const auto tmp1 = std::filesystem::temp_directory_path() / "fockparity_sweep1.csv";
    const auto tmp2 = std::filesystem::temp_directory_path() / "fockparity_sweep2.csv";
    const std::string args =
        "sweep --input noon:1 --bs1 none --detect fock:-pi/2 --phi 0:2pi:21 --cutoff 8 --out ";
    CHECK(run_cli(args + tmp1.string()).exit_code == 0);
    CHECK(run_cli(args + tmp2.string()).exit_code == 0);

    const std::string csv = slurp(tmp1);
    CHECK(csv == slurp(tmp2));
    CHECK(csv.rfind("phi,signal,closed_form,abs_err,sensitivity\n", 0) == 0);

    // 21 rows plus header
    std::size_t lines = 0;
    for (char c : csv) lines += (c == '\n');
    CHECK(lines == 22);

    // every abs_err entry stays at closed-form agreement level
    std::istringstream is(csv);
    std::string line;
    std::getline(is, line);
    while (std::getline(is, line)) {
        std::size_t start = 0;
        std::vector<std::string> cells;
        while (true) {
            const auto pos = line.find(',', start);
            if (pos == std::string::npos) {
                cells.push_back(line.substr(start));
                break;
            }
            cells.push_back(line.substr(start, pos - start));
            start = pos + 1;
        }
        REQUIRE(cells.size() == 5);
        CHECK(std::abs(std::stod(cells[3])) <= 1e-8);
        CHECK(std::abs(std::stod(cells[1])) <= 1.0 + 1e-8);
    }
    std::filesystem::remove(tmp1);
    std::filesystem::remove(tmp2);
}

TEST_CASE("angle tokens parse in ranges and detections") {
    const RunResult r =
        run_cli("sweep --input noon:2 --detect fock:pi/2 --phi -pi/2:pi/2:5 --cutoff 8");
    CHECK(r.exit_code == 0);
    CHECK(r.out.rfind("phi,", 0) == 0);
}

int main(int argc, char** argv) {
    if (argc > 1 && argv[1][0] != '-') {
        g_cli = argv[1];
    } else if (const char* env = std::getenv("FOCKPARITY_CLI")) {
        g_cli = env;
    } else {
        std::fprintf(stderr, "test_cli: pass the CLI path as argv[1] or set FOCKPARITY_CLI\n");
        return 1;
    }
    doctest::Context ctx;
    return ctx.run();
}

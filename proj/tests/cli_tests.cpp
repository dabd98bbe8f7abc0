// End-to-end checks of the command-line binary.  The binary path arrives in
// ABCROOTS_BIN (set by the test harness).

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <string>

namespace {

using nlohmann::json;

struct RunResult {
    int exit_code = -1;
    std::string output; // stdout + stderr
};

std::string binary_path() {
    const char* env = std::getenv("ABCROOTS_BIN");
    REQUIRE_MESSAGE(env != nullptr, "ABCROOTS_BIN must point at the CLI binary");
    return env;
}

RunResult run(const std::string& args) {
    std::string cmd = binary_path() + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult result;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) result.output.append(buf.data(), got);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

std::filesystem::path temp_path(const char* tag) {
    static std::mt19937_64 rng(std::random_device{}());
    return std::filesystem::temp_directory_path() /
           ("abcroots_cli_" + std::string(tag) + "_" + std::to_string(rng()));
}

struct TempFile {
    std::filesystem::path path;
    explicit TempFile(const char* tag) : path(temp_path(tag)) { std::filesystem::remove(path); }
    ~TempFile() { std::filesystem::remove(path); }
};

} // namespace

TEST_CASE("expand prints the bracketed coefficients and convergents") {
    auto r = run("expand --k 2 --s 3 --terms 4");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("[1; 3, 1, 5]") != std::string::npos);
    CHECK(r.output.find("29/23") != std::string::npos);

    auto record = run("expand --k 109 --s 5 --terms 5");
    CHECK(record.exit_code == 0);
    CHECK(record.output.find("[2; 1, 1, 4, 77733]") != std::string::npos);
}

TEST_CASE("expand emits machine-readable output under --json") {
    auto r = run("--json expand --k 2 --s 3 --terms 10");
    CHECK(r.exit_code == 0);
    auto j = json::parse(r.output);
    CHECK(j["coefficients"] ==
          json::array({"1", "3", "1", "5", "1", "1", "4", "1", "1", "8"}));
    CHECK(j["convergents"][3]["p"] == "29");
}

TEST_CASE("usage errors exit with code 2") {
    CHECK(run("expand --k 4 --s 2 --terms 1").exit_code == 2); // perfect square
    CHECK(run("expand --k banana --s 3 --terms 1").exit_code == 2);
    CHECK(run("expand --k 2 --s 3").exit_code == 2); // missing --terms
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("--help").exit_code == 0);
}

TEST_CASE("precision exhaustion maps to exit code 3") {
    auto r = run("expand --k 2 --s 3 --terms 10 --bits-per-term 2 --max-doublings 0");
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("error") != std::string::npos);
}

TEST_CASE("equations subcommand prints the normalized triples") {
    auto r = run("equations --k 2 --s 3 --terms 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("64 = 54 + 10") != std::string::npos);
    CHECK(r.output.find("abc = (5, 27, 32)") != std::string::npos);
    CHECK(r.output.find("128 = 125 + 3") != std::string::npos);
}

TEST_CASE("roth-table reproduces the tabulated bounds") {
    auto r = run("--json roth-table --k 2 --eps-roth 0.4,0.5,1");
    CHECK(r.exit_code == 0);
    auto rows = json::parse(r.output);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0]["eps_abc"] == "2/13");
    CHECK(std::abs(rows[0]["bound"].get<double>() - 15.03) < 0.02);
    CHECK(rows[1]["eps_abc"] == "1/5");
    CHECK(std::abs(rows[1]["bound"].get<double>() - 13.16) < 0.02);
    CHECK(rows[2]["eps_abc"] == "1/2");
    CHECK(std::abs(rows[2]["bound"].get<double>() - 6.78) < 0.02);

    auto zero = json::parse(run("--json roth-table --k 2 --eps-roth 0").output);
    CHECK(std::abs(zero[0]["bound"].get<double>() - 25.60) < 0.02);
    CHECK(zero[0]["flags"] == json::array({"paper-discrepancy"}));
}

TEST_CASE("ridout lists the S-integer approximants") {
    auto r = run("ridout --s 2 --k 2 --primes 2,3 --eps 1 --K 1 --depth 40");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("144") != std::string::npos);
    CHECK(r.output.find("3/2 17/12") != std::string::npos);

    auto none = run("ridout --s 2 --k 2 --primes 3 --depth 40");
    CHECK(none.output.find("none") != std::string::npos);

    CHECK(run("ridout --s 2 --k 2 --primes 4 --depth 40").exit_code == 2); // 4 is not prime
}

TEST_CASE("scan is resumable and mirrors to csv") {
    TempFile out("scan_jsonl");
    TempFile csv("scan_csv");
    auto first = run("scan --s 3 --k-min 2 --k-max 2 --depth 3 --out " + out.path.string() +
                     " --csv " + csv.path.string());
    CHECK(first.exit_code == 0);
    CHECK(first.output.find("wrote 3 new records") != std::string::npos);

    auto second = run("scan --s 3 --k-min 2 --k-max 2 --depth 3 --out " + out.path.string());
    CHECK(second.exit_code == 0);
    CHECK(second.output.find("wrote 0 new records") != std::string::npos);

    std::ifstream jsonl(out.path);
    std::string line;
    int json_lines = 0;
    while (std::getline(jsonl, line))
        if (!line.empty()) ++json_lines;
    CHECK(json_lines == 3);

    std::ifstream csv_in(csv.path);
    int csv_lines = 0;
    while (std::getline(csv_in, line))
        if (!line.empty()) ++csv_lines;
    CHECK(csv_lines == 4); // header + records
}

TEST_CASE("unwritable output paths exit with code 4") {
    auto r = run("scan --s 3 --k-min 2 --k-max 2 --depth 2 --out /nonexistent_dir/x.jsonl");
    CHECK(r.exit_code == 4);
}

TEST_CASE("verify exits zero on success and five on violations") {
    auto ok = run("verify --suite gains --s 3 --k-min 2 --k-max 10 --depth 10");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("violations 0") != std::string::npos);

    auto bad = run("verify --suite roth-form --k 2 --eps-roth 0 --c-inverse 0.5 --depth 5");
    CHECK(bad.exit_code == 5);
    CHECK(bad.output.find("VIOLATION") != std::string::npos);

    auto korobov = run("verify --suite korobov --korobov-limit 2000");
    CHECK(korobov.exit_code == 0);
}

TEST_CASE("config files set defaults and explicit flags win") {
    TempFile cfg("config");
    {
        std::ofstream out(cfg.path);
        out << "[expand]\nk=2\ns=3\nterms=4\n";
    }
    auto from_config = run("--config " + cfg.path.string() + " expand");
    CHECK(from_config.exit_code == 0);
    CHECK(from_config.output.find("[1; 3, 1, 5]") != std::string::npos);

    auto overridden = run("--config " + cfg.path.string() + " expand --terms 2");
    CHECK(overridden.exit_code == 0);
    CHECK(overridden.output.find("[1; 3]") != std::string::npos);
}

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include "doctest.h"
#include "json.hpp"
#include "stripsym/sim.hpp"

#ifndef STRIPSYM_CLI_PATH
#error "STRIPSYM_CLI_PATH must point at the built binary"
#endif

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args) {
    const std::string cmd = std::string(STRIPSYM_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

const std::string kTable1Csv =
    "family,L,m,min_dets,max_dets,off_block,non_local,n_det,n_fault\n"
    "XZZX,3,3,1,2,0,0,4,9\n"
    "XZZX,4,5,1,3,0,0,9,16\n"
    "XZZX,5,7,1,4,0,0,16,25\n"
    "DWCC,3,3,2,2,0,0,6,9\n"
    "DWCC,4,4,3,3,0,0,12,16\n"
    "DWCC,5,5,4,4,0,0,20,25\n"
    "X3Z3,3,2,2,2,0,0,4,9\n"
    "X3Z3,4,2,3,3,0,0,6,16\n"
    "X3Z3,5,3,4,4,0,0,12,25\n"
    "DSR,3,3,1,2,0,0,4,9\n"
    "DSR,4,5,1,3,0,0,9,16\n"
    "DSR,5,7,1,4,0,0,16,25\n"
    "CSR,3,3,2,2,0,0,6,9\n"
    "CSR,4,4,3,3,0,0,12,16\n"
    "CSR,5,5,4,4,0,0,20,25\n"
    "HCSR,3,2,2,2,0,0,4,9\n"
    "HCSR,4,2,3,3,0,0,6,16\n"
    "HCSR,5,3,4,4,0,0,12,25\n";

}  // namespace

TEST_CASE("stats emits the frozen statistics table, byte-identically across runs") {
    const CliResult a = run_cli("stats --families all --L 3,4,5");
    CHECK(a.exit_code == 0);
    CHECK(a.out == kTable1Csv);
    const CliResult b = run_cli("stats --families all --L 3,4,5");
    CHECK(b.out == a.out);

    const CliResult one = run_cli("stats --families XZZX --L 4");
    CHECK(one.out ==
          "family,L,m,min_dets,max_dets,off_block,non_local,n_det,n_fault\nXZZX,4,5,1,3,0,0,9,16\n");
}

TEST_CASE("stats rejects unknown families and bad sizes") {
    CHECK(run_cli("stats --families BOGUS").exit_code == 2);
    CHECK(run_cli("stats --families CSR --L 1").exit_code == 2);
    CHECK(run_cli("stats --families CSR --L x").exit_code == 2);
}

TEST_CASE("unknown flags and formats are rejected") {
    CHECK(run_cli("stats --bogus-flag").exit_code == 2);
    CHECK(run_cli("stats --format xml").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);  // a subcommand is required
}

TEST_CASE("check exit codes") {
    CHECK(run_cli("check --family CSR --L 4 --virtual-boundaries").exit_code == 0);
    CHECK(run_cli("check --family CSR --L 4").exit_code == 1);
    CHECK(run_cli("check --file /nonexistent.detmodel").exit_code == 2);
    CHECK(run_cli("check --family CSR").exit_code == 2);  // missing --L

    SUBCASE("handcrafted non-local fixture fails") {
        const std::string path = "/tmp/stripsym_nonlocal.detmodel";
        std::ofstream f(path);
        f << "DETMODEL v1\ndets 2\nfaults 1\nstrip 0 0\nstrip 1 1\nfault 0 0 1\n";
        f.close();
        const CliResult r = run_cli("check --file " + path + " --virtual-boundaries");
        CHECK(r.exit_code == 1);
        CHECK(r.out.find("strip_symmetric,false") != std::string::npos);
        std::remove(path.c_str());
    }
}

TEST_CASE("simulate is deterministic and carries the analytic column") {
    const std::string cmd =
        "simulate --family DSR --L 5 --p 0.1 --shots 2000 --seed 7 --decoder stripwise";
    const CliResult a = run_cli(cmd);
    const CliResult b = run_cli(cmd);
    CHECK(a.exit_code == 0);
    CHECK(a.out == b.out);

    char expect[64];
    std::snprintf(expect, sizeof expect, "%.12g", stripsym::analytic_rep(5, 0.1));
    CHECK(a.out.find(expect) != std::string::npos);

    CHECK(run_cli("simulate --family DSR --L 5 --p 0.6 --shots 10 --seed 1").exit_code == 2);
    CHECK(run_cli("simulate --family DSR --L 5 --p 0.1 --shots 10").exit_code == 2);  // no seed
}

TEST_CASE("decode emits the correction in both formats") {
    const CliResult csv = run_cli("decode --family CSR --L 3 --syndrome 001000");
    CHECK(csv.exit_code == 0);
    CHECK(csv.out.find("correction,010000000") != std::string::npos);
    CHECK(csv.out.find("weight,1") != std::string::npos);

    const CliResult js =
        run_cli("decode --family CSR --L 3 --syndrome 001000 --format json");
    const nlohmann::json j = nlohmann::json::parse(js.out);
    CHECK(j["correction"] == "010000000");
    CHECK(j["weight"] == 1);
    CHECK(j["logical_parities"].size() == 1);

    CHECK(run_cli("decode --family CSR --L 3 --syndrome 01").exit_code == 2);  // wrong length
    CHECK(run_cli("decode --family CSR --L 3 --syndrome 0a1000").exit_code == 2);
}

TEST_CASE("bench output") {
    const CliResult r = run_cli("bench --family DSR --L 5 --alpha 2 --format json");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["N"] == 16);
    CHECK(j["m"] == 7);
    CHECK(j["mono_work"] == 256.0);
    CHECK(j["strip_work"] == 44.0);
    CHECK(run_cli("bench --family DSR --L 5 --alpha 1").exit_code == 2);
}

TEST_CASE("deform reports a passing check for link parents") {
    const CliResult r = run_cli("deform --family CSR --L 3 --cliffords H --basis Z");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("ok,true") != std::string::npos);
    const CliResult hs = run_cli("deform --family DSR --L 3 --cliffords HS,I --format json");
    CHECK(hs.exit_code == 0);
    CHECK(nlohmann::json::parse(hs.out)["ok"] == true);
    CHECK(run_cli("deform --family CSR --L 3 --cliffords Q").exit_code == 2);
    CHECK(run_cli("deform --cliffords H").exit_code == 2);
}

TEST_CASE("deform accepts a detector file of Pauli strings") {
    const std::string path = "/tmp/stripsym_paulis.txt";
    std::ofstream f(path);
    // two 3-qubit strips of Z-links, one line per detector
    f << "# chain detectors\nZZIIII\nIZZIII\nIIIZZI\nIIIIZZ\n";
    f.close();
    const CliResult r = run_cli(
        "deform --detectors-file " + path +
        " --det-strips 0,0,1,1 --qubit-strips 0,0,0,1,1,1 --cliffords H --format json");
    CHECK(r.exit_code == 0);
    const nlohmann::json j = nlohmann::json::parse(r.out);
    CHECK(j["ok"] == true);
    CHECK(j["parent_axes"] == nlohmann::json::array({"X", "X"}));

    CHECK(run_cli("deform --detectors-file " + path + " --det-strips 0,0,1,1").exit_code == 2);
    std::remove(path.c_str());
}

TEST_CASE("export round-trips through check") {
    const std::string path = "/tmp/stripsym_export_test.detmodel";
    const CliResult w = run_cli("export --family DSR --L 4 --out " + path);
    CHECK(w.exit_code == 0);
    std::ifstream f(path);
    std::string first;
    std::getline(f, first);
    CHECK(first == "DETMODEL v1");
    std::string second;
    std::getline(f, second);
    CHECK(second == "# family=DSR L=4");
    f.close();
    const CliResult c = run_cli("check --file " + path + " --virtual-boundaries");
    CHECK(c.exit_code == 0);
    std::remove(path.c_str());
}

TEST_CASE("every command's json output parses and round-trips") {
    const std::vector<std::string> cmds = {
        "stats --families CSR --L 3 --format json",
        "check --family CSR --L 3 --virtual-boundaries --format json",
        "decode --family CSR --L 3 --syndrome 000000 --format json",
        "simulate --family CSR --L 3 --p 0.1 --shots 100 --seed 3 --format json",
        "bench --family CSR --L 3 --format json",
        "deform --family CSR --L 3 --cliffords H --basis Z --format json",
        "export --family CSR --L 3 --format json",
    };
    for (const std::string& cmd : cmds) {
        CAPTURE(cmd);
        const CliResult r = run_cli(cmd);
        CHECK(r.exit_code == 0);
        const nlohmann::json j = nlohmann::json::parse(r.out);
        CHECK(nlohmann::json::parse(j.dump()) == j);
    }
}

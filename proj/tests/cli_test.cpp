#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>
#include <sys/wait.h>

#include <bchf/bchf.hpp>

using nlohmann::json;
using namespace bchf;

namespace {

struct run_result {
    int status = -1;
    std::string text;
};

// Run the CLI binary with the given arguments, merging stderr into the capture.
run_result run_cli(const std::string& args) {
    const std::string cmd = std::string(BCHF_CLI_PATH) + " " + args + " 2>&1";
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    run_result res;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, p)) > 0) res.text.append(buf, n);
    const int rc = pclose(p);
    res.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return res;
}

std::vector<std::string> split_lines(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string line;
    while (std::getline(ss, line))
        if (!line.empty()) out.push_back(line);
    return out;
}

}  // namespace

TEST_CASE("eval c reports the free-case constant") {
    const run_result r = run_cli("eval --what c --rank 1 --lambda 0.7+0.3i");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.text);
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "eval");
    CHECK(j["value"][0].get<double>() == Catch::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(j["value"][1].get<double>()) < 1e-15);
}

TEST_CASE("eval F at k=0 matches the exponential average") {
    const run_result r = run_cli(
        "eval --what F --rank 2 --lambda 0.3+0.4i,1.1-0.2i --x 0.6,1.4 --height 8");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.text);
    const cplx got(j["value"][0].get<double>(), j["value"][1].get<double>());
    const cvec lam{cplx(0.3, 0.4), cplx(1.1, -0.2)};
    const rvec x{0.6, 1.4};
    cplx want = 0.0;
    for (const auto& w : weyl_group(2)) {
        const cvec wl = w.apply(lam, 2);
        want += std::exp(wl[0] * x[0] + wl[1] * x[1]);
    }
    want /= 8.0;
    CHECK(std::abs(got - want) < 1e-10 * std::abs(want));
}

TEST_CASE("spectra emits the canonical rank-2 table") {
    const std::string args = "spectra --rank 2 --ks 3 --km 0.5 --kl -3";
    const run_result r = run_cli(args);
    REQUIRE(r.status == 0);
    const auto lines = split_lines(r.text);
    REQUIRE(lines.size() == 5);
    CHECK(lines[0] == "i,xi_1,xi_2,d,weyl_theta_order,stabilizer_order");
    CHECK(lines[1].rfind("0,", 0) == 0);

    // Parse back the masses: i=0 carries d=1, the facet atoms 120 and 24,
    // the full atom 20480.
    std::vector<double> masses;
    for (size_t i = 1; i < lines.size(); ++i) {
        std::stringstream ss(lines[i]);
        std::string cell;
        std::vector<std::string> cells;
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        REQUIRE(cells.size() == 6);
        masses.push_back(std::stod(cells[3]));
    }
    CHECK(masses[0] == Catch::Approx(1.0));
    CHECK(((masses[1] == Catch::Approx(120.0) && masses[2] == Catch::Approx(24.0)) ||
           (masses[1] == Catch::Approx(24.0) && masses[2] == Catch::Approx(120.0))));
    CHECK(masses[3] == Catch::Approx(20480.0));

    // Determinism: a second run is byte-identical.
    const run_result r2 = run_cli(args);
    CHECK(r2.text == r.text);
}

TEST_CASE("negative medium multiplicity is rejected as out of regime") {
    const run_result r = run_cli("spectra --rank 2 --ks 3 --km -0.5 --kl -3");
    CHECK(r.status == 1);
    CHECK(r.text.find("regime") != std::string::npos);
}

TEST_CASE("malformed spectral parameter yields a config error") {
    const run_result r = run_cli("eval --what c --rank 1 --lambda zebra");
    CHECK(r.status == 1);
}

TEST_CASE("density at the full atom matches the spectra table") {
    const run_result r = run_cli(
        "density --rank 2 --ks 3 --km 0.5 --kl -3 --lambda -3,-2 --ndisc 2");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.text);
    CHECK(j["value"].get<double>() == Catch::Approx(20480.0).epsilon(1e-9));
}

TEST_CASE("residue check passes at generic multiplicity") {
    const run_result r = run_cli(
        "residue-check --rank 2 --ks 3.3 --km 0.6 --kl -2.4 --i 1 --xi -1.5 --tol 1e-6");
    REQUIRE(r.status == 0);
    const json j = json::parse(r.text);
    CHECK(j["pass"].get<bool>());
    CHECK(j["residual"].get<double>() <= 1e-6);
}

TEST_CASE("verify gamma suite passes") {
    const run_result r = run_cli("verify --suite gamma");
    CHECK(r.status == 0);
    CHECK(r.text.find("FAIL") == std::string::npos);
}

TEST_CASE("output file option writes the record") {
    const std::string path = "cli_test_out.json";
    std::remove(path.c_str());
    const run_result r =
        run_cli("eval --what delta --rank 1 --ks 3 --kl -2 --x 0.9 --out " + path);
    REQUIRE(r.status == 0);
    std::ifstream f(path);
    REQUIRE(f.good());
    const json j = json::parse(f);
    const double want = weight_delta({0.9}, multiplicity{3.0, 0.0, -2.0}, 1);
    CHECK(j["value"].get<double>() == Catch::Approx(want).epsilon(1e-13));
    std::remove(path.c_str());
}

#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "percap/io.hpp"

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(PERCAP_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
        out.append(buf.data(), n);
    const int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("capacity subcommand writes the expected CSV") {
    const auto r = run("capacity --lmin 0 --lmax 10 --points 11 --tol 1e-12");
    CHECK(r.exit_code == 0);
    const auto t = percap::io::parse_csv(r.out);
    REQUIRE(t.columns ==
            std::vector<std::string>{"lambda", "alpha_c", "dalpha_dlambda",
                                     "k_used"});
    REQUIRE(t.rows.size() == 11);
    CHECK(t.rows[0][0] == 0.0);
    CHECK(t.rows[0][1] == 2.0);
    for (const auto& row : t.rows) CHECK(row[1] >= 2.0 - 1e-9);
}

TEST_CASE("capacity flat-region derivative") {
    const auto r = run("capacity --lmin 0.1 --lmax 1.6 --points 16");
    CHECK(r.exit_code == 0);
    for (const auto& row : percap::io::parse_csv(r.out).rows)
        CHECK(std::abs(row[2]) < 0.1);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("capacity --points 0").exit_code == 2);
    CHECK(run("capacity --lmin 5 --lmax 1").exit_code == 2);
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("mc --samples 0").exit_code == 2);
    CHECK(run("mc --alphas bogus").exit_code == 2);
    CHECK(run("saddle --lambda 1").exit_code == 2);
}

TEST_CASE("saddle regimes") {
    const auto ok = run("saddle --lambda 0.01 --alpha 1.9");
    CHECK(ok.exit_code == 0);
    const auto t = percap::io::parse_csv(ok.out);
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0][2] > 0.5);
    CHECK(t.rows[0][2] < 1.0);

    CHECK(run("saddle --lambda 0.01 --alpha 2.5").exit_code == 4);
    // alpha(5, q) never comes down to 2.5 (its minimum over q is ~48),
    // so this load has no saddle either.
    CHECK(run("saddle --lambda 5 --alpha 2.5").exit_code == 4);
}

TEST_CASE("limitcheck reports gaps") {
    const auto r = run("limitcheck --lambdas 0.5 --qs 0.99 0.999 0.9999");
    CHECK(r.exit_code == 0);
    const auto t = percap::io::parse_csv(r.out);
    REQUIRE(t.rows.size() == 1);
    CHECK(t.rows[0][3] <= 0.02);
}

TEST_CASE("mc determinism and seed header") {
    const std::string args =
        "mc --n 10 --lambda 1e-6 --alphas 0.5:1.5:0.5 --trials 5 "
        "--samples 1000 --seed 7";
    const auto a = run(args + " -o mc_a.csv");
    const auto b = run(args + " -o mc_b.csv");
    CHECK(a.exit_code == 0);
    CHECK(b.exit_code == 0);
    const std::string fa = slurp("mc_a.csv"), fb = slurp("mc_b.csv");
    CHECK(fa == fb);
    CHECK(fa.find("# seed=7\n") == 0);
    std::remove("mc_a.csv");
    std::remove("mc_b.csv");
}

TEST_CASE("mc fraction-positive is monotone nonincreasing") {
    const auto r = run(
        "mc --n 12 --lambda 1e-6 --alphas 0.5:3.0:0.5 --trials 40 "
        "--samples 4000 --seed 7");
    CHECK(r.exit_code == 0);
    const auto t = percap::io::parse_csv(r.out);
    for (std::size_t i = 1; i < t.rows.size(); ++i)
        CHECK(t.rows[i][2] <= t.rows[i - 1][2] + 1e-12);
}

TEST_CASE("verify-circuit") {
    CHECK(run("verify-circuit --n 6 --cases 50 --seed 3").exit_code == 0);
    CHECK(run("verify-circuit --n 13").exit_code == 2);
}

TEST_CASE("json format") {
    const auto r = run("--format json capacity --lmin 0 --lmax 1 --points 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("\"alpha_c\"") != std::string::npos);
}

TEST_CASE("io failure exits 3") {
    CHECK(run("capacity --points 3 -o /nonexistent-dir/out.csv").exit_code ==
          3);
}

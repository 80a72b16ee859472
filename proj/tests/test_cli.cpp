#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace morq;

namespace {

struct RunResult {
    int exit_code;
    std::string stdout_text;
};

RunResult run(const std::string& args) {
    std::string out_path = "cli_test_stdout.txt";
    std::string cmd = std::string(MORQ_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
    int rc = std::system(cmd.c_str());
    std::ifstream f(out_path);
    std::stringstream ss;
    ss << f.rdbuf();
    return RunResult{WEXITSTATUS(rc), ss.str()};
}

json parse(const RunResult& r) { return json::parse(r.stdout_text); }

} // namespace

TEST_CASE("construct then check round trip with exit codes") {
    RunResult c = run("construct --r 2 --d1 3 --d2 2 --n 3 --out cli_m.json");
    REQUIRE(c.exit_code == 0);

    RunResult chk = run("check --morphism cli_m.json --lambda1 1/6");
    CHECK(chk.exit_code == 0);
    json j = parse(chk);
    CHECK(j.at("artifact") == "morq");
    CHECK(j.at("result").at("primes_agree") == true);
    for (const auto& pp : j.at("result").at("per_prime")) {
        CHECK(pp.at("king").at("status") == "stable");
        CHECK(pp.at("agree") == true);
        CHECK(pp.at("king").at("witness").is_null());
        CHECK(pp.at("king").at("margins").is_array());
    }

    // properly semistable at the irregular value
    RunResult ps = run("construct --r 2 --d1 3 --d2 2 --n 3 --kappa 1 --out cli_ps.json");
    REQUIRE(ps.exit_code == 0);
    RunResult chk2 = run("check --morphism cli_ps.json --lambda1 1/3");
    CHECK(chk2.exit_code == 0);
    json j2 = parse(chk2);
    CHECK(j2.at("result").at("per_prime")[0].at("king").at("status") ==
          "properly-semistable");
}

TEST_CASE("unstable morphisms exit with code 1") {
    // hand-written zero morphism
    MorphismType t = morq::testing::example31_type();
    Morphism<RationalField> zero = zero_morphism(RationalField{}, t);
    std::ofstream f("cli_zero.json");
    f << morphism_to_json(zero).dump();
    f.close();
    RunResult chk = run("check --morphism cli_zero.json --lambda1 1/6");
    CHECK(chk.exit_code == 1);
    CHECK(parse(chk).at("result").at("per_prime")[0].at("king").at("status") ==
          "unstable");
}

TEST_CASE("degenerate types exit with code 2") {
    RunResult r = run("chambers --r 2 --n 4 --degrees 3,2 --mults 2,2");
    CHECK(r.exit_code == 2);
    json j = parse(r);
    CHECK(j.at("result").at("degenerate") == true);
}

TEST_CASE("chamber listing matches the library") {
    RunResult r = run("chambers --r 2 --n 3 --degrees 2,1 --mults 1,3");
    REQUIRE(r.exit_code == 0);
    json j = parse(r);
    auto cands = j.at("result").at("irregular_candidates");
    REQUIRE(cands.size() == 7); // kappa/6 for kappa = 0..6
    CHECK(cands[1] == "1/6");
    CHECK(j.at("result").at("chambers").size() == 6);
}

TEST_CASE("embed reports the implication for stable points") {
    run("construct --r 2 --d1 3 --d2 2 --n 3 --out cli_m.json");
    RunResult r = run("embed --morphism cli_m.json --lambda1 1/6 --prime 2");
    REQUIRE(r.exit_code == 0);
    json j = parse(r);
    CHECK(j.at("result").at("reduced").at("status") == "stable");
    CHECK(j.at("result").at("exhaustive").at("status") == "stable");
    CHECK(j.at("result").at("reduced_matches_exhaustive") == true);
    CHECK(j.at("result").contains("implication"));

    // alpha2 <= 0 is a gate failure
    RunResult gate = run("embed --morphism cli_m.json --lambda1 1/3 --prime 2");
    CHECK(gate.exit_code == 2);
}

TEST_CASE("embed on a p1 = 10 type runs the reduced route only") {
    MorphismType t = morq::testing::make_type(2, 3, {{2, 1}, {1, 3}});
    Morphism<RationalField> zero = zero_morphism(RationalField{}, t);
    std::ofstream f("cli_s5.json");
    f << morphism_to_json(zero).dump();
    f.close();
    RunResult r = run("embed --morphism cli_s5.json --lambda1 1/20 --prime 2");
    CHECK(r.exit_code == 1); // zero gamma is never semistable
    json j = parse(r);
    CHECK(j.at("result").at("exhaustive").is_null());
    CHECK(j.at("result").at("reduced").at("status") == "unstable");
}

TEST_CASE("certify accepts the JSON input form") {
    json in{{"claim", "4.3"},
            {"type", json{{"r", 2},
                          {"blocks", json::array({json{{"degree", 4}, {"mult", 1}},
                                                  json{{"degree", 3}, {"mult", 2}}})},
                          {"n", 13}}},
            {"polarization",
             json{{"lambdas", json::array({"3/26", "23/52"})}, {"mu", "1/13"}}}};
    std::ofstream f("cli_cert.json");
    f << in.dump();
    f.close();
    RunResult r = run("certify --input cli_cert.json");
    CHECK(r.exit_code == 0);
    CHECK(parse(r).at("result").at("overall") == "certified");
}

TEST_CASE("certify exit codes: certified, not, inapplicable") {
    CHECK(run("certify --claim 4.3 --r 2 --d1 4 --d2 3 --m 1 --n 13 --lambda1 3/26")
              .exit_code == 0);
    CHECK(run("certify --claim 4.3 --r 2 --d1 4 --d2 3 --m 1 --n 13 --lambda1 1/7")
              .exit_code == 1);
    CHECK(run("certify --claim 6.1 --d 1 --m 5 --n 7 --lambda1 1/40").exit_code == 2);
    // degenerate certify input
    CHECK(run("certify --claim 4.2 --r 2 --d1 4 --d2 3 --m 2 --n 4 --lambda1 1/20")
              .exit_code == 2);
}

TEST_CASE("constants subcommand emits a table for custom queries") {
    RunResult r = run("constants --shape custom --m2 2 --d2 1 --adeg 1 --r 1 --i 1 --j 1");
    REQUIRE(r.exit_code == 0);
    json j = parse(r);
    CHECK(j.at("result").at("status") == "exhaustive");
    CHECK(j.at("result").at("value").is_number_integer());
}

TEST_CASE("outputs are byte-identical across repeated runs") {
    std::string args = "check --morphism cli_m.json --lambda1 1/6 --seed 99";
    run("construct --r 2 --d1 3 --d2 2 --n 3 --out cli_m.json");
    RunResult a = run(args);
    RunResult b = run(args);
    CHECK(a.stdout_text == b.stdout_text);

    RunResult c = run("chambers --r 2 --n 3 --degrees 3,2 --mults 1,1 --seed 99");
    RunResult d = run("chambers --r 2 --n 3 --degrees 3,2 --mults 1,1 --seed 99");
    CHECK(c.stdout_text == d.stdout_text);
}

TEST_CASE("internal consistency exit code is reserved and unused on valid input") {
    // exercise a spread of random morphisms through the CLI route: the
    // exhaustive check and the block-form route must agree (exit 3 reserved
    // for their disagreement)
    std::mt19937_64 rng(2024);
    MorphismType t = morq::testing::make_type(2, 3, {{2, 1}, {1, 2}});
    RationalField Q;
    for (int trial = 0; trial < 3; ++trial) {
        Morphism<RationalField> m = zero_morphism(Q, t);
        for (auto& blk : m.blocks)
            for (auto& form : blk.e)
                for (auto& coef : form.coeffs)
                    coef = Rational(static_cast<long>(rng() % 5) - 2);
        std::ofstream f("cli_rand.json");
        f << morphism_to_json(m).dump();
        f.close();
        RunResult r = run("check --morphism cli_rand.json --lambda1 1/5");
        CHECK(r.exit_code != 3);
    }
}

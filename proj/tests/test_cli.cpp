#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "sphereprod/cli.hpp"

using namespace sphereprod;
using cli::Status;

namespace {

std::string data(const std::string& name) { return std::string(SPHEREPROD_TEST_DATA) + "/" + name; }

cli::CommandResult run(std::vector<std::string> args) { return cli::run(args); }

nlohmann::json parsed(const cli::CommandResult& r) { return nlohmann::json::parse(r.output()); }

}  // namespace

TEST_CASE("member") {
    auto r = run({"member", "--group", "w2", data("tau3.mat")});
    CHECK(r.exit_code() == 0);
    auto j = parsed(r);
    CHECK(j["schema"] == cli::kSchemaVersion);
    CHECK(j["command"] == "member");
    CHECK(j["member"] == true);
    CHECK(j["verification"] == "OK");
    CHECK(j["certificate"]["uses_tau"] == true);

    r = run({"member", "--group", "w2", data("e12.mat")});
    CHECK(r.exit_code() == 1);
    CHECK(parsed(r)["reason"].get<std::string>().find("odd") != std::string::npos);

    CHECK(run({"member", "--group", "gamma", data("e12sq.mat")}).exit_code() == 0);
    CHECK(run({"member", "--group", "gamma", "--mod", "3", data("e12sq.mat")}).exit_code() == 1);
    CHECK(run({"member", "--group", "gamma", "-m", "2", data("sl2.mat")}).exit_code() == 1);

    CHECK(run({"member", "--group", "hr", "--k", "5", data("e12sq.mat")}).exit_code() == 0);
    CHECK(run({"member", "--group", "hr", "--k", "5", data("e12.mat")}).exit_code() == 1);
    CHECK(run({"member", "--group", "hr", "--k-class", "even", data("e12sq.mat")}).exit_code() == 1);
    CHECK(run({"member", "--group", "hr", "--k-class", "hopf", data("e12.mat")}).exit_code() == 0);
    CHECK(run({"member", "--group", "hr", data("e12.mat")}).exit_code() == 2);
}

TEST_CASE("coset") {
    auto r = run({"--format", "text", "coset", data("tau3.mat")});
    CHECK(r.exit_code() == 0);
    CHECK(r.output().find("uses_tau: true") != std::string::npos);
    CHECK(r.output().find("OK") != std::string::npos);
    r = run({"--no-verify", "--format", "text", "coset", data("tau3.mat")});
    CHECK(r.output().find("UNVERIFIED") != std::string::npos);
    CHECK(run({"coset", data("e12.mat")}).exit_code() == 1);
}

TEST_CASE("decompose") {
    auto r = run({"decompose", "--target", "gamma2", data("e12.mat")});
    CHECK(r.exit_code() == 1);
    CHECK_FALSE(parsed(r)["reason"].get<std::string>().empty());

    r = run({"--format", "text", "decompose", "--target", "gamma2", data("gamma2.mat")});
    CHECK(r.exit_code() == 0);
    CHECK(r.output() == "NEG E(2,1)^2 E(1,2)^-2 E(2,1)^2\nOK\n");
    r = run({"decompose", "--target", "gamman", data("gamma3.mat")});
    CHECK(r.exit_code() == 0);
    CHECK(parsed(r)["verification"] == "OK");
    r = run({"decompose", "--target", "sln", data("sl2.mat")});
    CHECK(r.exit_code() == 0);
    CHECK(parsed(r)["member"] == true);
    CHECK(run({"decompose", "--target", "gamman", data("tau3.mat")}).exit_code() == 1);
    CHECK(run({"decompose", "--target", "bogus", data("tau3.mat")}).exit_code() == 2);
}

TEST_CASE("verify-identities") {
    auto r = run({"verify-identities", "-n", "4"});
    CHECK(r.exit_code() == 0);
    const auto j = parsed(r);
    REQUIRE(j["families"].size() == 16);
    for (const auto& f : j["families"]) {
        const auto v = f["verdict"].get<std::string>();
        CHECK((v == "VERIFIED" || v.rfind("CORRECTED(", 0) == 0));
    }
    r = run({"--format", "text", "verify-identities", "-n", "3"});
    CHECK(r.output().find("VERIFIED") != std::string::npos);
}

TEST_CASE("obstruction") {
    auto r = run({"obstruction", "--k", "2", data("e12sq.mat")});
    CHECK(r.exit_code() == 1);
    auto j = parsed(r);
    CHECK(j["verdict"] == "blocked");
    REQUIRE(j["witnesses"].size() == 1);
    CHECK(j["witnesses"][0]["s"] == 2);
    r = run({"obstruction", "--k", "5", data("e12sq.mat")});
    CHECK(r.exit_code() == 0);
    CHECK(parsed(r)["verdict"] == "realizable");
    CHECK(run({"obstruction", "--k-class", "hopf", data("e12.mat")}).exit_code() == 0);
    CHECK(run({"obstruction", data("e12.mat")}).exit_code() == 2);
}

TEST_CASE("enumerate and normality") {
    auto r = run({"enumerate", "-n", "2", "-m", "3"});
    CHECK(r.exit_code() == 0);
    CHECK(parsed(r)["order"] == 24);
    CHECK(parsed(run({"enumerate", "-n", "3", "-m", "2"}))["order"] == 168);
    CHECK(parsed(run({"enumerate", "-n", "2", "-m", "3", "--generators", data("e12.mat")}))["order"] == 3);

    r = run({"normality", "-n", "2", "-m", "3", "--subgroup", data("e12.mat")});
    CHECK(r.exit_code() == 1);
    CHECK(parsed(r).contains("violation"));
    r = run({"normality", "-n", "2", "-m", "4", "--subgroup", data("kernel_gens.mat")});
    CHECK(r.exit_code() == 0);
    CHECK(parsed(r)["subgroup_order"] == 8);
    CHECK(run({"normality", "-n", "3", "-m", "4", "--subgroup", data("kernel_gens.mat")}).exit_code() == 2);
}

TEST_CASE("quat-witness") {
    auto r = run({"quat-witness"});
    CHECK(r.exit_code() == 0);
    auto j = parsed(r);
    CHECK(j["confirmed"] == true);
    CHECK(j["error"].get<double>() < 1e-12);
}

TEST_CASE("degree") {
    const std::vector<std::string> args{"degree", "--map", "psi", "--k", "3", "--samples", "20000", "--seed", "9"};
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.exit_code() == 0);
    CHECK(a.output() == b.output());
    auto j = parsed(a);
    CHECK(j["expected"] == 2);
    CHECK(j["rounded"] == 2);
    j = parsed(run({"degree", "--map", "antipodal", "--k", "2", "--samples", "20000"}));
    CHECK(j["rounded"] == -1);
    CHECK(run({"degree", "--map", "psi"}).exit_code() == 2);
}

TEST_CASE("induced and ledger") {
    auto r = run({"induced", "--matrix", data("a3.mat")});
    CHECK(r.exit_code() == 0);
    CHECK(parsed(r)["match"] == true);

    r = run({"ledger"});
    CHECK(r.exit_code() == 0);
    const auto j = parsed(r);
    CHECK(j["entries"].size() >= 9);
    for (const auto& e : j["entries"]) CHECK(e["confirmed"] == true);
}

TEST_CASE("input errors") {
    auto r = run({"frobnicate"});
    CHECK(r.exit_code() == 2);
    CHECK(r.output().find("Usage") != std::string::npos);
    CHECK(run({}).exit_code() == 2);
    CHECK(run({"--help"}).exit_code() == 0);

    r = run({"member", "--group", "w2", data("bad.mat")});
    CHECK(r.exit_code() == 2);
    CHECK(parsed(r).contains("error"));
    CHECK(run({"member", "--group", "w2", data("missing.mat")}).exit_code() == 2);
    CHECK(run({"--format", "yaml", "ledger"}).exit_code() == 2);
    CHECK(run({"enumerate", "-n", "2", "-m", "x"}).exit_code() == 2);
    CHECK(run({"enumerate", "-n", "2", "-m", "1"}).exit_code() == 2);
    CHECK(run({"member", "--group", "hr", "--k-class", "weird", data("e12.mat")}).exit_code() == 2);
}

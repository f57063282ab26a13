#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "liftvf/cli.hpp"
#include "liftvf/fields.hpp"
#include "liftvf/json_io.hpp"

using namespace liftvf;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return CliResult{code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("usage errors exit with code 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"verify"}).code == 2);  // --k is required
    const CliResult low_k = run({"verify", "--k", "1"});
    CHECK(low_k.code == 2);
    CHECK(low_k.err.find("2 <= k") != std::string::npos);
    const CliResult bad_j = run({"fields", "--k", "3", "--family", "1", "--j", "3"});
    CHECK(bad_j.code == 2);
    CHECK(bad_j.err.find("1 <= j <= k-1") != std::string::npos);
    CHECK(run({"fields", "--k", "3", "--j", "1"}).code == 2);
    CHECK(run({"fields", "--k", "3", "--family", "5"}).code == 2);
    CHECK(run({"verify", "--k", "3", "--format", "yaml"}).code == 2);
    CHECK(run({"tangency", "--k", "5"}).code == 2);  // gated behind --slow
    CHECK(run({"membership", "--k", "6"}).code == 2);
    CHECK(run({"classify", "--k", "3"}).code == 2);  // needs --coeffs or --random
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify subcommand") {
    const CliResult r = run({"verify", "--k", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("xi1_1  PASS") != std::string::npos);
    CHECK(r.out.find("xi_e  PASS") != std::string::npos);
    CHECK(r.out.find("PASS: 4 lift identities") != std::string::npos);

    const CliResult j = run({"verify", "--k", "2", "--format", "json"});
    CHECK(j.code == 0);
    const Json doc = Json::parse(j.out);
    CHECK(doc["ok"] == true);
    CHECK(doc["results"].size() == 4);
}

TEST_CASE("output is byte-identical across runs and thread caps") {
    setenv("LIFTVF_THREADS", "1", 1);
    const CliResult a = run({"verify", "--k", "3", "--max-k", "4"});
    setenv("LIFTVF_THREADS", "4", 1);
    const CliResult b = run({"verify", "--k", "3", "--max-k", "4"});
    unsetenv("LIFTVF_THREADS");
    CHECK(a.out == b.out);
    const CliResult c = run({"classify", "--k", "3", "--random", "5", "--seed", "7"});
    const CliResult d = run({"classify", "--k", "3", "--random", "5", "--seed", "7"});
    CHECK(c.out == d.out);
    CHECK(c.code == 0);
}

TEST_CASE("fields text output golden") {
    const CliResult r = run({"fields", "--k", "3", "--family", "euler"});
    CHECK(r.code == 0);
    CHECK(r.out ==
          "xi_e (k=3)\n"
          "  U1: 2*U1\n"
          "  V1: 2*V1\n"
          "  V2: V2\n"
          "  W1: 3*W1\n"
          "  W2: 3*W2\n");
}

TEST_CASE("image golden line") {
    const CliResult r = run({"image", "--k", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "h_V(k=2) = W2^2 - V1^2*W1\n");
}

TEST_CASE("fields emits parseable JSON that round-trips") {
    const CliResult r =
        run({"fields", "--k", "3", "--family", "1", "--j", "1", "--format", "json"});
    REQUIRE(r.code == 0);
    const Json doc = Json::parse(r.out);
    REQUIRE(doc["fields"].size() == 1);
    const auto [k, field] = field_from_json(doc["fields"][0]);
    CHECK(k == 3);
    const CrossCapContext ctx(3);
    const VectorField expect = family1(ctx, 1);
    CHECK(field.label == expect.label);
    REQUIRE(field.components.size() == expect.components.size());
    for (std::size_t i = 0; i < field.components.size(); ++i)
        CHECK(field.components[i] == expect.components[i]);
}

TEST_CASE("polynomial JSON uses the documented schema") {
    const CrossCapContext ctx(3);
    const auto cod = ctx.codomain_table();
    const Poly p = Rational(-3) * (Poly::variable(cod, 1) * Poly::variable(cod, 3)) +
                   Rational(2) * (Poly::variable(cod, 0) * Poly::variable(cod, 4));
    CHECK(poly_json(p).dump() ==
          R"({"terms":[{"c":"-3","m":{"V1":1,"W1":1}},{"c":"2","m":{"U1":1,"W2":1}}]})");
    CHECK(poly_from_json(poly_json(p), cod) == p);
}

TEST_CASE("JSON round trip for polys and fields") {
    const CrossCapContext ctx(4);
    for (const auto& f : generator_set(ctx)) {
        const auto [k, back] = field_from_json(field_json(ctx.k(), f));
        CHECK(k == 4);
        CHECK(back.label == f.label);
        for (std::size_t i = 0; i < f.components.size(); ++i)
            CHECK(back.components[i] == f.components[i]);
    }
}

TEST_CASE("tangency subcommand") {
    const CliResult r = run({"tangency", "--k", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("xi_e  factor: 4") != std::string::npos);
    CHECK(r.out.find("xi1_1  factor: 0") != std::string::npos);
}

TEST_CASE("leading-terms subcommand") {
    const CliResult r = run({"leading-terms", "--k", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("pairwise distinct: yes") != std::string::npos);
}

TEST_CASE("membership subcommand") {
    const CliResult r = run({"membership", "--k", "2", "--max-degree", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("delta=0") != std::string::npos);
    CHECK(r.out.find("MISMATCH") == std::string::npos);
}

TEST_CASE("classify with a coefficients file") {
    const std::string path = "test_h_k3.json";
    {
        std::ofstream f(path);
        f << R"({"alpha":["1"],"beta":["0","1"],"gamma1":"0","gamma2":"0"})";
    }
    const CliResult r = run({"classify", "--k", "3", "--coeffs", path});
    std::remove(path.c_str());
    CHECK(r.code == 0);
    CHECK(r.out.find("h = V2 + U1") != std::string::npos);
    CHECK(r.out.find("rank = 5 / 5") != std::string::npos);
    CHECK(r.out.find("certified codimension 1: yes") != std::string::npos);

    CHECK(run({"classify", "--k", "3", "--coeffs", "no_such_file.json"}).code == 2);
}

TEST_CASE("classify JSON output parses") {
    const std::string path = "test_h_k3_json.json";
    {
        std::ofstream f(path);
        f << R"({"alpha":["2/3"],"beta":["-1","4"],"gamma1":"1","gamma2":"-5"})";
    }
    const CliResult r = run({"classify", "--k", "3", "--coeffs", path, "--format", "json"});
    std::remove(path.c_str());
    REQUIRE(r.code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["rank"] == 5);
    CHECK(doc["certified"] == true);
    CHECK(doc["h"]["alpha"][0] == "2/3");
    CHECK(doc["mod_m2_forms"].size() == 6);
}

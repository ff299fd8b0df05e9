#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "monoideal/cli.hpp"

using monoideal::cli::Status;
using nlohmann::json;

namespace {

struct Run {
    Status status;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
    std::ostringstream out, err;
    std::istringstream in(input);
    const auto status = monoideal::cli::run(args, out, err, in);
    return {status, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(MONOIDEAL_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& contents) {
    const auto path = std::filesystem::temp_directory_path() / ("monoideal_cli_" + name);
    std::ofstream(path) << contents;
    return path.string();
}

}  // namespace

TEST_CASE("generated cycle piped into the depth oracle") {
    const auto gen = run({"gen", "cycle", "5"});
    REQUIRE(gen.status == Status::ok);
    const auto depth = run({"depth", "--oracle"}, gen.out);
    CHECK(depth.status == Status::ok);
    CHECK(depth.out.rfind("2", 0) == 0);
    const auto dash = run({"depth", "-", "--oracle", "--json"}, gen.out);
    CHECK(json::parse(dash.out).at("value") == 2);
}

TEST_CASE("associated primes of the seven-generator example") {
    const auto r = run({"ass", data("seven_generators.ideal"), "--json"});
    REQUIRE(r.status == Status::ok);
    const auto doc = json::parse(r.out);
    CHECK(doc.at("count") == 13);
    CHECK(doc.at("primes").size() == 13);
    CHECK(run({"ass", data("seven_generators.ideal"), "--compare"}).status == Status::ok);
    const auto dec = run({"ass", data("seven_generators.ideal"), "--decompose", "--json"});
    CHECK(dec.status == Status::ok);
}

TEST_CASE("initial ideal of C5 with both engines") {
    const auto r = run({"ini", data("c5.ideal"), "-f", "x1+x5+x2", "--order", "x1,x5,x2,x3,x4", "--engine", "both"});
    REQUIRE(r.status == Status::ok);
    CHECK(r.out.find("gens x1 x2^2*x4 x2*x3 x2*x5 x3*x4 x4*x5 x5^2") != std::string::npos);
    CHECK(r.out.find("engines: equal") != std::string::npos);
    const auto j = json::parse(run({"ini", data("c5.ideal"), "-f", "x1+x5+x2", "--order", "x1,x5,x2", "--json"}).out);
    CHECK(j.at("agreement") == "equal");
    CHECK(j.at("gens").size() == 7);
}

TEST_CASE("transform engine refuses forms outside its hypotheses") {
    const auto path = temp_file("abc.ideal", "vars a b c\ngens a*b a*c\n");
    CHECK(run({"ini", path, "-f", "a+b", "--engine", "transform"}).status == Status::input_error);
    CHECK(run({"ini", path, "-f", "a+b", "--engine", "buchberger"}).status == Status::ok);
    CHECK(run({"ini", path, "-f", "a+b", "--engine", "both"}).status == Status::ok);
}

TEST_CASE("small commands") {
    const auto c5 = data("c5.ideal");
    const auto mp = json::parse(run({"min-primes", c5, "--json"}).out);
    CHECK(mp.at("primes").size() == 5);
    CHECK(run({"star", data("seven_generators.ideal"), "--var", "c"}).status == Status::ok);
    CHECK(run({"star", c5, "--var", "nope"}).status == Status::input_error);
    const auto pol = run({"polarize", "-"}, "vars x y\ngens x^2*y y^3\n");
    CHECK(pol.status == Status::ok);
    CHECK(pol.out.find("x_1*x_2*y_1") != std::string::npos);
}

TEST_CASE("sequence plans and verification") {
    const auto plan = run({"seq", "cycle", "8", "--json"});
    REQUIRE(plan.status == Status::ok);
    const auto doc = json::parse(plan.out);
    CHECK(doc.at("forms").size() == 3);

    const auto plan_path = temp_file("c8.plan.json", doc.dump());
    const auto ideal_path = temp_file("c8.ideal", run({"gen", "cycle", "8"}).out);
    const auto v = json::parse(run({"seq", "verify", ideal_path, "--plan", plan_path, "--json"}).out);
    CHECK(v.at("verified_length") == 3);

    const auto g = json::parse(run({"seq", "gnm2", "1", "--json"}).out);
    CHECK(g.at("forms").size() == 3);
    CHECK(run({"seq", "verify", ideal_path}).status == Status::input_error);
}

TEST_CASE("depth formulas and oracle") {
    CHECK(json::parse(run({"depth", "cycle", "11", "--json"}).out).at("value") == 4);
    CHECK(json::parse(run({"depth", "path", "7", "--json"}).out).at("value") == 3);
    const auto g = json::parse(run({"depth", "gnm", "5", "2", "--oracle", "--compare", "--json"}).out);
    CHECK(g.at("value") == 3);
    CHECK(g.at("compare") == "agree");
    const auto f2 = json::parse(run({"depth", "cycle", "6", "--oracle", "--field", "gf2", "--json"}).out);
    CHECK(f2.at("field") == "GF(2)");
    CHECK(f2.at("value") == 2);
    CHECK(run({"depth", "cycle", "2"}).status == Status::input_error);
    CHECK(run({"depth", "cycle", "5", "--field", "zz"}).status == Status::input_error);
}

TEST_CASE("JSON output is reproducible") {
    const std::vector<std::string> gen{"gen", "random", "--vars", "5", "--gens", "4", "--max-exp", "3",
                                       "--seed", "42", "--json"};
    const auto a = run(gen).out;
    CHECK(a == run(gen).out);
    auto other = gen;
    other[9] = "43";
    CHECK(a != run(other).out);

    const std::vector<std::string> chk{"check", "--criterion", "4", "5", "--seed", "7", "--json"};
    const auto c1 = run(chk);
    CHECK(c1.status == Status::ok);
    CHECK(c1.out == run(chk).out);
    CHECK(json::parse(c1.out).at("seed") == 7);
}

TEST_CASE("exit codes") {
    CHECK(run({"frobnicate"}).status == Status::input_error);
    CHECK(run({}).status == Status::input_error);
    CHECK(run({"ass", "/nonexistent/ideal"}).status == Status::input_error);
    const auto bad = run({"ass", "-"}, "vars x y\ngens x*z\n");
    CHECK(bad.status == Status::input_error);
    CHECK(bad.err.find("line 2") != std::string::npos);
    CHECK(run({"check", "--criterion", "1", "--timeout", "0"}).status == Status::verification_failed);
    CHECK(run({"check", "--criterion", "9"}).status == Status::input_error);
}

TEST_CASE("every subcommand has help") {
    for (const char* sub : {"gen", "ass", "min-primes", "star", "polarize", "ini", "seq", "depth", "check"}) {
        const auto r = run({sub, "--help"});
        CHECK(r.status == Status::ok);
        CHECK_FALSE((r.out + r.err).empty());
    }
}

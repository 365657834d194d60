#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include <lierealise/cli.hpp>

using namespace lierealise;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

const std::string kSample = std::string(LIEREALISE_SAMPLES_DIR) + "/sl2_pair.json";

std::string temp_file(const std::string &name, const std::string &contents)
{
    const auto path = std::filesystem::temp_directory_path() / ("lierealise_test_" + name);
    std::ofstream(path) << contents;
    return path.string();
}

std::string error_code(const Run &r) { return json::parse(r.err).at("error").at("code").get<std::string>(); }

} // namespace

TEST_CASE("realise the sl2 sample")
{
    auto r = run({"realise", "--input", kSample, "--degree", "3", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j.at("images").at("E").at("components").at("x") == "1");
    CHECK(j.at("images").at("H").at("components").at("x") == "-2*x");
    CHECK(j.at("images").at("F").at("components").at("x") == "-x^2");
    CHECK(j.at("kernel").empty());

    auto text = run({"realise", "--input", kSample, "--degree", "3"});
    CHECK(text.code == 0);
    CHECK(text.out.find("F -> -x^2*p") != std::string::npos);

    // Byte-identical output across runs.
    CHECK(run({"realise", "--input", kSample, "--format", "json"}).out ==
          run({"realise", "--input", kSample, "--format", "json"}).out);
}

TEST_CASE("realisation JSON round-trips through verify and lift")
{
    auto r = run({"realise", "--input", kSample, "--degree", "5", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto path = temp_file("realisation.json", r.out);
    auto v = run({"verify", "--input", path});
    CHECK(v.code == 0);
    CHECK(v.out.find("result: pass") != std::string::npos);
    auto l = run({"lift", "--input", path, "--format", "json"});
    CHECK(l.code == 0);
    CHECK(json::parse(l.out).at("F").at("x").at("value") == "-x^2");

    // Reloading and re-emitting gives the same document.
    auto again = run({"realise", "--input", path, "--format", "json"});
    CHECK(again.out == r.out);

    auto doc = json::parse(r.out);
    doc["images"]["F"]["components"]["x"] = "-x^2 + x^3";
    auto bad = run({"verify", "--input", temp_file("corrupt.json", doc.dump())});
    CHECK(bad.code == 1);
    CHECK(bad.out.find("homomorphism: FAIL") != std::string::npos);
}

TEST_CASE("symmetries of y'' = 0")
{
    auto r = run({"symmetries", "--ode", "y''=0", "--ansatz-degree", "3", "--format", "json"});
    REQUIRE(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j.at("dimension") == 8);
    CHECK(j.at("basis").size() == 8);
    CHECK(j.at("stabilized") == true);

    auto e = run({"symmetries", "--ode", "y''=0", "--entry", "T1.(5)", "--format", "json"});
    CHECK(json::parse(e.out).at("all") == true);
}

TEST_CASE("catalog commands")
{
    auto v = run({"catalog", "verify", "--id", "T2.(1,3)"});
    CHECK(v.code == 0);
    CHECK(v.out.find("T2.(1,3): pass") != std::string::npos);

    auto list = run({"catalog", "list", "--format", "json"});
    CHECK(json::parse(list.out).size() == 19);

    auto show = run({"catalog", "show", "--id", "T2.(1,1)", "--params", "alphas=1:1", "--format", "json"});
    REQUIRE(show.code == 0);
    CHECK(json::parse(show.out).at("instance").at("generators").size() == 3);

    auto all = run({"catalog", "verify"});
    CHECK(all.code == 0);
    CHECK(all.out.find("FAIL") == std::string::npos);

    auto bad = run({"catalog", "show", "--id", "T2.(2,2).case1", "--params", "lambda=0"});
    CHECK(bad.code == 2);
    CHECK(error_code(bad) == "invalid_argument");
}

TEST_CASE("prolong, lift along a variable and report")
{
    auto p = run({"prolong", "--field", "y*p", "--order", "2", "--ode", "y''=0", "--format", "json"});
    REQUIRE(p.code == 0);
    const auto j = json::parse(p.out);
    CHECK(j.at("symmetry") == true);
    CHECK(j.at("images").at("y'") == "(-1)*y'^2");

    auto l = run({"lift", "--entry", "T2.(2,1).case1", "--degree", "10", "--var", "y", "--format", "json"});
    REQUIRE(l.code == 0);
    CHECK(json::parse(l.out).at("X1").at("x").at("status") == "certified_exp_polynomial");

    auto rep = run({"report", "--input", kSample, "--format", "json"});
    REQUIRE(rep.code == 0);
    const auto rj = json::parse(rep.out);
    CHECK(rj.at("simple") == true);
    CHECK(rj.at("pair").at("effective") == true);
}

TEST_CASE("validation failures exit with code 2")
{
    auto missing = run({"realise", "--input", "/nonexistent/pair.json"});
    CHECK(missing.code == 2);
    CHECK(error_code(missing) == "file_not_found");

    auto garbled = run({"realise", "--input", temp_file("garbled.json", "{\"algebra\": [")});
    CHECK(garbled.code == 2);
    CHECK(error_code(garbled) == "parse_error");

    const std::string unknown =
        R"({"algebra": {"dim": 1, "basis": ["E"], "brackets": [{"lhs": "E", "rhs": "Z", "out": {}}]}, "isotropy": []})";
    auto schema = run({"realise", "--input", temp_file("schema.json", unknown)});
    CHECK(schema.code == 2);
    CHECK(error_code(schema) == "schema_violation");

    auto flag = run({"realise", "--input", kSample, "--frobnicate"});
    CHECK(flag.code == 2);
    CHECK(error_code(flag) == "invalid_argument");

    auto degree = run({"realise", "--input", kSample, "--degree", "0"});
    CHECK(degree.code == 2);

    auto entry = run({"catalog", "show", "--id", "T9.(9)"});
    CHECK(error_code(entry) == "unknown_entry");

    auto complement = run({"realise", "--input", kSample, "--complement", "H"});
    CHECK(complement.code == 2);
    CHECK(error_code(complement) == "malformed_pair");

    setenv("LIEREALISE_MAX_DEGREE", "4", 1);
    auto capped = run({"realise", "--input", kSample, "--degree", "5"});
    unsetenv("LIEREALISE_MAX_DEGREE");
    CHECK(capped.code == 2);
    CHECK(error_code(capped) == "degree_limit");

    auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("realise") != std::string::npos);
}

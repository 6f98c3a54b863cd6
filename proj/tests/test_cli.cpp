#include "doctest.h"

#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <tuple>

#include "affvcs/report.hpp"
#include "cli.hpp"

using namespace affvcs;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
    args.push_back("--format");
    args.push_back("json");
    Run r = run(args);
    REQUIRE(r.code == 0);
    return json::parse(r.out);
}

}  // namespace

TEST_CASE("character report JSON round trip") {
    VermaModule m(1, Scalar(5, 2));
    CharacterReport rep{1, Scalar(5, 2), 3, m.character_table(3)};
    json j = to_json(rep);
    CHECK(j["c"] == "5/2");
    CHECK(j["D"] == 3);
    CHECK(j["rows"].size() == rep.rows.size());
    CHECK(character_from_json(j) == rep);
    CHECK(character_from_json(json::parse(j.dump())) == rep);

    CHECK_THROWS_AS(character_from_json(json::parse("[]")), std::invalid_argument);
    CHECK_THROWS_AS(character_from_json(json::parse(R"({"lambda":0,"c":"1","D":1})")), std::invalid_argument);
    CHECK_THROWS_AS(character_from_json(json::parse(R"({"lambda":0,"c":"1/0","D":1,"rows":[]})")),
                    std::invalid_argument);
    CHECK_THROWS_AS(character_from_json(json::parse(R"({"lambda":"x","c":"1","D":1,"rows":[]})")),
                    std::invalid_argument);
}

TEST_CASE("verify command") {
    Run pass = run({"verify", "--lambda", "0", "--c", "1", "--degree", "2"});
    CHECK(pass.code == cli::kPass);
    CHECK(pass.out.find("PASS") != std::string::npos);

    json j = run_json({"verify", "--lambda", "1", "--c", "5/2", "--degree", "2"});
    CHECK(j["status"] == "PASS");
    CHECK(j["failures"].empty());
    CHECK(j["suites"].size() == 9);

    Run bad = run({"verify", "--lambda", "0", "--c", "1", "--degree", "2", "--transcription", "printed",
                   "--format", "json"});
    CHECK(bad.code == cli::kMathFailure);
    json jb = json::parse(bad.out);
    CHECK(jb["status"] == "FAIL");
    CHECK_FALSE(jb["failures"].empty());
    CHECK(jb["failures"][0]["detail"].get<std::string>().find(" on ") != std::string::npos);
}

TEST_CASE("usage errors") {
    CHECK(run({"verify", "--c", "1/0"}).code == cli::kUsageError);
    CHECK(run({"verify", "--c", "one"}).code == cli::kUsageError);
    CHECK(run({"verify", "--lambda", "-1"}).code == cli::kUsageError);
    CHECK(run({"character", "--degree", "-2"}).code == cli::kUsageError);
    CHECK(run({"character", "--format", "xml"}).code == cli::kUsageError);
    CHECK(run({}).code == cli::kUsageError);
    CHECK(run({"frobnicate"}).code == cli::kUsageError);
    CHECK(run({"realize", "g[2]"}).code == cli::kUsageError);
    CHECK(run({"realize"}).code == cli::kUsageError);
    CHECK(run({"map", "--word", "e[2]"}).code == cli::kUsageError);
    CHECK(run({"map", "--word", "e[-1]", "--j", "3", "--lambda", "1"}).code == cli::kUsageError);
    Run capped = run({"character", "--degree", "6", "--cap", "10"});
    CHECK(capped.code == cli::kUsageError);
    CHECK(capped.err.find("cap") != std::string::npos);
    CHECK(run({"--help"}).code == cli::kPass);
}

TEST_CASE("character command") {
    json j = run_json({"character", "--lambda", "0", "--c", "1", "--degree", "1"});
    std::set<std::tuple<int, int, int, int>> rows;
    for (const auto& r : j["rows"])
        rows.insert({r["weight"].get<int>(), r["depth"].get<int>(), r["dimW"].get<int>(), r["rank"].get<int>()});
    CHECK(rows == std::set<std::tuple<int, int, int, int>>{{2, 1, 1, 1}, {0, 1, 1, 1}, {-2, 1, 1, 1}, {0, 0, 1, 1}});

    json j0 = run_json({"character", "--lambda", "3", "--c", "2", "--degree", "0"});
    int total = 0;
    for (const auto& r : j0["rows"]) {
        CHECK(r["depth"] == 0);
        CHECK(r["rank"] == r["dimW"]);
        total += r["dimW"].get<int>();
    }
    CHECK(total == 4);

    json j3 = run_json({"character", "--lambda", "2", "--c", "1/2", "--degree", "3", "--jobs", "3"});
    for (const auto& r : j3["rows"]) CHECK(r["rank"] <= r["dimW"]);
    CHECK(character_from_json(j3).rows.size() == j3["rows"].size());

    Run text = run({"character", "--degree", "1"});
    CHECK(text.code == 0);
    CHECK(text.out.find("dimW") != std::string::npos);
}

TEST_CASE("singular command") {
    json j = run_json({"singular", "--lambda", "0", "--c", "1", "--degree", "2"});
    bool found = false;
    for (const auto& v : j["vectors"]) {
        CHECK(v["maps_to_zero"] == true);
        found |= v["vector"] == "(e[-1]^2 w_0)";
    }
    CHECK(found);

    json generic = run_json({"singular", "--lambda", "1", "--c", "5/2", "--degree", "3"});
    CHECK(generic["vectors"].empty());
}

TEST_CASE("realize command") {
    CHECK(run({"realize", "f[2]"}).out == "xi(f[2]) = ∂/∂z_2\n");
    CHECK(run({"realize", "kappa", "--c", "5/2"}).out == "xi(kappa) = 5/2\n");
    CHECK(run({"realize", "d", "--d0", "7/3", "--degree", "2"}).out ==
          "xi(d) = 7/3 - x_1*∂/∂x_1 - y_1*∂/∂y_1 - z_1*∂/∂z_1 - 2*x_2*∂/∂x_2 - 2*y_2*∂/∂y_2 - 2*z_2*∂/∂z_2\n");
    CHECK(run({"realize", "h[0]", "--degree", "1", "--lambda", "1"}).out ==
          "xi(h[0]) = π0(h) - 2*x_1*∂/∂x_1 + 2*z_1*∂/∂z_1\n");
    json j = run_json({"realize", "f[1]"});
    REQUIRE(j["terms"].size() == 1);
    CHECK(j["terms"][0]["derivative"] == "z_1");
    CHECK(j["terms"][0]["coeff"] == "1");
}

TEST_CASE("map command") {
    json j = run_json({"map", "--lambda", "1", "--c", "1", "--word", "f[-1]"});
    CHECK(j["components"] == json::array({"2*x_1", "-2*y_1"}));
    CHECK(j["maps_to_zero"] == false);

    json zero = run_json({"map", "--lambda", "0", "--c", "1", "--word", "e[-1]^2"});
    CHECK(zero["maps_to_zero"] == true);

    json table = run_json({"map", "--lambda", "0", "--c", "1", "--degree", "3"});
    for (const auto& r : table["rows"]) {
        CHECK(r["rank"] == r["imageRank"]);
        CHECK(r["rank"] == r["realizedDim"]);
    }
}

TEST_CASE("output is deterministic and can go to a file") {
    std::vector<std::string> args{"character", "--lambda", "1", "--c", "1", "--degree", "3", "--format", "json"};
    Run a = run(args);
    args.insert(args.end(), {"--jobs", "4"});
    Run b = run(args);
    CHECK(a.out == b.out);

    const auto path = std::filesystem::temp_directory_path() / "affvcs_cli_test.json";
    Run f = run({"singular", "--degree", "2", "--format", "json", "--out", path.string()});
    CHECK(f.code == 0);
    CHECK(f.out.empty());
    std::ifstream in(path);
    json j = json::parse(in);
    CHECK(j["D"] == 2);
    std::filesystem::remove(path);

    CHECK(run({"character", "--out", "/nonexistent-dir/x.json"}).code == cli::kUsageError);
}

#include <catch_amalgamated.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "kuznum/cli.hpp"
#include "support.hpp"

using namespace kuznum;
using support::cv;
using support::preset;
using support::q;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

nlohmann::json run_json(std::vector<std::string> args) {
    args.insert(args.begin(), "--json");
    const Outcome o = run(std::move(args));
    REQUIRE(o.code == 0);
    return nlohmann::json::parse(o.out);
}

std::filesystem::path temp_file(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path;
}

const char* kConfig = R"({
  "varieties": [
    {"name": "myq3", "dim": 3, "degree": 2, "index": 3,
     "todd": ["1", "3/2", "13/12", "1/2"], "denoms": [1, 1, 2, 12],
     "low_deg_H_generated": true}
  ],
  "default_variety": "myq3"
})";

}  // namespace

TEST_CASE("class tokens") {
    const auto& q3 = preset("q3");
    CHECK(cli::parse_class("O", q3) == line_bundle_class(q3, 0));
    CHECK(cli::parse_class("O(-2)", q3) == line_bundle_class(q3, -2));
    CHECK(cli::parse_class("S", q3) == support::spinor());
    CHECK(cli::parse_class(" 2, -1, 0, 1/12 ", q3) == support::spinor());
    CHECK(cli::parse_class("1,0,-1", q3, true) == cv({1, 0, -1}));
    CHECK_THROWS_AS(cli::parse_class("1,0,-1", q3), ParseError);
    CHECK_THROWS_AS(cli::parse_class("1,0", q3, true), ParseError);
    CHECK_THROWS_AS(cli::parse_class("T", q3), ParseError);
    CHECK_THROWS_AS(cli::parse_class("O(x)", q3), ParseError);
    CHECK_THROWS_AS(cli::parse_class("S", preset("p4")), ParseError);
    CHECK_THROWS_AS(cli::parse_class("1,a,0,0", q3), ParseError);
    const auto list = cli::parse_class_list("O;O(1); O(2)", q3);
    REQUIRE(list.size() == 3);
    CHECK(list[2] == line_bundle_class(q3, 2));
    CHECK(cli::parse_class_list("", q3).empty());
}

TEST_CASE("config files") {
    const cli::Config c = cli::parse_config(kConfig);
    REQUIRE(c.varieties.size() == 1);
    CHECK(c.default_variety == "myq3");
    const VarietyDesc* x = cli::find_variety(c, "MyQ3");
    REQUIRE(x != nullptr);
    CHECK(x->todd == preset("q3").todd);
    CHECK(cli::find_variety(c, "y4") == &preset("y4"));
    CHECK(cli::find_variety(c, "nothing") == nullptr);

    CHECK_THROWS_AS(cli::parse_config("{"), ParseError);
    CHECK_THROWS_AS(cli::parse_config("[]"), ParseError);
    CHECK_THROWS_AS(cli::parse_config(R"({"default_variety": "nope"})"), ParseError);
    CHECK_THROWS_AS(cli::parse_config(R"({"varieties": [{"name": "q3", "dim": 3, "degree": 2, "index": 3,
        "todd": [1, 0, 0, 0], "denoms": [1, 1, 1, 1]}]})"),
                    ParseError);
    CHECK_THROWS_AS(cli::parse_config(R"({"varieties": [{"name": "a", "dim": 3, "degree": 2, "index": 3,
        "todd": [1, 0, 0], "denoms": [1, 1, 1, 1]}]})"),
                    ParseError);
    const std::string twice = R"({"varieties": [
        {"name": "a", "dim": 2, "degree": 1, "index": 3, "todd": [1, "3/2", 1], "denoms": [1, 1, 2]},
        {"name": "A", "dim": 2, "degree": 1, "index": 3, "todd": [1, "3/2", 1], "denoms": [1, 1, 2]}]})";
    CHECK_THROWS_AS(cli::parse_config(twice), ParseError);
}

TEST_CASE("chi and orth reports") {
    CHECK(run_json({"chi", "--variety", "q3", "O", "O(1)"})["result"]["value"] == "5/1");
    const Outcome text = run({"chi", "O", "O(1)"});
    CHECK(text.code == 0);
    CHECK(text.out.find("value: 5") != std::string::npos);

    const auto orth = run_json({"orth"});
    CHECK(orth["variety"] == "q3");
    CHECK(orth["result"]["basis"] == nlohmann::json::parse(R"([["2/1", "-1/1", "0/1", "1/12"]])"));
    CHECK(run_json({"orth", "O", "O(1)", "O(2)"})["result"] == orth["result"]);
    CHECK(run_json({"--variety", "p4", "orth"})["result"]["rank"] == 0);
}

TEST_CASE("tilt reports") {
    const auto z = run_json({"ztilt", "--shift", "1", "S"});
    CHECK(z["result"]["re"] == "-5/8");
    CHECK(z["result"]["im"] == "0/1");
    CHECK(run_json({"heart", "--shift", "1", "--beta", "-1/2", "S"})["result"]["case"] == 2);
    CHECK(run_json({"heart", "--beta=-1/2", "O(1)"})["result"]["case"] == 1);
    CHECK(run_json({"blms"})["result"]["verdict"] == "PASS");
    CHECK(run_json({"blms", "--alpha", "1/2"})["result"]["verdict"] == "FAIL");
    CHECK(run_json({"alpha-range"})["result"]["intervals"][0]["text"] == "(0, 1/2)");
}

TEST_CASE("wall reports") {
    const Outcome nw = run({"nowall", "2,-1,0"});
    CHECK(nw.code == 0);
    CHECK(nw.out.find("(0, 2)") != std::string::npos);
    CHECK(nw.out.find("step: 2") != std::string::npos);
    CHECK(nw.out.find("certified: true") != std::string::npos);

    const auto irr = run_json({"nowall", "1,0,-1"});
    CHECK(irr["result"]["certified"] == false);
    CHECK(irr["result"]["beta0"]["radicand"] == "2/1");

    const auto walls = run_json({"walls", "--max-rank", "3", "--max-c1", "3", "1,0,-1"});
    REQUIRE(walls["result"]["walls"].size() == 1);
    CHECK(walls["result"]["walls"][0]["center"] == "-3/2");
    CHECK(run_json({"walls", "--threads", "3", "1,0,-1"})["result"] == walls["result"]);

    const auto path = std::filesystem::temp_directory_path() / "kuznum_test_walls.svg";
    std::filesystem::remove(path);
    CHECK(run({"--out", path.string(), "svg", "1,0,-1"}).code == 0);
    std::ifstream in(path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    CHECK(buffer.str().find("<path") != std::string::npos);
    std::filesystem::remove(path);
}

TEST_CASE("exit codes") {
    CHECK(run({"--help"}).code == 0);
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"chi", "O"}).code == 2);
    CHECK(run({"chi", "O(x)", "O"}).code == 2);
    CHECK(run({"--variety", "w9", "chi", "O", "O"}).code == 2);
    CHECK(run({"ztilt", "--alpha", "0", "O"}).code == 3);
    const Outcome domain = run({"beta0", "0,1,0"});
    CHECK(domain.code == 3);
    CHECK(domain.err.find("rank not positive") != std::string::npos);
    CHECK(run({"classify", "O"}).code == 3);
    CHECK(run({"heart", "--shift", "4", "S"}).code == 3);
}

TEST_CASE("config through the command line") {
    const auto path = temp_file("kuznum_test_config.json", kConfig);
    const auto j = run_json({"--config", path.string(), "chi", "O", "O(1)"});
    CHECK(j["variety"] == "myq3");
    CHECK(j["result"]["value"] == "5/1");
    CHECK(run({"--config", (path.string() + ".missing"), "chi", "O", "O"}).code == 2);
    std::filesystem::remove(path);
}

TEST_CASE("installed binary") {
    const std::string cmd = std::string(KUZNUM_CLI_PATH) + " --json chi --variety q3 O 'O(1)'";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[256];
    while (fgets(buf, sizeof buf, pipe) != nullptr) out += buf;
    const int status = pclose(pipe);
    CHECK(WEXITSTATUS(status) == 0);
    CHECK(nlohmann::json::parse(out)["result"]["value"] == "5/1");

    const std::string bad = std::string(KUZNUM_CLI_PATH) + " beta0 0,1,0 2>/dev/null";
    CHECK(WEXITSTATUS(system(bad.c_str())) == 3);
}
